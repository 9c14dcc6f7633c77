"""Pin structure decisions for Lefschetz fibrations over the disk.

A fibration is its regular fiber plus the ordered mod-4 homology classes
of its vanishing cycles.  A Pin- structure on the total space is the same
thing as a minus enhancement of the fiber taking the value 2 on every
vanishing cycle; a Pin+ structure is a plus enhancement taking the value 1
on every cycle.  Writing an unknown enhancement as the base one plus a
correction turns either condition into an affine linear system over Z2,
decided by comparing the rank of the coefficient matrix with the rank of
its augmentation.  Structures, when they exist, form a free orbit under
the subgroup of fiber cohomology classes annihilating all cycles.

Non-existence of Pin- is also certified combinatorially: it is equivalent
to a dependent family of cycles, one of them homologous mod 2 to the sum
of the others, whose size-plus-pairwise-intersection parity comes out
even.  :func:`pin_minus_witness_search` finds such a family exhaustively
and serves as an independent oracle for the linear-algebra route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import finite_linalg as fl
from . import surfaces as sf
from .charclasses import EmbeddedSurfaceData
from .errors import InputError, InvariantViolation


@dataclass(frozen=True)
class LefschetzFibration:
    """Regular fiber plus ordered vanishing-cycle classes over Z4.

    Every cycle must be two-sided in the fiber: its mod-2 reduction has
    even self-intersection.  Mod-2 data is derived by reduction where
    needed.  An empty cycle list is legal and means the product fibration.
    """

    fiber: sf.SurfaceModel
    cycles: tuple[sf.HomologyClass, ...] = ()

    def __post_init__(self):
        pres = sf.homology_presentation(self.fiber)
        for n, c in enumerate(self.cycles, start=1):
            if c.ring != "Z4":
                raise InputError(f"cycle {n} must be a Z4 class")
            if len(c.coords) != pres.z2_rank:
                raise InputError(
                    f"cycle {n} has {len(c.coords)} coordinates, "
                    f"expected {pres.z2_rank}"
                )
            if sf.self_intersection_mod2(pres, c.coords) != 0:
                raise InvariantViolation(
                    f"cycle {n} ({sf.format_class(pres, c.coords)}) has odd "
                    "self-intersection; vanishing cycles are two-sided"
                )

    def z2_cycle_matrix(self) -> np.ndarray:
        """Mod-2 reductions of the cycles, one row per cycle."""
        pres = sf.homology_presentation(self.fiber)
        rows = [[a % 2 for a in c.coords] for c in self.cycles]
        if not rows:
            return fl.mat_gf2(np.zeros((0, pres.z2_rank), dtype=np.uint8))
        return fl.mat_gf2(rows)


@dataclass(frozen=True)
class ObstructionWitness:
    """A dependent cycle family certifying Pin- non-existence.

    The class of cycle ``lead`` equals the mod-2 sum of the classes of
    ``summands``, and len(summands) + pair_sum is even, where ``pair_sum``
    is the parity of the pairwise intersections among the summands.
    """

    lead: int
    summands: tuple[int, ...]
    pair_sum: int

    @property
    def k(self) -> int:
        return len(self.summands)

    def describe(self, f: LefschetzFibration) -> str:
        pres = sf.homology_presentation(f.fiber)
        lead_txt = sf.format_class(pres, f.cycles[self.lead].coords)
        if not self.summands:
            return (
                f"q-(c{self.lead + 1}) = q-({lead_txt}) = 0 != 2 "
                f"(cycle {self.lead + 1} is null-homologous mod 2)"
            )
        sum_txt = " + ".join(f"[c{i + 1}]" for i in self.summands)
        total = (self.k + self.pair_sum) % 2
        return (
            f"[c{self.lead + 1}] = {sum_txt} mod 2 with "
            f"k + pairwise intersections = {self.k} + {self.pair_sum} "
            f"= {total} mod 2"
        )


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of a Pin decision: verdict, count, structures, certificate.

    When structures exist, ``structure_count`` equals
    2**h1_annihilator_dim and ``structures`` lists them all; otherwise
    ``certificate`` explains why none exist (and for the minus kind
    ``witness`` carries the dependent cycle family).
    """

    kind: str
    exists: bool
    structure_count: int
    structures: tuple
    h1_annihilator_dim: int
    certificate: str | None = None
    witness: ObstructionWitness | None = None


def fibration_h1_annihilator(f: LefschetzFibration) -> list[np.ndarray]:
    """Basis of the fiber cohomology classes vanishing on every cycle.

    This subgroup is the cohomology of the total space sitting inside the
    fiber's; acting by it permutes the solutions of either decision system
    freely and transitively.
    """
    return fl.annihilator_gf2(f.z2_cycle_matrix())


def _witness_from_combination(f: LefschetzFibration, rows_y) -> ObstructionWitness:
    pres = sf.homology_presentation(f.fiber)
    support = [int(i) for i in np.nonzero(np.asarray(rows_y))[0]]
    lead, summands = support[0], tuple(support[1:])
    pair = 0
    for i, j in combinations(summands, 2):
        pair += sf.pairing_mod2(pres, f.cycles[i].coords, f.cycles[j].coords)
    return ObstructionWitness(lead, summands, pair % 2)


def decide_pin_minus(f: LefschetzFibration) -> DecisionReport:
    """Decide Pin- on the fibration and enumerate all structures.

    The unknowns are the mod-2 corrections s_i to the base enhancement on
    each generator; requiring the value 2 on a cycle with reduction v
    reads v . s = 1 + q0(v)/2 over Z2.
    """
    pres = sf.homology_presentation(f.fiber)
    q0 = sf.base_enhancement_minus(f.fiber)
    C = f.z2_cycle_matrix()
    rhs = []
    for c in f.cycles:
        val = sf.eval_qminus(q0, sf.z2_reduction(c))
        # Two-sidedness makes every base value even.
        rhs.append((1 + val // 2) % 2)
    A = fl.vec_gf2(rhs)
    annihilator_dim = len(fibration_h1_annihilator(f))

    solution = fl.solve_affine_gf2(C, A)
    if solution is None:
        y = fl.inconsistency_witness_gf2(C, A)
        assert y is not None  # unsolvable systems always expose a combination
        witness = _witness_from_combination(f, y)
        return DecisionReport(
            kind="minus",
            exists=False,
            structure_count=0,
            structures=(),
            h1_annihilator_dim=annihilator_dim,
            certificate=witness.describe(f),
            witness=witness,
        )
    base = q0.values
    structures = tuple(
        sf.EnhancementMinus(
            f.fiber, tuple((b + 2 * int(s)) % 4 for b, s in zip(base, vec))
        )
        for vec in solution.enumerate_solutions()
    )
    return DecisionReport(
        kind="minus",
        exists=True,
        structure_count=solution.count,
        structures=structures,
        h1_annihilator_dim=annihilator_dim,
    )


def decide_pin_plus(f: LefschetzFibration) -> DecisionReport:
    """Decide Pin+ on the fibration and enumerate all structures.

    Writing q = q0 + l for a linear correction l, requiring the value 1 on
    every cycle asks for l([c_i]) = 1 + q0([c_i]); the system is solvable
    exactly when the cycle matrix and its augmentation have equal rank.
    A fiber with no Pin+ structure obstructs immediately.
    """
    annihilator_dim = len(fibration_h1_annihilator(f))
    obstruction = sf.pin_plus_obstruction(f.fiber)
    if obstruction is not None:
        return DecisionReport(
            kind="plus",
            exists=False,
            structure_count=0,
            structures=(),
            h1_annihilator_dim=annihilator_dim,
            certificate=f"fiber has no Pin+ structure: {obstruction}",
        )
    q0 = sf.base_enhancement_plus(f.fiber)
    C = f.z2_cycle_matrix()
    A = fl.vec_gf2([(1 + sf.eval_qplus(q0, c)) % 2 for c in f.cycles])
    solution = fl.solve_affine_gf2(C, A)
    if solution is None:
        rank_c, _, _ = fl.rref_gf2(C)
        aug = np.hstack([C, np.asarray(A)[:, None]])
        rank_aug, _, _ = fl.rref_gf2(aug)
        return DecisionReport(
            kind="plus",
            exists=False,
            structure_count=0,
            structures=(),
            h1_annihilator_dim=annihilator_dim,
            certificate=(
                f"rank(C) = {rank_c} != rank(C|A) = {rank_aug}; "
                "no enhancement takes the value 1 on every cycle"
            ),
        )
    structures = tuple(
        sf.EnhancementPlus(f.fiber, tuple(int(b) for b in vec))
        for vec in solution.enumerate_solutions()
    )
    return DecisionReport(
        kind="plus",
        exists=True,
        structure_count=solution.count,
        structures=structures,
        h1_annihilator_dim=annihilator_dim,
    )


def pin_minus_witness_search(f: LefschetzFibration) -> ObstructionWitness | None:
    """Exhaustive search for a dependent cycle family blocking Pin-.

    Scans subsets of the cycle list by size, then lexicographically, and
    returns the first family whose classes sum to zero mod 2 while the
    size-plus-pairwise-intersection parity is odd (equivalently, writing
    one cycle as the sum of the k others, k + pairwise intersections of
    the summands is even).  Cost grows as 2**n; meant for n up to ~20.

    A witness exists if and only if the fibration has no Pin- structure.
    """
    pres = sf.homology_presentation(f.fiber)
    rows = f.z2_cycle_matrix()
    n = len(f.cycles)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            total = np.zeros(pres.z2_rank, dtype=np.uint8)
            for i in subset:
                total ^= rows[i]
            if total.any():
                continue
            pair = 0
            for i, j in combinations(subset, 2):
                pair += sf.pairing_mod2(pres, f.cycles[i].coords, f.cycles[j].coords)
            if (size + pair) % 2 == 1:
                lead, summands = subset[0], subset[1:]
                inner = 0
                for i, j in combinations(summands, 2):
                    inner += sf.pairing_mod2(
                        pres, f.cycles[i].coords, f.cycles[j].coords
                    )
                return ObstructionWitness(lead, summands, inner % 2)
    return None


def brute_force_pin_minus(f: LefschetzFibration) -> list[sf.EnhancementMinus]:
    """All minus enhancements taking the value 2 on every cycle (2**rank scan)."""
    reduced = [sf.z2_reduction(c) for c in f.cycles]
    return [
        q
        for q in sf.enumerate_enhancements(f.fiber, "minus")
        if all(sf.eval_qminus(q, x) == 2 for x in reduced)
    ]


def brute_force_pin_plus(f: LefschetzFibration) -> list[sf.EnhancementPlus]:
    """All plus enhancements taking the value 1 on every cycle (2**rank scan)."""
    return [
        q
        for q in sf.enumerate_enhancements(f.fiber, "plus")
        if all(sf.eval_qplus(q, c) == 1 for c in f.cycles)
    ]


class SphereVerdicts(NamedTuple):
    pin_minus: bool
    pin_plus: bool


def decide_pin_over_s2(
    f: LefschetzFibration, dual_surface: EmbeddedSurfaceData
) -> SphereVerdicts:
    """Pin verdicts for a fibration over the sphere.

    ``f`` describes the complement of a fiber neighbourhood as a fibration
    over the disk; ``dual_surface`` carries the invariants of an embedded
    surface dual to the fiber.  The total space is Pin- when the disk part
    is and [sigma]^2 + cup + w1^2(nu(sigma)) vanishes; it is Pin+ when the
    disk part is and chi(sigma) + [sigma]^2 + cup vanishes.
    """
    d = dual_surface
    minus_term = (
        d.self_intersection_mod2 + d.cup_term + d.w1sq_normal
    ) % 2
    plus_term = (
        d.euler_char_mod2 + d.self_intersection_mod2 + d.cup_term
    ) % 2
    return SphereVerdicts(
        pin_minus=decide_pin_minus(f).exists and minus_term == 0,
        pin_plus=decide_pin_plus(f).exists and plus_term == 0,
    )
