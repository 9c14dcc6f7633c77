"""Pin structures on closed 3-manifolds from handlebody decompositions.

A closed non-orientable 3-manifold decomposes as a genus-g non-orientable
handlebody plus g 2-handles and a 3-handle.  All Pin data lives on the
boundary surface, the closed non-orientable surface with 2g crosscaps:
the manifold is Pin+ exactly when some plus enhancement of the boundary
vanishes on the attaching circles of the 2-handles and the belt circles
of the 1-handles, and it always admits a Pin- structure, constructed as a
minus enhancement vanishing on the same curves.

Both conditions are affine systems over Z2 in the correction to the base
enhancement, with coefficient rows the mod-2 reductions of the attaching
classes followed by the belt classes (reports keep this row order).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import finite_linalg as fl
from . import surfaces as sf
from .errors import InputError, InvalidDecomposition, InvariantViolation
from .lefschetz import DecisionReport


@dataclass(frozen=True)
class HandlebodyDecomposition3:
    """Genus plus attaching and belt classes on the boundary surface.

    The boundary is the closed non-orientable surface with 2*genus
    crosscaps.  All classes bound disks on one side, hence are two-sided:
    even mod-2 self-intersection is enforced.  Geometric validity of the
    curve data is not modelled, only homological soundness.
    """

    genus: int
    attaching_classes: tuple[sf.HomologyClass, ...]
    belt_classes: tuple[sf.HomologyClass, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise InputError("handlebody genus must be at least 1")
        if len(self.attaching_classes) != self.genus:
            raise InputError(
                f"expected {self.genus} attaching classes, "
                f"got {len(self.attaching_classes)}"
            )
        if len(self.belt_classes) != self.genus:
            raise InputError(
                f"expected {self.genus} belt classes, got {len(self.belt_classes)}"
            )
        pres = sf.homology_presentation(self.boundary)
        for label, classes in (
            ("attaching", self.attaching_classes),
            ("belt", self.belt_classes),
        ):
            for n, c in enumerate(classes, start=1):
                if c.ring != "Z4":
                    raise InputError(f"{label} class {n} must be a Z4 class")
                if len(c.coords) != pres.z2_rank:
                    raise InputError(
                        f"{label} class {n} has {len(c.coords)} coordinates, "
                        f"expected {pres.z2_rank}"
                    )
                if sf.self_intersection_mod2(pres, c.coords) != 0:
                    raise InvariantViolation(
                        f"{label} class {n} has odd self-intersection; "
                        "curves bounding disks are two-sided"
                    )

    @property
    def boundary(self) -> sf.SurfaceModel:
        return sf.non_orientable_surface(2 * self.genus, 0)

    def listed_classes(self) -> tuple[sf.HomologyClass, ...]:
        """Attaching classes then belt classes, in report order."""
        return self.attaching_classes + self.belt_classes

    def z2_class_matrix(self) -> np.ndarray:
        rows = [[a % 2 for a in c.coords] for c in self.listed_classes()]
        return fl.mat_gf2(rows)


def decide_pin_plus_3mfd(d: HandlebodyDecomposition3) -> DecisionReport:
    """Rank criterion for a Pin+ structure on the closed 3-manifold.

    Builds the 2g x 2g mod-2 matrix of attaching rows then belt rows and
    the right-hand side of base-enhancement values on those classes; the
    manifold is Pin+ exactly when the ranks of the matrix and of its
    augmentation agree.  On success every solution is returned as a plus
    enhancement vanishing on all listed classes.
    """
    boundary = d.boundary
    # 2g crosscaps is even, so the boundary always carries Pin+; the
    # relation check below still runs as a guard.
    q0 = sf.base_enhancement_plus(boundary)
    classes = d.listed_classes()
    C = d.z2_class_matrix()
    A = fl.vec_gf2([sf.eval_qplus(q0, c) for c in classes])
    annihilator_dim = len(fl.annihilator_gf2(C))
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
                "no enhancement vanishes on all attaching and belt classes"
            ),
        )
    structures = tuple(
        sf.EnhancementPlus(boundary, tuple(int(b) for b in vec))
        for vec in solution.enumerate_solutions()
    )
    return DecisionReport(
        kind="plus",
        exists=True,
        structure_count=solution.count,
        structures=structures,
        h1_annihilator_dim=annihilator_dim,
    )


def solve_pin_minus_3mfd(d: HandlebodyDecomposition3) -> DecisionReport:
    """All minus enhancements of the boundary vanishing on the listed classes.

    A genuine closed 3-manifold decomposition always admits one; an
    unsolvable system therefore comes with a certificate naming an
    inconsistent subset of the curves.
    """
    boundary = d.boundary
    pres = sf.homology_presentation(boundary)
    q0 = sf.base_enhancement_minus(boundary)
    classes = d.listed_classes()
    C = d.z2_class_matrix()
    rhs = []
    for c in classes:
        val = sf.eval_qminus(q0, sf.z2_reduction(c))
        rhs.append((val // 2) % 2)
    A = fl.vec_gf2(rhs)
    annihilator_dim = len(fl.annihilator_gf2(C))
    solution = fl.solve_affine_gf2(C, A)
    if solution is None:
        y = fl.inconsistency_witness_gf2(C, A)
        support = [int(i) for i in np.nonzero(np.asarray(y))[0]]
        names = ", ".join(
            (f"a{i + 1}" if i < d.genus else f"b{i - d.genus + 1}") for i in support
        )
        return DecisionReport(
            kind="minus",
            exists=False,
            structure_count=0,
            structures=(),
            h1_annihilator_dim=annihilator_dim,
            certificate=(
                f"no enhancement vanishes on all listed classes; "
                f"inconsistent subset: {names}"
            ),
        )
    base = q0.values
    structures = tuple(
        sf.EnhancementMinus(
            boundary, tuple((b + 2 * int(s)) % 4 for b, s in zip(base, vec))
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


def construct_pin_minus_3mfd(d: HandlebodyDecomposition3) -> sf.EnhancementMinus:
    """A minus enhancement vanishing on every attaching and belt class.

    Returns the canonical solution (lexicographically smallest correction
    vector).

    Raises:
        InvalidDecomposition: the system is unsolvable, so the input data
            cannot describe a closed 3-manifold decomposition.
    """
    report = solve_pin_minus_3mfd(d)
    if not report.exists:
        raise InvalidDecomposition(
            "input does not describe a closed 3-manifold decomposition",
            certificate=report.certificate,
        )
    return report.structures[0]


def brute_force_pin_plus_3mfd(d: HandlebodyDecomposition3) -> list[sf.EnhancementPlus]:
    """All plus enhancements vanishing on the listed classes (2**(2g) scan)."""
    classes = d.listed_classes()
    return [
        q
        for q in sf.enumerate_enhancements(d.boundary, "plus")
        if all(sf.eval_qplus(q, c) == 0 for c in classes)
    ]


def brute_force_pin_minus_3mfd(
    d: HandlebodyDecomposition3,
) -> list[sf.EnhancementMinus]:
    """All minus enhancements vanishing on the listed classes (2**(2g) scan)."""
    reduced = [sf.z2_reduction(c) for c in d.listed_classes()]
    return [
        q
        for q in sf.enumerate_enhancements(d.boundary, "minus")
        if all(sf.eval_qminus(q, x) == 0 for x in reduced)
    ]
