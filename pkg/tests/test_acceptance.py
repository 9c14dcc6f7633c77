"""Acceptance suite: one test per criterion, printing a PASS line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every tolerance here is exact (integer arithmetic throughout); the
only non-strict bounds are the stated wall-clock limits.
"""

from __future__ import annotations

import random
import time
from itertools import product

import numpy as np

import pinlef as P
from pinlef import cli
from pinlef import finite_linalg as fl
from pinlef import surfaces as sf
from helpers import (
    RANK_3_4_FIBERS,
    RANK_LE_2_FIBERS,
    gf2_span,
    iter_exhaustive_instances,
    random_decomposition,
    sample_instances,
    z4_row_module,
)


def _report(num: int, name: str) -> None:
    print(f"ACCEPTANCE {num:02d} {name}: PASS")


def _load(name: str) -> cli.InputDocument:
    return cli.parse(cli.bundled_example(name).read_text())


# ---------------------------------------------------------------------------
# 1. real-projective-space regression
# ---------------------------------------------------------------------------


def test_criterion_01_rp4_regression():
    start = time.perf_counter()
    doc = _load("rp4.pinlef")
    f = P.LefschetzFibration(doc.surface, doc.cycles)

    plus = P.decide_pin_plus(f)
    assert plus.exists
    assert plus.structure_count == 2

    minus = P.decide_pin_minus(f)
    assert not minus.exists
    assert "q-(2e1) = 0 != 2" in minus.certificate

    witness = P.pin_minus_witness_search(f)
    assert witness == P.ObstructionWitness(lead=0, summands=(), pair_sum=0)
    assert witness.k == 0

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    _report(1, "rp4 regression")


# ---------------------------------------------------------------------------
# 2. twisted-bundle Pin- contradiction
# ---------------------------------------------------------------------------


def test_criterion_02_twisted_bundle_pin_minus_contradiction():
    doc = _load("s2xtrp2.pinlef")
    pres = P.homology_presentation(doc.surface)
    assert doc.surface.kind == "non-orientable"
    assert pres.z2_rank >= 6
    f = P.LefschetzFibration(doc.surface, doc.cycles)

    assert not P.decide_pin_minus(f).exists
    witness = P.pin_minus_witness_search(f)
    assert witness is not None
    assert witness.k == 2
    assert witness.pair_sum == 0
    assert (witness.k + witness.pair_sum) % 2 == 0
    _report(2, "twisted-bundle Pin- contradiction")


# ---------------------------------------------------------------------------
# 3. product-bundle Pin+ contradiction
# ---------------------------------------------------------------------------


def test_criterion_03_product_bundle_pin_plus_contradiction():
    doc = _load("s2xrp2.pinlef")
    pres = P.homology_presentation(doc.surface)
    assert pres.z2_intersection[0, 0] == 1  # e1 is one-sided

    # build the system from first principles: mod-2 cycle matrix against
    # the values forced on the zero base enhancement
    q0 = P.base_enhancement_plus(doc.surface)
    C = [[a % 2 for a in c.coords] for c in doc.cycles]
    A = [(1 + P.eval_qplus(q0, c)) % 2 for c in doc.cycles]
    rank_c, _, _ = fl.rref_gf2(C)
    rank_aug, _, _ = fl.rref_gf2([row + [rhs] for row, rhs in zip(C, A)])
    assert rank_c != rank_aug

    f = P.LefschetzFibration(doc.surface, doc.cycles)
    assert not P.decide_pin_plus(f).exists
    _report(3, "product-bundle Pin+ contradiction")


# ---------------------------------------------------------------------------
# 4. embedded-surface evaluations
# ---------------------------------------------------------------------------


def test_criterion_04_charclass_example():
    data = P.EmbeddedSurfaceData(
        euler_char_mod2=1,
        self_intersection_mod2=1,
        cup_term=0,
        w1sq_sigma=1,
        w1sq_normal=0,
    )
    assert P.eval_w2(data) == 0
    assert P.eval_w1sq(data) == 1
    summary = P.pin_obstruction_summary([data])
    assert not summary.pin_plus_obstructed
    assert summary.pin_minus_obstructed
    _report(4, "embedded-surface evaluations")


# ---------------------------------------------------------------------------
# 5-6. decision procedures versus their oracles
# ---------------------------------------------------------------------------


def _instance_stream():
    yield from iter_exhaustive_instances(RANK_LE_2_FIBERS, max_cycles=4)
    rng = random.Random(1105)
    yield from sample_instances(rng, RANK_3_4_FIBERS, 600, max_cycles=4)


def test_criterion_05_witness_equivalence():
    start = time.perf_counter()
    checked = 0
    sampled = 0
    for f in _instance_stream():
        report = P.decide_pin_minus(f)
        brute = P.brute_force_pin_minus(f)
        assert report.exists == bool(brute), f
        assert {q.values for q in report.structures} == {
            q.values for q in brute
        }, f
        witness = P.pin_minus_witness_search(f)
        assert (witness is not None) == (not report.exists), f
        if not report.exists:
            assert report.certificate is not None
            assert report.witness is not None
        checked += 1
        if P.homology_presentation(f.fiber).z2_rank > 2:
            sampled += 1
    elapsed = time.perf_counter() - start
    assert sampled >= 500
    assert checked > 5000
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    _report(5, f"witness equivalence ({checked} instances)")


def test_criterion_06_pin_plus_equivalence():
    checked = 0
    for f in _instance_stream():
        report = P.decide_pin_plus(f)
        brute = P.brute_force_pin_plus(f)
        assert report.exists == bool(brute), f
        assert {q.values for q in report.structures} == {
            q.values for q in brute
        }, f
        if not report.exists:
            assert report.certificate is not None
        checked += 1
    _report(6, f"Pin+ decider equivalence ({checked} instances)")


# ---------------------------------------------------------------------------
# 7. counting law and the free orbit
# ---------------------------------------------------------------------------


def _orbit(q, basis, rank):
    out = set()
    for bits in product((0, 1), repeat=len(basis)):
        gamma = (0,) * rank
        for bit, b in zip(bits, basis):
            if bit:
                gamma = tuple(x ^ int(y) for x, y in zip(gamma, b))
        out.add(P.act_h1(q, gamma))
    return out


def test_criterion_07_counting_law_and_orbit():
    rng = random.Random(707)
    instances = list(iter_exhaustive_instances(RANK_LE_2_FIBERS, max_cycles=3))
    instances += sample_instances(rng, RANK_3_4_FIBERS, 400, max_cycles=4)
    for f in instances:
        rank = P.homology_presentation(f.fiber).z2_rank
        basis = P.fibration_h1_annihilator(f)
        for report in (P.decide_pin_minus(f), P.decide_pin_plus(f)):
            if not report.exists:
                continue
            dim = report.h1_annihilator_dim
            assert dim == len(basis)
            assert report.structure_count == 2**dim
            orbit = _orbit(report.structures[0], basis, rank)
            assert len(orbit) == 2**dim  # the action is free
            assert orbit == set(report.structures)  # and transitive
    _report(7, f"counting law and free orbit ({len(instances)} instances)")


# ---------------------------------------------------------------------------
# 8. enhancement axioms on every enumerated enhancement
# ---------------------------------------------------------------------------


def test_criterion_08_enhancement_axioms():
    surfaces = RANK_LE_2_FIBERS + RANK_3_4_FIBERS
    for surface in surfaces:
        pres = P.homology_presentation(surface)
        r = pres.z2_rank
        M = pres.z2_intersection.astype(np.int64)

        # minus: indices of mod-2 classes are bitmasks, so the class of a
        # sum sits at the XOR of the indices
        z2_classes = list(product((0, 1), repeat=r))
        B2 = np.array(z2_classes, dtype=np.int64).reshape(len(z2_classes), r)
        pair2 = B2 @ M @ B2.T % 2
        selfint = np.diag(pair2)
        idx2 = np.arange(len(z2_classes))
        xor_idx = idx2[:, None] ^ idx2[None, :]
        for q in P.enumerate_enhancements(surface, "minus"):
            E = np.array([P.eval_qminus(q, P.z2_class(c)) for c in z2_classes])
            assert np.array_equal(
                E[xor_idx], (E[:, None] + E[None, :] + 2 * pair2) % 4
            ), surface
            assert np.array_equal(E % 2, selfint), surface

        # plus: mod-4 coordinate vectors in base-4 index order
        z4_coords = np.array(
            list(product(range(4), repeat=r)), dtype=np.int64
        ).reshape(4**r, r)
        if r:
            weights4 = 4 ** np.arange(r - 1, -1, -1)
            sum_idx = ((z4_coords[:, None, :] + z4_coords[None, :, :]) % 4) @ weights4
        else:
            sum_idx = np.zeros((1, 1), dtype=np.int64)
        B4 = z4_coords % 2
        pair4 = B4 @ M @ B4.T % 2
        for q in P.enumerate_enhancements(surface, "plus"):
            E = np.array(
                [
                    P.eval_qplus(q, P.z4_class(tuple(int(a) for a in row)))
                    for row in z4_coords
                ]
            )
            assert np.array_equal(
                E[sum_idx], (E[:, None] + E[None, :] + pair4) % 2
            ), surface
    _report(8, f"enhancement axioms ({len(surfaces)} surfaces)")


# ---------------------------------------------------------------------------
# 9. 3-manifold criteria against exhaustive search
# ---------------------------------------------------------------------------


def test_criterion_09_threefold_criteria():
    rng = random.Random(2209)
    consistent = 0
    for trial in range(220):
        genus = 1 + trial % 2
        d = random_decomposition(rng, genus)

        plus_report = P.decide_pin_plus_3mfd(d)
        plus_brute = P.brute_force_pin_plus_3mfd(d)
        assert plus_report.exists == bool(plus_brute)
        assert {q.values for q in plus_report.structures} == {
            q.values for q in plus_brute
        }

        minus_brute = P.brute_force_pin_minus_3mfd(d)
        if minus_brute:
            consistent += 1
            q = P.construct_pin_minus_3mfd(d)
            for c in d.listed_classes():
                assert P.eval_qminus(q, sf.z2_reduction(c)) == 0
        else:
            try:
                P.construct_pin_minus_3mfd(d)
            except P.InvalidDecomposition:
                pass
            else:
                raise AssertionError(f"constructor accepted unsolvable data {d}")
    assert consistent > 0
    _report(9, "3-manifold criteria (220 configurations)")


# ---------------------------------------------------------------------------
# 10. canonical forms against enumeration oracles
# ---------------------------------------------------------------------------


def test_criterion_10_howell_and_echelon():
    # Howell: exhaustive over all matrices with 1-2 rows and up to 3
    # columns, plus a seeded batch of 3-row matrices
    exhaustive = [
        (rows, cols) for cols in (1, 2, 3) for rows in (1, 2)
    ]
    for rows, cols in exhaustive:
        for flat in product(range(4), repeat=rows * cols):
            m = [list(flat[i * cols : (i + 1) * cols]) for i in range(rows)]
            h = fl.howell_z4(m)
            assert np.array_equal(h, fl.howell_z4(h))
            module = z4_row_module(m)
            for v in product(range(4), repeat=cols):
                assert fl.in_row_module_z4(h, v) == (v in module)
    rng = random.Random(1010)
    for _ in range(150):
        cols = rng.randint(1, 3)
        m = [[rng.randrange(4) for _ in range(cols)] for _ in range(3)]
        h = fl.howell_z4(m)
        assert np.array_equal(h, fl.howell_z4(h))
        module = z4_row_module(m)
        for v in product(range(4), repeat=cols):
            assert fl.in_row_module_z4(h, v) == (v in module)

    # echelon rank against brute-force row-span counting, up to 6 columns
    for _ in range(200):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        m = [[rng.randint(0, 1) for _ in range(ncols)] for _ in range(nrows)]
        rank, _, _ = fl.rref_gf2(m)
        assert len(gf2_span(m)) == 2**rank
    _report(10, "Howell and echelon kernels")
