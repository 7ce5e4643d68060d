from __future__ import annotations

import math
from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchsat.formula import (
    Case,
    Instance,
    balanced_partition,
    classify_case,
    convexity_threshold_z0,
    iter_instances,
    main_term_g,
    main_term_g_exact,
    min_sum_squares,
    objective_D,
    remainder_R,
    sat_theorem,
    z_dagger,
    z_dagger_floor_ceil,
    z_star_exhaustive,
)

from helpers import brute_D, compositions

nk = Instance.from_nk


def test_instance_validation():
    assert Instance(6, 2).k == 2
    with pytest.raises(ValueError):
        Instance(4, 2)
    with pytest.raises(ValueError):
        Instance(5, 0)
    with pytest.raises(ValueError):
        nk(6, 1)


def test_balanced_partition_examples():
    bp = balanced_partition(7, 3)
    assert (bp.quotient, bp.residue, bp.parts, bp.sum_squares) == (2, 1, (3, 2, 2), 17)
    assert balanced_partition(0, 4).parts == (0, 0, 0, 0)
    bp = balanced_partition(6, 4)
    assert (bp.quotient, bp.residue, bp.parts) == (1, 2, (2, 2, 1, 1))
    assert bp.sum_squares == min(sum(x * x for x in c) for c in compositions(6, 4)) == 10
    with pytest.raises(ValueError):
        balanced_partition(3, 0)


def test_min_sum_squares_examples():
    assert min_sum_squares(3, 2) == min(sum(x * x for x in c) for c in compositions(3, 2)) == 5
    assert min_sum_squares(2, 3) == min(sum(x * x for x in c) for c in compositions(2, 3)) == 2
    assert min_sum_squares(4, 1) == 16


@given(st.integers(0, 200), st.integers(1, 40))
def test_balanced_partition_invariants(total, m):
    bp = balanced_partition(total, m)
    assert 0 <= bp.residue < m
    assert bp.quotient * m + bp.residue == total
    assert sum(bp.parts) == total and len(bp.parts) == m
    assert max(bp.parts) - min(bp.parts) <= 1
    assert sum(x * x for x in bp.parts) == bp.sum_squares


@given(st.integers(1, 60), st.integers(0, 60))
def test_min_sum_squares_matches_rational_closed_form(n_half, k_raw):
    # (n+k)^2 / (4(k+z)) - n + z - b^2/(k+z) + b with S = (n-k)/2 - z, m = k + z.
    k = k_raw + 1
    n = 2 * n_half + k
    inst = nk(n, k)
    for z in range(inst.z_max + 1):
        b = balanced_partition(inst.p - z, k + z).residue
        closed = Fraction((n + k) ** 2, 4 * (k + z)) - n + z - Fraction(b * b, k + z) + b
        assert closed == min_sum_squares(inst.p - z, k + z)


@pytest.mark.parametrize(
    "n, k, z, D",
    [(6, 2, 0, 12), (5, 1, 1, 14), (16, 4, 0, 52), (8, 2, 0, 26), (8, 2, 1, 26)],
)
def test_objective_examples(n, k, z, D):
    assert brute_D(n, k, z) == D
    s = objective_D(nk(n, k), z)
    assert s.D == D and s.E == D // 2


def test_objective_matches_vertex_degree_sum():
    for inst in iter_instances(3, 22):
        for z in range(inst.z_max + 1):
            if math.comb(inst.p - z + inst.k + z - 1, inst.k + z - 1) > 5000:
                continue
            assert objective_D(inst, z).D == brute_D(inst.n, inst.k, z), (inst, z)


def test_objective_rejects_infeasible_z():
    with pytest.raises(ValueError):
        objective_D(nk(6, 2), 3)
    with pytest.raises(ValueError):
        objective_D(nk(6, 2), -1)


def test_main_term_examples():
    assert main_term_g(nk(6, 2), 0) == 32.0
    assert main_term_g(nk(5, 1), 0) == 36.0
    with pytest.raises(ValueError):
        main_term_g(nk(6, 2), -2)


def test_remainder_examples():
    assert balanced_partition(3, 2).residue == 1
    assert remainder_R(nk(8, 2), 0) == 2
    assert remainder_R(nk(6, 2), 0) == 0
    assert remainder_R(nk(16, 4), 0) == 4


def test_decomposition_and_bounds_everywhere():
    for inst in iter_instances(3, 60):
        n, k = inst.n, inst.k
        for z in range(inst.z_max + 1):
            s = objective_D(inst, z)
            g = main_term_g_exact(inst, z)
            assert s.D == g - 3 * n - k + s.R
            assert g == s.D - s.R + 3 * n + k
            assert s.D % 2 == 0 and s.D >= 0
            assert 0 <= s.R <= k + z
            assert s.g == pytest.approx(float(g))


@pytest.mark.parametrize("n, k, shown", [(5, 1, "1.00"), (4, 2, "0.00"), (9, 3, "-0.29")])
def test_z_dagger_examples(n, k, shown):
    assert f"{z_dagger(nk(n, k)):.2f}" == shown


def test_z_dagger_floor_ceil_exact():
    for inst in iter_instances(3, 400):
        lo, hi = z_dagger_floor_ceil(inst)
        zd = z_dagger(inst)
        assert lo == math.floor(zd) and hi == math.ceil(zd), inst


def test_z0_examples():
    assert convexity_threshold_z0(nk(7, 1)) == pytest.approx(3.0)
    # (25, 2) breaks the parity rule of an instance; the threshold only needs n and k.
    assert convexity_threshold_z0(SimpleNamespace(n=25, k=2)) == pytest.approx(7.0)
    assert convexity_threshold_z0(nk(9, 1)) == pytest.approx(10 ** (2 / 3) - 1)
    assert round(convexity_threshold_z0(nk(9, 1)), 2) == 3.64


def test_exhaustive_examples():
    r = z_star_exhaustive(nk(8, 2))
    assert (r.minimizers, r.E_min, r.z_star) == ((0, 1), 13, 0)
    r = z_star_exhaustive(nk(9, 1))
    assert (r.minimizers, r.E_min, r.z_star) == ((1, 2), 21, 1)
    r = z_star_exhaustive(nk(6, 2))
    assert (r.minimizers, r.E_min) == ((0,), 6)


@pytest.mark.parametrize(
    "n, k, case",
    [(26, 2, Case.I), (16, 4, Case.II), (16, 6, Case.IV), (6, 2, Case.III), (9, 3, Case.II)],
)
def test_classify_examples(n, k, case):
    assert classify_case(nk(n, k)).case is case


def test_classify_predicates_consistent():
    for inst in iter_instances(3, 120):
        lab = classify_case(inst)
        n, k = inst.n, inst.k
        assert lab.z_dagger_positive == (n > 2 * k * k - 2 * k)
        if lab.case is Case.I:
            assert lab.n_at_least_19 and lab.z_dagger_positive
        elif lab.case is Case.II:
            assert lab.k_at_most_sqrt_n and not lab.z_dagger_positive
        elif lab.case is Case.IV:
            assert not lab.k_at_most_sqrt_n
        else:
            assert not lab.n_at_least_19 and lab.k_at_most_sqrt_n


def test_z_dagger_sign_matches_threshold():
    for inst in iter_instances(3, 400):
        n, k = inst.n, inst.k
        lo, hi = z_dagger_floor_ceil(inst)
        assert (hi > 0) == (n > 2 * k * k - 2 * k), inst


@pytest.mark.parametrize(
    "n, p, E, cands",
    [(12, 4, 12, (0,)), (6, 2, 6, (0, 1)), (9, 4, 21, (1, 2)), (16, 6, 26, (0,))],
)
def test_sat_theorem_examples(n, p, E, cands):
    t = sat_theorem(Instance(n, p))
    assert t.E == E and t.candidates == cands


def test_sat_theorem_agrees_with_sweep_beyond_sqrt_range():
    # Also outside k <= sqrt(n): the D(0) branch must still be the sweep minimum.
    for inst in iter_instances(3, 120):
        assert sat_theorem(inst).E == z_star_exhaustive(inst).E_min, inst
