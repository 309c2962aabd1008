from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fanoscape import (
    RationalGeneratingFunction,
    TruncatedSeries,
    ZeroWeight,
    dual,
    ehrhart_series,
    hilbert_series_complete_intersection,
    series_match,
)

from oracles import brute_dilation_count, longdiv_expand


# ---------------------------------------------------------------------------
# truncated series arithmetic


def test_series_addition_truncates_to_shorter():
    a = TruncatedSeries((1, 2, 3, 4))
    b = TruncatedSeries((1, 1))
    assert (a + b).coefficients == (2, 3)


def test_series_product():
    a = TruncatedSeries((1, 1, 1))
    assert (a * a).coefficients == (1, 2, 3)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=8),
    st.lists(st.integers(-5, 5), min_size=1, max_size=8),
)
def test_series_product_commutes(xs, ys):
    a, b = TruncatedSeries(tuple(xs)), TruncatedSeries(tuple(ys))
    assert a * b == b * a


# ---------------------------------------------------------------------------
# generating functions


def test_projective_space_hilbert_series():
    h = hilbert_series_complete_intersection((1, 1, 1, 1, 1), (4,))
    coeffs = h.expand(8).coefficients
    # dim of degree-d quartic sections: C(d+4,4) - C(d,4)
    assert coeffs == tuple(comb(d + 4, 4) - comb(d, 4) for d in range(8))


def test_obstructed_complete_intersection_has_no_sections():
    h = hilbert_series_complete_intersection((2, 3, 4, 5, 6, 7), (12, 14))
    assert h.expand(2).coefficient(1) == 0


def test_unprojection_target_sections():
    h = hilbert_series_complete_intersection((1, 1, 1, 1, 1, 2), (3, 3))
    assert h.expand(2).coefficient(1) == 5


def test_zero_weight_rejected():
    with pytest.raises(ZeroWeight):
        hilbert_series_complete_intersection((1, 0, 1), ())
    with pytest.raises(ZeroWeight):
        hilbert_series_complete_intersection((1, 1), (0,))


@pytest.mark.parametrize(
    "num,den",
    [
        ((1,), (1, 1, 1)),
        ((1, 0, 0, 0, -1), (1, 1, 1, 1, 1)),
        ((1, -1, 0, 2), (2, 3, 5)),
        ((1, 0, 0, 0, 0, 0, -1), (1, 2, 3)),
    ],
)
def test_expansion_matches_long_division(num, den):
    h = RationalGeneratingFunction(num, den)
    assert list(h.expand(20).coefficients) == longdiv_expand(h, 20)


# ---------------------------------------------------------------------------
# Ehrhart series


def test_p3_dual_ehrhart(p3_simplex):
    s = ehrhart_series(dual(p3_simplex), 3)
    assert s.coefficients == (1, 35, 165)
    # closed form: k-th dilation of the anticanonical simplex has C(4k+3,3) points
    assert all(s.coefficient(k) == comb(4 * k + 3, 3) for k in range(3))


def test_triangle_dual_ehrhart_against_oracle(reflexive_triangle):
    q = dual(reflexive_triangle)
    s = ehrhart_series(q, 6)
    for k in range(6):
        assert s.coefficient(k) == brute_dilation_count(q, k)


def test_x66_dual_has_single_section(x66_mirror_polytope):
    s = ehrhart_series(dual(x66_mirror_polytope), 2)
    assert s.coefficient(1) == 1


def test_ehrhart_monotone_for_origin_polytopes(quartic_mirror_polytope):
    s = ehrhart_series(dual(quartic_mirror_polytope), 8)
    assert s.coefficient(0) == 1
    assert all(s.coefficient(k) <= s.coefficient(k + 1) for k in range(7))


def test_ehrhart_slicing_matches_brute_force(quartic_mirror_polytope, reflexive_triangle):
    for p in (quartic_mirror_polytope, reflexive_triangle):
        q = dual(p)
        for k in range(1, 11):
            assert q.dilation_point_count(k) == brute_dilation_count(q, k)


# ---------------------------------------------------------------------------
# series matching


def test_quartic_mirror_series_match(quartic_mirror_polytope):
    h = hilbert_series_complete_intersection((1, 1, 1, 1, 1), (4,))
    s = ehrhart_series(dual(quartic_mirror_polytope), 10)
    assert series_match(h, s)


def test_toric_variety_matches_its_own_dual_ehrhart(p3_simplex):
    """Projective 3-space regraded anticanonically: coefficient k is C(4k+3, 3).

    The closed form (1 + 31t + 31t^2 + t^3) / (1-t)^4 is solved from the first
    four dilation counts; matching through order 8 certifies the rest.
    """
    s = ehrhart_series(dual(p3_simplex), 8)
    h = RationalGeneratingFunction((1, 31, 31, 1), (1, 1, 1, 1))
    assert series_match(h, s)
    assert all(s.coefficient(k) == comb(4 * k + 3, 3) for k in range(8))


def test_series_match_detects_mismatch():
    h = hilbert_series_complete_intersection((1, 1, 1, 1, 1), (4,))
    bad = TruncatedSeries((1, 6, 15))
    assert not series_match(h, bad)
