import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from fanoscape import (
    DegenerateHull,
    LaurentPolynomial,
    classical_period,
    convex_hull,
    newton_polytope,
    normal_form,
    przyjalkowski_mirror,
)

from conftest import random_unimodular
from oracles import naive_period_coefficients

L = LaurentPolynomial


def hexagonal(coeffs=(1, 1, 1, 1, 1, 1)):
    exps = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)]
    return L(dict(zip(exps, coeffs)))


# ---------------------------------------------------------------------------
# newton polytopes


def test_newton_polytope_of_projective_plane_potential():
    f = L({(1, 0): 1, (0, 1): 1, (-1, -1): 1})
    assert newton_polytope(f).vertices == tuple(sorted([(1, 0), (0, 1), (-1, -1)]))


def test_newton_polytope_of_cubic_mirror(cubic_mirror):
    assert newton_polytope(cubic_mirror).vertices == tuple(
        sorted([(-1, -1), (2, -1), (-1, 2)])
    )


def test_newton_polytope_of_constant_fails():
    with pytest.raises(DegenerateHull):
        newton_polytope(L.constant(7, 2))


# ---------------------------------------------------------------------------
# arithmetic sanity


def test_pow_matches_repeated_multiplication():
    f = hexagonal()
    g = L.constant(1, 2)
    for _ in range(5):
        g = g * f
    assert f ** 5 == g


def test_subtraction_drops_cancelled_terms():
    f = L({(1, 0): 1, (0, 1): 2})
    g = f - L({(0, 1): 2})
    assert g.support() == [(1, 0)]


# ---------------------------------------------------------------------------
# classical periods


def test_period_of_projective_plane_potential():
    f = L({(1, 0): 1, (0, 1): 1, (-1, -1): 1})
    pi = classical_period(f, 10)
    for d in range(10):
        expected = factorial(d) // (factorial(d // 3) ** 3) if d % 3 == 0 else 0
        assert pi.coefficient(d) == expected


def test_cubic_mirror_normalization(cubic_mirror):
    pi = classical_period(cubic_mirror, 3)
    assert pi.coefficient(0) == 1
    assert pi.coefficient(1) == 0


def test_cubic_mirror_against_unpruned_expansion(cubic_mirror):
    pi = classical_period(cubic_mirror, 7)
    assert list(pi.series.coefficients) == naive_period_coefficients(cubic_mirror, 7)


def test_period_truncation_consistency(cubic_mirror):
    assert classical_period(cubic_mirror, 12).series.truncate(8) == classical_period(
        cubic_mirror, 8
    ).series


def test_period_always_starts_at_one():
    for f in [hexagonal(), L({(2, 1): 3, (-1, 0): Fraction(1, 2), (0, -1): 1})]:
        assert classical_period(f, 4).coefficient(0) == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_period_invariant_under_monomial_change(seed):
    rng = random.Random(seed)
    f = hexagonal()
    u = random_unimodular(2, rng)
    assert classical_period(f, 8).series == classical_period(f.transform(u), 8).series


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_newton_polytope_transforms_with_the_map(seed):
    rng = random.Random(seed)
    f = hexagonal()
    u = random_unimodular(2, rng)
    lhs = newton_polytope(f.transform(u))
    rhs = newton_polytope(f).transform(u)
    assert lhs == rhs
    assert normal_form(lhs) == normal_form(newton_polytope(f))


# ---------------------------------------------------------------------------
# Przyjalkowski closed form


@pytest.mark.parametrize(
    "weights,d",
    [
        ((1, 1, 1, 1, 1), 4),
        ((1, 1, 1, 1, 2), 5),
        ((1, 1, 1, 2, 2), 6),
        ((1, 1, 2, 2, 3), 8),
    ],
)
def test_mirror_period_closed_form(weights, d):
    """Direct expansion equals the binomial-shift formula for the mirror period."""
    a = weights[1:]
    c = factorial(d) // (
        factorial(a[0]) * factorial(a[1]) * factorial(a[2]) * factorial(a[3])
    )
    f = przyjalkowski_mirror(weights, d)
    pi = classical_period(f, 7)
    for k in range(7):
        expected = sum(
            comb(k, j)
            * (-c) ** (k - j)
            * (
                factorial(d * j)
                // (
                    factorial(a[0] * j)
                    * factorial(a[1] * j)
                    * factorial(a[2] * j)
                    * factorial(a[3] * j)
                )
            )
            for j in range(k + 1)
        )
        assert pi.coefficient(k) == expected, (weights, k)


def test_integer_period_integrality_check():
    f = hexagonal()
    pi = classical_period(f, 9)
    assert all(c.denominator == 1 for c in pi.series.coefficients)


# ---------------------------------------------------------------------------
# serialization round trip


def test_laurent_json_round_trip(cubic_mirror):
    from fanoscape.serialize import laurent_from_json, laurent_to_json

    data = laurent_to_json(cubic_mirror)
    assert laurent_from_json(data) == cubic_mirror
    f = L({(1, 0): Fraction(3, 7), (-2, 5): Fraction(-1, 2)})
    assert laurent_from_json(laurent_to_json(f)) == f
