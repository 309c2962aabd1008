import itertools

import pytest

from fanoscape import (
    HypersurfaceCandidate,
    NotQuasismooth,
    WeightMismatch,
    candidate_invariants,
    classical_period,
    convex_hull,
    dual,
    ehrhart_series,
    genus,
    interior_point_formula,
    is_quasismooth,
    is_terminal,
    newton_polytope,
    przyjalkowski_mirror,
    search_famous_95,
    series_match,
)
from fanoscape.laurent import LaurentPolynomial as L

from oracles import probe_failing_stratum, probe_smooth_points


@pytest.fixture(scope="module")
def famous95():
    return search_famous_95(40)


# ---------------------------------------------------------------------------
# candidates and reports


def test_candidate_normalizes_weight_order():
    c = HypersurfaceCandidate((1, 33, 5, 22, 6), 66)
    assert c.weights == (1, 5, 6, 22, 33)


def test_candidate_rejects_bad_degree():
    with pytest.raises(WeightMismatch):
        HypersurfaceCandidate((1, 1, 1, 1, 1), 5)


def test_quartic_is_quasismooth_and_terminal():
    c = HypersurfaceCandidate((1, 1, 1, 1, 1), 4)
    report = is_quasismooth(c)
    assert report.verdict
    assert all(s.kind != "fail" for s in report.strata)
    t = is_terminal(c)
    assert t.verdict and t.singular_points == ()


def test_degree_five_candidate():
    c = HypersurfaceCandidate((1, 1, 1, 1, 2), 5)
    assert is_quasismooth(c).verdict
    t = is_terminal(c)
    assert t.verdict
    assert [(p.index, p.local_weights) for p in t.singular_points] == [(2, (1, 1, 1))]


def test_quasismooth_but_not_terminal():
    c = HypersurfaceCandidate((1, 2, 2, 2, 2), 8)
    q = is_quasismooth(c)
    assert q.verdict
    t = is_terminal(c)
    assert not t.verdict
    assert any("curve" in reason for reason in t.failures)


def test_terminality_requires_quasismooth():
    # the weight-4 coordinate point of X_7 in P(1,1,1,1,4) has neither a pure
    # monomial (4 does not divide 7) nor a tangent monomial
    c = HypersurfaceCandidate((1, 1, 1, 1, 4), 7)
    report = is_quasismooth(c)
    assert not report.verdict
    assert (4,) in [s.subset for s in report.strata if s.kind == "fail"]
    with pytest.raises(NotQuasismooth):
        is_terminal(c)


def test_x66_terminal_with_expected_basket():
    c = HypersurfaceCandidate((1, 5, 6, 22, 33), 66)
    t = is_terminal(c)
    assert t.verdict
    basket = sorted((p.index, tuple(sorted(p.local_weights))) for p in t.singular_points)
    assert basket == [(2, (1, 1, 1)), (3, (1, 1, 2)), (5, (1, 2, 3)), (11, (1, 5, 6))]


# ---------------------------------------------------------------------------
# mirrors


def test_cubic_surface_mirror():
    f = przyjalkowski_mirror((1, 1, 1), 3)
    expected = (L({(0, 0): 1, (1, 0): 1, (0, 1): 1}) ** 3) * L({(-1, -1): 1}) - 6
    assert f == expected


def test_quartic_mirror_constant():
    f = przyjalkowski_mirror((1, 1, 1, 1, 1), 4)
    assert f.constant_term() == 0  # 24 subtracted exactly


def test_x66_mirror_interior_points(x66_mirror_polytope):
    f = przyjalkowski_mirror((1, 5, 6, 22, 33), 66)
    np_f = newton_polytope(f)
    assert np_f == x66_mirror_polytope
    assert np_f.interior_lattice_point_count() == 43680


@pytest.mark.parametrize("d,expected", [(4, 1), (5, 4), (66, 43680)])
def test_interior_point_formula(d, expected):
    assert interior_point_formula(d) == expected


def test_interior_point_formula_matches_enumeration():
    for weights, d in [((1, 1, 1, 1, 1), 4), ((1, 1, 1, 1, 2), 5), ((1, 1, 1, 2, 3), 7)]:
        f = przyjalkowski_mirror(weights, d)
        assert newton_polytope(f).interior_lattice_point_count() == interior_point_formula(d)


# ---------------------------------------------------------------------------
# the search


def test_bound_40_gives_95(famous95):
    assert len(famous95) == 95


def test_search_contains_the_largest_degree(famous95):
    assert famous95[-1].weights == (1, 5, 6, 22, 33)
    assert famous95[-1].degree == 66


def test_small_bound_is_a_subset(famous95):
    small = search_famous_95(2)
    assert set(c.weights for c in small) <= set(c.weights for c in famous95)
    assert len(small) < 95


def test_search_is_permutation_invariant(famous95):
    shuffled = HypersurfaceCandidate((1, 22, 33, 5, 6), 66)
    assert shuffled in famous95


def test_quartic_invariants():
    g, h = candidate_invariants(HypersurfaceCandidate((1, 1, 1, 1, 1), 4))
    assert g == 3
    assert h.expand(3).coefficients == (1, 5, 15)


def test_x66_genus():
    g, _ = candidate_invariants(HypersurfaceCandidate((1, 5, 6, 22, 33), 66))
    assert g == -1


def test_mirror_period_normalization_sample(famous95):
    for c in famous95[:10] + famous95[-3:]:
        f = przyjalkowski_mirror(c.weights, c.degree)
        pi = classical_period(f, 2)
        assert pi.coefficient(1) == 0, c


def test_genus_agrees_with_mirror_polytope_sample(famous95):
    for c in famous95[:6] + famous95[-2:]:
        f = przyjalkowski_mirror(c.weights, c.degree)
        g, _ = candidate_invariants(c)
        assert genus(newton_polytope(f)) == g, c


def test_quartic_mirror_series_consistency():
    c = HypersurfaceCandidate((1, 1, 1, 1, 1), 4)
    _, h = candidate_invariants(c)
    f = przyjalkowski_mirror(c.weights, c.degree)
    s = ehrhart_series(dual(newton_polytope(f)), 6)
    assert series_match(h, s)


# ---------------------------------------------------------------------------
# finite-field probes


def test_accepted_candidates_probe_smooth(famous95):
    for c in famous95[::12]:
        assert probe_smooth_points(c, trials=12, seed=11) == [], c


def test_rejected_candidates_probe_singular():
    rejected = []
    for tail in itertools.combinations_with_replacement(range(1, 9), 4):
        c = HypersurfaceCandidate((1,) + tail, sum(tail))
        if not c.is_well_formed():
            continue
        report = is_quasismooth(c)
        if not report.verdict:
            rejected.append((c, report))
        if len(rejected) >= 20:
            break
    assert len(rejected) == 20
    for c, report in rejected:
        witness = probe_failing_stratum(c, report, seed=3)
        assert witness is not None, c


# ---------------------------------------------------------------------------
# slow full sweeps


@pytest.mark.slow
def test_mirror_period_normalization_full(famous95):
    for c in famous95:
        f = przyjalkowski_mirror(c.weights, c.degree)
        assert classical_period(f, 2).coefficient(1) == 0, c


@pytest.mark.slow
def test_genus_agrees_with_mirror_polytope_full(famous95):
    for c in famous95:
        f = przyjalkowski_mirror(c.weights, c.degree)
        g, _ = candidate_invariants(c)
        assert genus(newton_polytope(f)) == g, c


@pytest.mark.slow
def test_interior_formula_full(famous95):
    for c in famous95:
        f = przyjalkowski_mirror(c.weights, c.degree)
        assert newton_polytope(f).interior_lattice_point_count() == interior_point_formula(c.degree), c


@pytest.mark.slow
def test_mirror_series_consistency_full(famous95):
    for c in famous95:
        _, h = candidate_invariants(c)
        f = przyjalkowski_mirror(c.weights, c.degree)
        s = ehrhart_series(dual(newton_polytope(f)), 6)
        assert series_match(h, s), c


@pytest.mark.slow
def test_accepted_candidates_probe_smooth_full(famous95):
    for c in famous95:
        assert probe_smooth_points(c, trials=12, seed=11) == [], c
