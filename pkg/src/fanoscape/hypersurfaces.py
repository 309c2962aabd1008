"""Quasismooth terminal hypersurfaces X_d in P(1, a1, a2, a3, a4) and their mirrors.

The search enumerates sorted weight tails, filters by well-formedness,
quasismoothness of the general member (stratum-by-stratum monomial
conditions), and terminality (isolated cyclic quotient points passing the
minimum-age criterion). The mirror construction eliminates the torus
constraint of the weighted-hypersurface superpotential and subtracts the
constant that kills the first period coefficient.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .errors import NotQuasismooth, WeightMismatch
from .laurent import LaurentPolynomial
from .series import hilbert_series_complete_intersection


@dataclass(frozen=True)
class HypersurfaceCandidate:
    """Degree-d hypersurface in P(1, a1, a2, a3, a4) with d = a1+a2+a3+a4."""

    weights: tuple
    degree: int

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if len(w) != 5 or w[0] != 1:
            raise WeightMismatch("weights must have the form (1, a1, a2, a3, a4)")
        if any(a < 1 for a in w):
            raise WeightMismatch("weights must be positive")
        w = (1,) + tuple(sorted(w[1:]))
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "degree", int(self.degree))
        if self.degree != sum(w[1:]):
            raise WeightMismatch(
                f"degree {self.degree} must equal the sum of the last four weights {sum(w[1:])}"
            )

    def is_well_formed(self) -> bool:
        """Every four of the five weights coprime (well-formed ambient space).

        Rejected candidates with ill-formed ambients stay constructible so the
        predicate reports can explain them; the search filters on this.
        """
        for quad in itertools.combinations(self.weights, 4):
            g = 0
            for a in quad:
                g = gcd(g, a)
            if g != 1:
                return False
        return True


@dataclass(frozen=True)
class StratumCheck:
    """Evidence for one coordinate stratum: a degree-d monomial on the stratum,
    a family of tangent monomials with distinct outside variables, or failure."""

    subset: tuple
    kind: str  # "pure" | "tangent" | "fail"
    witness: tuple


@dataclass(frozen=True)
class QuasismoothReport:
    verdict: bool
    strata: tuple


@dataclass(frozen=True)
class SingularPoint:
    """Isolated cyclic quotient 1/r(b1, b2, b3) on the general member."""

    index: int  # r
    local_weights: tuple
    reid_tai_minimum: Fraction
    count: int
    locus: str  # "vertex" or "edge"


@dataclass(frozen=True)
class TerminalityReport:
    verdict: bool
    singular_points: tuple
    failures: tuple


# ---------------------------------------------------------------------------
# Monomial existence machinery


def _reachable_mask(weights, limit):
    """Bit d set iff d is a non-negative integer combination of the weights."""
    mask = 1
    full = (1 << (limit + 1)) - 1
    for w in weights:
        while True:
            grown = (mask | (mask << w)) & full
            if grown == mask:
                break
            mask = grown
    return mask


def _monomial_witness(indexed_weights, target):
    """Exponent vector (length 5) of a monomial of the given degree on the stratum."""
    out = [0] * 5
    remaining = target
    items = list(indexed_weights)
    for pos, (idx, w) in enumerate(items):
        rest = [v for _, v in items[pos + 1:]]
        rest_mask = _reachable_mask(rest, remaining) if rest else 1
        m = 0
        while remaining - m * w >= 0:
            r = remaining - m * w
            if rest:
                if (rest_mask >> r) & 1:
                    break
            elif r == 0:
                break
            m += 1
        else:
            raise ValueError("witness reconstruction failed")
        if remaining - m * w < 0:
            raise ValueError("witness reconstruction failed")
        out[idx] = m
        remaining -= m * w
    if remaining != 0:
        raise ValueError("witness reconstruction failed")
    return tuple(out)


def is_quasismooth(c: HypersurfaceCandidate) -> QuasismoothReport:
    """Stratum conditions for the general member of |O(d)|.

    For every nonempty coordinate subset S either a degree-d monomial lives on
    S, or there are at least |S| monomials of degree d of the form
    (monomial on S) * (single variable outside S) with distinct outside
    variables. Failing both leaves the general member singular along part of
    the stratum.
    """
    w = c.weights
    d = c.degree
    strata = []
    verdict = True
    for size in range(1, 6):
        for subset in itertools.combinations(range(5), size):
            ws = [w[i] for i in subset]
            mask = _reachable_mask(ws, d)
            if (mask >> d) & 1:
                witness = _monomial_witness([(i, w[i]) for i in subset], d)
                strata.append(StratumCheck(subset, "pure", (witness,)))
                continue
            outside = []
            for e in range(5):
                if e in subset:
                    continue
                r = d - w[e]
                if r >= 0 and (mask >> r) & 1:
                    outside.append(e)
            if len(outside) >= size:
                tangents = []
                for e in outside[:size]:
                    mono = _monomial_witness([(i, w[i]) for i in subset], d - w[e])
                    mono = tuple(
                        m + (1 if i == e else 0) for i, m in enumerate(mono)
                    )
                    tangents.append((mono, e))
                strata.append(StratumCheck(subset, "tangent", tuple(tangents)))
                continue
            strata.append(StratumCheck(subset, "fail", ()))
            verdict = False
    return QuasismoothReport(verdict, tuple(strata))


# ---------------------------------------------------------------------------
# Terminality


def _reid_tai_minimum(r, local_weights):
    """Minimum over nontrivial group elements of the age of 1/r(b1, b2, b3)."""
    best = None
    for k in range(1, r):
        age = Fraction(sum((k * b) % r for b in local_weights), r)
        if best is None or age < best:
            best = age
    return best


def _pair_solution_count(wi, wj, d):
    count = 0
    for beta in range(0, d // wj + 1):
        if (d - beta * wj) % wi == 0:
            count += 1
    return count


def is_terminal(c: HypersurfaceCandidate) -> TerminalityReport:
    """Terminality of the general quasismooth member.

    The singular locus must consist of isolated cyclic quotient points, each
    passing the minimum-age test (every nontrivial age strictly above 1).
    One-dimensional intersections with singular strata fail immediately.
    """
    qs = is_quasismooth(c)
    if not qs.verdict:
        raise NotQuasismooth("terminality analysis needs a quasismooth candidate")
    w = c.weights
    d = c.degree
    failures = []
    points = []

    # 2-dimensional singular strata always meet the threefold in a curve.
    for triple in itertools.combinations(range(5), 3):
        g = gcd(gcd(w[triple[0]], w[triple[1]]), w[triple[2]])
        if g > 1:
            failures.append(
                f"stratum {triple} has stabilizer of order {g} and meets the general member in a curve"
            )

    # Edges: either contained in the member (fail) or finitely many quotient points.
    for i, j in itertools.combinations(range(5), 2):
        h = gcd(w[i], w[j])
        if h == 1:
            continue
        nsol = _pair_solution_count(w[i], w[j], d) if d % h == 0 else 0
        if nsol == 0:
            failures.append(
                f"edge {(i, j)} lies inside the general member and is singular of order {h}"
            )
            continue
        count = nsol - 1
        if count < 1:
            continue
        others = [k for k in range(5) if k not in (i, j)]
        local = tuple(w[k] % h for k in others)
        if any(b % h == 0 or gcd(b, h) != 1 for b in local):
            failures.append(f"edge {(i, j)} carries a non-isolated quotient along the member")
            continue
        rt = _reid_tai_minimum(h, local)
        points.append(SingularPoint(h, local, rt, count, "edge"))

    # Coordinate points the general member passes through.
    for i in range(5):
        r = w[i]
        if r == 1 or d % r == 0:
            continue
        tangent = None
        for e in range(5):
            if e != i and (d - w[e]) >= 0 and (d - w[e]) % r == 0:
                tangent = e
                break
        if tangent is None:
            # quasismoothness guarantees a tangent monomial for singleton strata
            failures.append(f"coordinate point {i} has no tangent direction")
            continue
        others = [k for k in range(5) if k not in (i, tangent)]
        local = tuple(w[k] % r for k in others)
        if any(b % r == 0 or gcd(b, r) != 1 for b in local):
            failures.append(f"coordinate point {i} carries a non-isolated quotient")
            continue
        rt = _reid_tai_minimum(r, local)
        points.append(SingularPoint(r, local, rt, 1, "vertex"))

    verdict = not failures and all(p.reid_tai_minimum > 1 for p in points)
    return TerminalityReport(verdict, tuple(points), tuple(failures))


# ---------------------------------------------------------------------------
# Mirrors


def przyjalkowski_mirror(weights, degree) -> LaurentPolynomial:
    """Laurent polynomial mirror of the general X_d in P(1, a1, ..., ak).

    Equals (1 + x_1 + ... + x_m)^d / (x_1^{a_2} ... x_m^{a_k}) - c with
    m = k - 1 variables and c = d! / (a_1! ... a_k!), the constant that makes
    the first classical period coefficient vanish. The leading weight-1
    coordinate may be written explicitly or left implicit: the degree must
    equal the sum of the remaining weights.
    """
    t = tuple(int(a) for a in weights)
    degree = int(degree)
    if any(a < 1 for a in t):
        raise WeightMismatch("weights must be positive")
    if len(t) >= 2 and t[0] == 1 and sum(t[1:]) == degree:
        tail = t[1:]
    elif sum(t) == degree:
        tail = t
    else:
        raise WeightMismatch(
            f"degree {degree} does not match the weight sums {sum(t[1:])} or {sum(t)}"
        )
    if len(tail) < 2:
        raise WeightMismatch("need at least two non-leading weights")
    d = degree
    nvars = len(tail) - 1
    shift = tail[1:]
    c = factorial(d)
    for a in tail:
        c //= factorial(a)
    terms = {}
    for composition in _compositions_at_most(d, nvars):
        rest = d - sum(composition)
        coeff = factorial(d)
        for m in composition:
            coeff //= factorial(m)
        coeff //= factorial(rest)
        e = tuple(m - s for m, s in zip(composition, shift))
        terms[e] = terms.get(e, 0) + coeff
    zero = tuple(0 for _ in range(nvars))
    terms[zero] = terms.get(zero, 0) - c
    return LaurentPolynomial(terms, nvars)


def _compositions_at_most(total, parts):
    if parts == 1:
        for m in range(total + 1):
            yield (m,)
        return
    for m in range(total + 1):
        for rest in _compositions_at_most(total - m, parts - 1):
            yield (m,) + rest


def interior_point_formula(d: int) -> int:
    """Interior lattice points of the degree-d mirror simplex: the tetrahedral number."""
    if d < 4:
        raise ValueError("threefold mirrors need degree at least 4")
    return (d - 3) * (d - 2) * (d - 1) // 6


# ---------------------------------------------------------------------------
# The search


def _passes_cheap_filters(tail, d):
    a1, a2, a3, a4 = tail
    g = gcd(gcd(a1, a2), gcd(a3, a4))
    if g != 1:
        return False
    for t in itertools.combinations(tail, 3):
        if gcd(gcd(t[0], t[1]), t[2]) > 1:
            return False
    weights = (1,) + tail
    for i in range(1, 5):
        r = weights[i]
        if r == 1 or d % r == 0:
            continue
        if not any(
            e != i and (d - weights[e]) % r == 0 for e in range(5)
        ):
            return False
    for i, j in itertools.combinations(range(1, 5), 2):
        h = gcd(weights[i], weights[j])
        if h > 1 and d % h != 0:
            return False
    return True


def search_famous_95(weight_bound: int):
    """All quasismooth terminal hypersurface candidates with a4 <= weight_bound.

    At any bound of 33 or more this reproduces the full list of 95 families,
    topped by degree 66 with weights (1, 5, 6, 22, 33). Results are sorted by
    (degree, weights).
    """
    if weight_bound < 1:
        raise ValueError("weight bound must be positive")
    found = []
    for tail in itertools.combinations_with_replacement(range(1, weight_bound + 1), 4):
        d = sum(tail)
        if not _passes_cheap_filters(tail, d):
            continue
        candidate = HypersurfaceCandidate((1,) + tail, d)
        if not candidate.is_well_formed():
            continue
        if not is_quasismooth(candidate).verdict:
            continue
        if not is_terminal(candidate).verdict:
            continue
        found.append(candidate)
    found.sort(key=lambda c: (c.degree, c.weights))
    return found


def candidate_invariants(c: HypersurfaceCandidate):
    """(genus, anticanonical Hilbert series) of the candidate."""
    series = hilbert_series_complete_intersection(c.weights, (c.degree,))
    g = int(series.expand(2).coefficient(1)) - 2
    return g, series
