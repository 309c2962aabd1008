"""Mutations of Laurent polynomials and of Fano polytopes.

An algebraic mutation is determined by a primitive weight vector w and a
factor supported on w-degree zero: writing f as a sum of w-graded slices f_h,
the mutation is sum_h f_h * a^h, which is a Laurent polynomial exactly when
a^|h| divides f_h for every negative h. The polytope-level shadow adds h
copies of the factor polytope to slices at positive height and Minkowski-
subtracts them at negative height. Classical periods and dual Ehrhart series
are invariant, and the test suite certifies both.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import DegenerateHull, NotMutable, OriginNotInterior
from .laurent import LaurentPolynomial, newton_polytope
from .linalg import (
    affine_rank,
    complete_to_unimodular,
    dot,
    primitive,
    rank,
    solve_rational,
    vec_sub,
)
from .polytope import (
    LatticePolytope,
    UnimodularMap,
    _hull_facets,
    normal_form_maps,
)


@dataclass(frozen=True)
class MutationData:
    """Weight vector plus a factor supported on weight-degree zero."""

    weight: tuple
    factor: LaurentPolynomial

    def __post_init__(self):
        w = tuple(int(a) for a in self.weight)
        object.__setattr__(self, "weight", w)
        if not any(w):
            raise ValueError("weight vector must be nonzero")
        if primitive(w) != w:
            raise ValueError("weight vector must be primitive")
        if self.factor.is_zero():
            raise ValueError("factor must be nonzero")
        for e in self.factor.terms:
            if dot(w, e) != 0:
                raise ValueError("factor support must pair to zero against the weight")


@dataclass(frozen=True)
class SearchBounds:
    """Limits for the mutation neighbour search."""

    max_weight_entry: int
    max_factor_terms: int


# ---------------------------------------------------------------------------
# Exact Laurent division


def laurent_divide(numerator: LaurentPolynomial, denominator: LaurentPolynomial):
    """Exact quotient in the Laurent ring, or None when division fails.

    Leading-term elimination in lex order; quotient exponents are confined to
    the coordinate box of Newton(num) minus Newton(den), which bounds the loop.
    """
    if denominator.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = numerator.nvars
    if numerator.is_zero():
        return LaurentPolynomial.zero(n)
    num_sup = numerator.support()
    den_sup = denominator.support()
    box_lo = tuple(
        min(e[i] for e in num_sup) - min(e[i] for e in den_sup) for i in range(n)
    )
    box_hi = tuple(
        max(e[i] for e in num_sup) - max(e[i] for e in den_sup) for i in range(n)
    )
    den_lead = max(denominator.terms)
    den_lead_c = denominator.terms[den_lead]
    rem = dict(numerator.terms)
    quo = {}
    while rem:
        lead = max(rem)
        t = tuple(a - b for a, b in zip(lead, den_lead))
        if any(t[i] < box_lo[i] or t[i] > box_hi[i] for i in range(n)):
            return None
        c = rem[lead] / den_lead_c
        quo[t] = c
        for e, dc in denominator.terms.items():
            shifted = tuple(a + b for a, b in zip(e, t))
            v = rem.get(shifted, Fraction(0)) - c * dc
            if v == 0:
                rem.pop(shifted, None)
            else:
                rem[shifted] = v
    return LaurentPolynomial(quo, n)


# ---------------------------------------------------------------------------
# Algebraic mutation


def _strip_last(f: LaurentPolynomial) -> LaurentPolynomial:
    return LaurentPolynomial({e[:-1]: c for e, c in f.terms.items()}, f.nvars - 1)


def _attach_last(f: LaurentPolynomial, h: int) -> LaurentPolynomial:
    return LaurentPolynomial({e + (h,): c for e, c in f.terms.items()}, f.nvars + 1)


def algebraic_mutation(f: LaurentPolynomial, m: MutationData) -> LaurentPolynomial:
    """sum_h f_h * a^h over the w-graded slices of f.

    Raises NotMutable when some negative slice is not divisible by the
    required power of the factor. Classical periods of input and output agree
    to every order.
    """
    if f.nvars != len(m.weight):
        raise ValueError("weight length does not match the polynomial")
    t = complete_to_unimodular(m.weight)
    u = UnimodularMap(t)
    uinv = u.inverse()
    ft = f.transform(u)
    at = _strip_last(m.factor.transform(u))
    height_axis = tuple([0] * (f.nvars - 1) + [1])
    out = LaurentPolynomial.zero(f.nvars)
    for h, part in ft.weight_slices(height_axis).items():
        body = _strip_last(part)
        if h >= 0:
            piece = body * (at ** h)
        else:
            quotient = laurent_divide(body, at ** (-h))
            if quotient is None:
                raise NotMutable(
                    f"slice at weight-degree {h} is not divisible by factor^{-h}"
                )
            piece = quotient
        out = out + _attach_last(piece, h)
    return out.transform(uinv)


# ---------------------------------------------------------------------------
# Combinatorial mutation


def _factor_points(factor):
    if isinstance(factor, LaurentPolynomial):
        return factor.support()
    if isinstance(factor, LatticePolytope):
        return list(factor.vertices)
    return [tuple(int(a) for a in p) for p in factor]


def _slice_system(t_facets, h, k):
    """Facet system of the height-h slice in the first k coordinates, or None if empty."""
    system = []
    for normal, level in t_facets:
        head, c = normal[:k], normal[k]
        lvl = level - c * h
        if not any(head):
            if 0 < lvl:
                return None
            continue
        system.append((head, Fraction(lvl)))
    return system


def _vertices_of_system(system, k):
    """Vertices of {y : <normal, y> >= level} for a bounded k-dimensional system."""
    if k == 0:
        return [()] if all(lvl <= 0 for _, lvl in system) else []
    candidates = set()
    for subset in itertools.combinations(system, k):
        mat = tuple(nrm for nrm, _ in subset)
        if rank(list(mat)) < k:
            continue
        point = solve_rational(mat, tuple(lvl for _, lvl in subset))
        if all(dot(nrm, point) >= lvl for nrm, lvl in system):
            candidates.add(tuple(Fraction(a) for a in point))
    return sorted(candidates)


def _minkowski_sum_points(points_a, points_b):
    return sorted({tuple(x + y for x, y in zip(a, b)) for a in points_a for b in points_b})


def _point_in_hull(point, points):
    """Exact membership of a rational point in the convex hull of a small point set.

    Caratheodory: the point lies in the hull iff some affinely independent
    subset of size rank+1 contains it with non-negative barycentric weights.
    """
    pts = [tuple(Fraction(a) for a in p) for p in points]
    target = tuple(Fraction(a) for a in point) + (Fraction(1),)
    r = affine_rank(pts)
    dim = len(point)
    for subset in itertools.combinations(pts, r + 1):
        if affine_rank(list(subset)) != r:
            continue
        rows = list(zip(*[s + (Fraction(1),) for s in subset]))  # (dim+1) x (r+1)
        chosen, idx = [], []
        for i, row in enumerate(rows):
            if rank(chosen + [list(row)]) > len(chosen):
                chosen.append(list(row))
                idx.append(i)
            if len(chosen) == r + 1:
                break
        if len(chosen) < r + 1:
            continue
        try:
            lam = solve_rational(tuple(tuple(c) for c in chosen), tuple(target[i] for i in idx))
        except ValueError:
            continue
        if any(l < 0 for l in lam):
            continue
        if all(
            sum(l * rows[i][j] for j, l in enumerate(lam)) == target[i]
            for i in range(dim + 1)
        ):
            return True
    return False


def combinatorial_mutation(p: LatticePolytope, weight, factor) -> LatticePolytope:
    """Polytope mutation: slices at height h >= 0 gain h copies of the factor,
    slices at h < 0 must shed |h| copies as an exact Minkowski summand.

    The factor is a point set (or polynomial support) inside the weight-perp
    hyperplane. Raises NotMutable when a negative slice does not admit the
    required summand, and the dual Ehrhart series of the result always equals
    that of the input.
    """
    w = tuple(int(a) for a in weight)
    if primitive(w) != w or not any(w):
        raise ValueError("weight must be a primitive nonzero vector")
    fpoints = _factor_points(factor)
    if not fpoints:
        raise ValueError("factor must be nonempty")
    if any(dot(w, q) != 0 for q in fpoints):
        raise ValueError("factor must lie in the weight-perp hyperplane")
    n = p.dim
    k = n - 1
    t = complete_to_unimodular(w)
    u = UnimodularMap(t)
    tp = p.transform(u)
    f_t = sorted({tuple(u(q))[:k] for q in fpoints})
    heights = [v[k] for v in tp.vertices]
    hmin, hmax = min(heights), max(heights)
    collected = []
    for h in range(hmin, hmax + 1):
        system = _slice_system(tp.facets, h, k)
        if system is None:
            continue
        verts = _vertices_of_system(system, k)
        if not verts:
            continue
        if h > 0:
            scaled = [tuple(h * a for a in q) for q in f_t]
            pts = _minkowski_sum_points(verts, scaled)
        elif h == 0:
            pts = verts
        else:
            scaled = [tuple((-h) * a for a in q) for q in f_t]
            shaved = []
            for normal, level in system:
                support_min = min(dot(normal, q) for q in scaled)
                shaved.append((normal, level - support_min))
            g_verts = _vertices_of_system(shaved, k)
            if not g_verts:
                raise NotMutable(f"slice at height {h} cannot shed the factor")
            recomposed = _minkowski_sum_points(g_verts, scaled)
            for v in verts:
                if not _point_in_hull(v, recomposed):
                    raise NotMutable(
                        f"factor is not an exact Minkowski summand of the slice at height {h}"
                    )
            pts = g_verts
        collected.extend(q + (h,) for q in pts)
    if affine_rank(collected) < n:
        raise NotMutable("mutation collapsed the polytope")
    verts_t, _ = _hull_facets(collected)
    tinv = u.inverse()
    out_vertices = []
    for v in verts_t:
        back = tinv(tuple(Fraction(a) for a in v))
        if any(Fraction(a).denominator != 1 for a in back):
            raise NotMutable("mutation produced non-lattice vertices")
        out_vertices.append(tuple(int(a) for a in back))
    return LatticePolytope(tuple(out_vertices), n)


# ---------------------------------------------------------------------------
# Canonical forms and the neighbour search


def canonical_key(f: LaurentPolynomial):
    """Deduplication key invariant under monomial changes of variables.

    Uses the Newton polytope normal form and transports the coefficients by
    each normalizing map, keeping the smallest term list. Falls back to the
    raw sorted terms when the Newton polytope is not Fano.
    """
    try:
        maps = normal_form_maps(newton_polytope(f))
    except (DegenerateHull, OriginNotInterior, RuntimeError):
        return ("raw", f.sorted_terms())
    best = None
    for m in maps:
        key = f.transform(m).sorted_terms()
        if best is None or key < best:
            best = key
    return ("nf", best)


def canonical_form(f: LaurentPolynomial) -> LaurentPolynomial:
    """A canonical representative of f under monomial changes of variables."""
    kind, terms = canonical_key(f)
    if kind == "raw":
        return f
    return LaurentPolynomial(dict(terms), f.nvars)


def _sympy_factor_slices(slices):
    """Common non-monomial irreducible factors of the negative slices.

    Returns a list of (factor as LaurentPolynomial in k vars, max multiplicity)
    where the multiplicity already accounts for the |h|-th power needed at
    height h.
    """
    k = next(iter(slices.values())).nvars
    syms = sympy.symbols(f"s0:{k}")
    allowed = None
    for h, poly in slices.items():
        shift = [min(e[i] for e in poly.terms) for i in range(k)]
        scale = 1
        for c in poly.terms.values():
            scale = sympy.ilcm(scale, c.denominator)
        dct = {
            tuple(a - b for a, b in zip(e, shift)): int(c * scale)
            for e, c in poly.terms.items()
        }
        sp = sympy.Poly.from_dict(dct, *syms, domain=sympy.ZZ)
        per_slice = {}
        for fac, mult in sp.factor_list()[1]:
            fdict = {
                tuple(int(x) for x in mono): Fraction(int(c))
                for mono, c in fac.as_dict().items()
            }
            if len(fdict) < 2:
                continue  # monomial factors are shears, skip
            lf = _normalize_factor(LaurentPolynomial(fdict, k))
            key = lf.sorted_terms()
            per_slice[key] = (lf, mult // (-h))
        if allowed is None:
            allowed = per_slice
        else:
            merged = {}
            for key, (lf, m1) in allowed.items():
                if key in per_slice:
                    merged[key] = (lf, min(m1, per_slice[key][1]))
            allowed = merged
        if not allowed:
            return []
    return [entry for entry in sorted(allowed.items()) if entry[1][1] >= 1]


def _normalize_factor(f: LaurentPolynomial) -> LaurentPolynomial:
    """Shift min exponents to zero, clear content, make the lex-leading coefficient positive."""
    k = f.nvars
    shift = [min(e[i] for e in f.terms) for i in range(k)]
    terms = {tuple(a - b for a, b in zip(e, shift)): c for e, c in f.terms.items()}
    denlcm = 1
    for c in terms.values():
        denlcm = sympy.ilcm(denlcm, c.denominator)
    numgcd = 0
    for c in terms.values():
        numgcd = sympy.igcd(numgcd, int(c * denlcm))
    scale = Fraction(denlcm, numgcd)
    terms = {e: c * scale for e, c in terms.items()}
    if terms[max(terms)] < 0:
        terms = {e: -c for e, c in terms.items()}
    return LaurentPolynomial(terms, k)


def mutation_neighbours(f: LaurentPolynomial, bounds: SearchBounds):
    """All mutations of f within the given bounds, one representative per
    monomial-change-of-variables class of outputs.

    Weights range over primitive vectors with entries bounded by
    `max_weight_entry` (both signs, so inverse mutations are found); factor
    candidates are products of the common irreducible factors of the negative
    weight slices, normalized to integer coefficients with content one, with
    at most `max_factor_terms` terms.
    """
    if bounds.max_weight_entry < 1 or bounds.max_factor_terms < 1:
        return []
    n = f.nvars
    if n < 2:
        return []
    results = []
    seen = set()
    mw = bounds.max_weight_entry
    axis = tuple([0] * (n - 1) + [1])
    for w in itertools.product(range(-mw, mw + 1), repeat=n):
        if not any(w) or primitive(w) != w:
            continue
        t = UnimodularMap(complete_to_unimodular(w))
        tinv = t.inverse()
        ft = f.transform(t)
        slices = ft.weight_slices(axis)
        negative = {h: _strip_last(g) for h, g in slices.items() if h < 0}
        if not negative:
            continue
        options = _sympy_factor_slices(negative)
        if not options:
            continue
        pools = [(lf, min(m, bounds.max_factor_terms)) for _, (lf, m) in options]
        for combo in itertools.product(*[range(m + 1) for _, m in pools]):
            if not any(combo):
                continue
            factor_k = LaurentPolynomial.constant(1, n - 1)
            for (lf, _), mult in zip(pools, combo):
                for _ in range(mult):
                    factor_k = factor_k * lf
            if len(factor_k.terms) > bounds.max_factor_terms or len(factor_k.terms) < 2:
                continue
            factor = _attach_last(factor_k, 0).transform(tinv)
            data = MutationData(w, factor)
            try:
                mutated = algebraic_mutation(f, data)
            except NotMutable:
                continue
            dedupe = canonical_key(mutated)
            if dedupe in seen:
                continue
            seen.add(dedupe)
            results.append((data, mutated))
    results.sort(key=lambda item: (item[0].weight, item[0].factor.sorted_terms()))
    return results
