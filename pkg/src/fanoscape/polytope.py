"""Exact-arithmetic lattice polytopes: hulls, point counts, duality, Fano predicates.

All geometry here is exact. Lattice vectors are tuples of Python ints, dual
data is fractions.Fraction, and every predicate that depends on a boundary
decision (terminality, reflexivity, interior membership) is computed with
integer comparisons only.

Facets follow the inward convention throughout: a facet is a pair
``(normal, level)`` with the polytope equal to ``{x : <normal, x> >= level}``
over all facets. For a Fano polytope every level is negative, and the dual
polytope has vertex ``normal / (-level)`` for each facet.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, gcd

from .errors import DegenerateHull, OriginNotInterior
from .linalg import (
    affine_rank,
    clear_denominators,
    det,
    dot,
    hnf,
    identity,
    inverse_unimodular,
    kernel_vector,
    mat_mul,
    mat_vec,
    primitive,
    rank,
    transpose,
    vec_neg,
    vec_sub,
)

SMOOTH = "Smooth"
TERMINAL = "Terminal"
CANONICAL = "Canonical"
WORSE_THAN_CANONICAL = "WorseThanCanonical"

# Facets of a lattice polytope have integer levels; rational polytopes carry
# Fraction levels. Both use primitive integer inward normals.


@dataclass(frozen=True)
class UnimodularMap:
    """A lattice-linear change of coordinates, i.e. an integer matrix of determinant +-1."""

    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if abs(det(m)) != 1:
            raise ValueError("matrix must have determinant +-1")

    def __call__(self, v):
        return mat_vec(self.matrix, v)

    def inverse(self):
        return UnimodularMap(inverse_unimodular(self.matrix))

    def dual(self):
        """The induced map on the dual lattice, (U^T)^-1."""
        return UnimodularMap(inverse_unimodular(transpose(self.matrix)))

    def compose(self, other):
        """self after other."""
        return UnimodularMap(mat_mul(self.matrix, other.matrix))

    @staticmethod
    def identity(n):
        return UnimodularMap(identity(n))


# ---------------------------------------------------------------------------
# Convex hulls


def _monotone_chain(points):
    """CCW vertex cycle of a full-dimensional planar point set (exact)."""
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _independent_dirs(vectors, target):
    """First `target` vectors (in order) that are linearly independent."""
    chosen = []
    for v in vectors:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            if len(chosen) == target:
                return chosen
    raise ValueError("could not find enough independent directions")


def _facet_through(points, ref):
    """Inward facet (normal, level) through `points`, oriented so ref is inside."""
    base = points[0]
    dirs = _independent_dirs([vec_sub(q, base) for q in points[1:]], len(base) - 1)
    normal = kernel_vector(dirs)
    level = dot(normal, base)
    side = dot(normal, ref)
    if side < level:
        normal, level = vec_neg(normal), -level
    elif side == level:
        raise ValueError("reference point lies on the candidate hyperplane")
    return normal, level


_STENCILS = {}


def _stencil(n):
    if n not in _STENCILS:
        dirs = []
        for d in itertools.product((-1, 0, 1), repeat=n):
            if any(d):
                nz = next(a for a in d if a)
                if nz > 0:
                    dirs.append(d)
        _STENCILS[n] = dirs
    return _STENCILS[n]


def _midpoint_prefilter(points):
    """Drop points that are midpoints of two other input points along a short stencil
    direction. Only provably-interior points are removed, so the hull is unchanged;
    this is what makes hulls of dense supports (tens of thousands of lattice points
    of a big simplex) cheap."""
    pts = set(points)
    n = len(points[0])
    survivors = []
    for p in points:
        eliminable = False
        for d in _stencil(n):
            plus = tuple(a + b for a, b in zip(p, d))
            if plus not in pts:
                continue
            minus = tuple(a - b for a, b in zip(p, d))
            if minus in pts:
                eliminable = True
                break
        if not eliminable:
            survivors.append(p)
    return survivors


def _hull_facets(points):
    """Vertices and inward facets of the hull of full-dimensional `points`.

    Incremental insertion with non-simplicial facets: each facet records every
    known point on its hyperplane, ridges are recovered from those records, and
    the true vertex set is extracted at the end from active-constraint ranks.
    Exact over int or Fraction coordinates; normals are primitive integers.
    """
    n = len(points[0])
    pts = sorted(set(points))
    if len(pts) > 400:
        pts = sorted(_midpoint_prefilter(pts))
    if affine_rank(pts) < n:
        raise DegenerateHull(f"points span a {affine_rank(pts)}-dimensional set in dimension {n}")

    if n == 1:
        vs = [(min(p[0] for p in pts),), (max(p[0] for p in pts),)]
        facets = [((1,), vs[0][0]), ((-1,), -vs[1][0])]
        return sorted(vs), sorted(facets)
    if n == 2:
        cycle = _monotone_chain(pts)
        facets = []
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            d = vec_sub(b, a)
            normal = clear_denominators((-d[1], d[0]))
            facets.append((normal, dot(normal, a)))
        return sorted(cycle), sorted(facets)

    # Far points first keeps the number of restructuring insertions small.
    order = sorted(pts, key=lambda p: (-max(abs(Fraction(c)) for c in p), p))
    simplex = [order[0]]
    for p in order[1:]:
        if affine_rank(simplex + [p]) == len(simplex):
            simplex.append(p)
        if len(simplex) == n + 1:
            break
    ref = tuple(sum(Fraction(c) for c in col) / (n + 1) for col in zip(*simplex))

    facets = []  # list of [normal, level, set_of_points_on_hyperplane]
    for omit in range(n + 1):
        face = [simplex[i] for i in range(n + 1) if i != omit]
        normal, level = _facet_through(face, ref)
        facets.append([normal, level, set(face)])

    for p in order:
        vals = [dot(f[0], p) - f[1] for f in facets]
        if all(v >= 0 for v in vals):
            for f, v in zip(facets, vals):
                if v == 0:
                    f[2].add(p)
            continue
        universe = set().union(*(f[2] for f in facets)) | {p}
        kept = [f for f, v in zip(facets, vals) if v >= 0]
        visible = [f for f, v in zip(facets, vals) if v < 0]
        merged = {(f[0], f[1]): set(f[2]) for f in kept}
        new_keys = set()
        for f in visible:
            for g in kept:
                common = sorted(f[2] & g[2])
                if len(common) < n - 1 or affine_rank(common) != n - 2:
                    continue
                normal, level = _facet_through(common + [p], ref)
                key = (normal, level)
                new_keys.add(key)
                merged.setdefault(key, set()).update(common)
                merged[key].add(p)
        # Record every known boundary point lying on a fresh hyperplane, so that
        # later ridge intersections see complete facet point sets.
        for key in new_keys:
            normal, level = key
            for q in universe:
                if dot(normal, q) == level:
                    merged[key].add(q)
        facets = [[nrm, lvl, ptset] for (nrm, lvl), ptset in sorted(merged.items())]

    universe = sorted(set().union(*(f[2] for f in facets)))
    vertices = []
    for q in universe:
        active = [f[0] for f in facets if dot(f[0], q) == f[1]]
        if len(active) >= n and rank(active) == n:
            vertices.append(q)
    return sorted(vertices), sorted((f[0], f[1]) for f in facets)


# ---------------------------------------------------------------------------
# Lattice point scanning


def _scan(facets, lo, hi, count_only=False):
    """Lattice points of an integer inequality system inside a coordinate box.

    `facets` are (normal, level) pairs with integer entries, meaning
    <normal, x> >= level. Points are produced in lexicographic order; with
    count_only the innermost loop just sums interval lengths.
    """
    n = len(lo)
    normals = [f[0] for f in facets]
    levels = [f[1] for f in facets]
    out = [] if not count_only else None
    count = 0

    def rec(depth, partial, prefix):
        nonlocal count
        if depth == n - 1:
            lb, ub = lo[-1], hi[-1]
            for nrm, part in zip(normals, partial):
                c = nrm[-1]
                r = part
                if c == 0:
                    if r > 0:
                        return
                elif c > 0:
                    q = -((-r) // c)
                    if q > lb:
                        lb = q
                else:
                    q = r // c
                    if q < ub:
                        ub = q
            if lb > ub:
                return
            if count_only:
                count += ub - lb + 1
            else:
                for x in range(lb, ub + 1):
                    out.append(prefix + (x,))
            return
        for x in range(lo[depth], hi[depth] + 1):
            nxt = [part - nrm[depth] * x for nrm, part in zip(normals, partial)]
            rec(depth + 1, nxt, prefix + (x,))

    rec(0, list(levels), ())
    return count if count_only else out


def _integer_system(facets, strict=False):
    """Scale rational facet levels to an all-integer system; strict shifts by one."""
    out = []
    for normal, level in facets:
        lv = Fraction(level)
        q = lv.denominator
        normal = tuple(a * q for a in normal)
        level = lv.numerator
        if strict:
            level += 1
        out.append((normal, level))
    return out


def _box_from_vertices(vertices):
    lo = tuple(ceil(min(Fraction(v[i]) for v in vertices)) for i in range(len(vertices[0])))
    hi = tuple(floor(max(Fraction(v[i]) for v in vertices)) for i in range(len(vertices[0])))
    return lo, hi


# ---------------------------------------------------------------------------
# The polytope classes


@dataclass(frozen=True)
class LatticePolytope:
    """A full-dimensional lattice polytope, stored by its lexicographically sorted vertices."""

    vertices: tuple
    dim: int

    def __post_init__(self):
        vs = tuple(sorted(tuple(int(a) for a in v) for v in self.vertices))
        object.__setattr__(self, "vertices", vs)
        if any(len(v) != self.dim for v in vs):
            raise ValueError("vertex length does not match ambient dimension")

    @cached_property
    def facets(self):
        """Inward facets (primitive integer normal, integer level)."""
        verts, facets = _hull_facets(list(self.vertices))
        if tuple(verts) != self.vertices:
            raise ValueError("vertex list contains non-vertices; use convex_hull")
        return tuple(facets)

    def contains(self, point, strict=False):
        for normal, level in self.facets:
            v = dot(normal, point)
            if v < level or (strict and v == level):
                return False
        return True

    def lattice_points(self):
        """All lattice points of the polytope, boundary included, in lex order."""
        lo, hi = _box_from_vertices(self.vertices)
        return [tuple(p) for p in _scan(list(self.facets), lo, hi)]

    def interior_lattice_points(self):
        """Lattice points strictly inside every facet, in lex order."""
        lo, hi = _box_from_vertices(self.vertices)
        return [tuple(p) for p in _scan(_integer_system(self.facets, strict=True), lo, hi)]

    def lattice_point_count(self):
        lo, hi = _box_from_vertices(self.vertices)
        return _scan(list(self.facets), lo, hi, count_only=True)

    def interior_lattice_point_count(self):
        lo, hi = _box_from_vertices(self.vertices)
        return _scan(_integer_system(self.facets, strict=True), lo, hi, count_only=True)

    def transform(self, u: UnimodularMap):
        return LatticePolytope(tuple(u(v) for v in self.vertices), self.dim)


@dataclass(frozen=True)
class RationalPolytope:
    """A rational polytope carrying both vertex and facet descriptions.

    The two descriptions are cross-checked on construction: every vertex must
    satisfy every facet, and every vertex must be tight on at least dim facets
    of full rank.
    """

    vertices: tuple
    facets: tuple
    dim: int

    def __post_init__(self):
        vs = tuple(sorted(tuple(Fraction(a) for a in v) for v in self.vertices))
        fs = tuple(sorted((tuple(int(a) for a in nrm), Fraction(lv)) for nrm, lv in self.facets))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "facets", fs)
        for v in vs:
            active = []
            for normal, level in fs:
                s = dot(normal, v)
                if s < level:
                    raise ValueError(f"vertex {v} violates facet {(normal, level)}")
                if s == level:
                    active.append(normal)
            if len(active) < self.dim or rank(active) < self.dim:
                raise ValueError(f"vertex {v} is not a vertex of the facet system")

    def contains(self, point, strict=False):
        for normal, level in self.facets:
            v = dot(normal, point)
            if v < level or (strict and v == level):
                return False
        return True

    def dilation_point_count(self, k):
        """|kQ intersect M| by direct scanning of the scaled facet system."""
        if k == 0:
            return 1
        scaled = [(normal, k * level) for normal, level in self.facets]
        verts = [tuple(k * a for a in v) for v in self.vertices]
        lo, hi = _box_from_vertices(verts)
        return _scan(_integer_system(scaled), lo, hi, count_only=True)

    def lattice_points(self):
        lo, hi = _box_from_vertices(self.vertices)
        return [tuple(p) for p in _scan(_integer_system(self.facets), lo, hi)]

    def is_integral(self):
        return all(a.denominator == 1 for v in self.vertices for a in v)

    def to_lattice(self):
        if not self.is_integral():
            raise ValueError("polytope has non-integral vertices")
        return LatticePolytope(tuple(tuple(int(a) for a in v) for v in self.vertices), self.dim)


# ---------------------------------------------------------------------------
# Public operations


def convex_hull(points) -> LatticePolytope:
    """Convex hull of integer points; raises DegenerateHull unless full-dimensional."""
    pts = [tuple(int(a) for a in p) for p in points]
    if not pts:
        raise DegenerateHull("no points given")
    n = len(pts[0])
    verts, _ = _hull_facets(pts)
    return LatticePolytope(tuple(verts), n)


def lattice_points(p: LatticePolytope):
    return p.lattice_points()


def interior_lattice_points(p: LatticePolytope):
    return p.interior_lattice_points()


def is_fano(p: LatticePolytope) -> bool:
    """Origin strictly interior and every vertex primitive."""
    if not p.contains(tuple(0 for _ in range(p.dim)), strict=True):
        return False
    return all(primitive(v) == v for v in p.vertices)


def _require_origin_interior(p: LatticePolytope):
    if not p.contains(tuple(0 for _ in range(p.dim)), strict=True):
        raise OriginNotInterior("operation needs the origin strictly inside the polytope")


def dual(p: LatticePolytope) -> RationalPolytope:
    """The polar dual {u : <u, v> >= -1 for all v in P}.

    Vertices of the dual are normal/(-level) over the facets of P; facets of
    the dual are the vertices of P paired with level -1.
    """
    _require_origin_interior(p)
    verts = []
    for normal, level in p.facets:
        k = -level
        verts.append(tuple(Fraction(a, k) for a in normal))
    facets = [(v, Fraction(-1)) for v in p.vertices]
    return RationalPolytope(tuple(verts), tuple(facets), p.dim)


def is_reflexive(p: LatticePolytope) -> bool:
    """True when the dual polytope is again a lattice polytope (all facet levels -1)."""
    _require_origin_interior(p)
    return all(level == -1 for _, level in p.facets)


def singularity_class(p: LatticePolytope) -> str:
    """Strongest of Smooth / Terminal / Canonical / WorseThanCanonical that applies.

    Terminal means the only lattice points are the vertices and the origin;
    canonical means the origin is the only interior lattice point; smooth means
    every facet is a simplex whose vertices form a lattice basis.
    """
    _require_origin_interior(p)
    interior = p.interior_lattice_points()
    canonical = interior == [tuple(0 for _ in range(p.dim))]
    total = p.lattice_point_count()
    terminal = canonical and total == len(p.vertices) + 1
    if terminal and _all_facets_unimodular(p):
        return SMOOTH
    if terminal:
        return TERMINAL
    if canonical:
        return CANONICAL
    return WORSE_THAN_CANONICAL


def _all_facets_unimodular(p: LatticePolytope) -> bool:
    for normal, level in p.facets:
        on = [v for v in p.vertices if dot(normal, v) == level]
        if len(on) != p.dim:
            return False
        if abs(det(tuple(on))) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Normal form


def _pairing_matrix(p: LatticePolytope):
    return tuple(tuple(dot(normal, v) for v in p.vertices) for normal, _ in p.facets)


def _refine_keys(pm, levels):
    """Stable vertex classes from iterated refinement of the vertex-facet pairing."""
    nf, nv = len(pm), len(pm[0])
    vkey = [tuple(sorted(pm[i][j] for i in range(nf))) for j in range(nv)]
    fkey = [tuple(sorted(pm[i])) + (levels[i],) for i in range(nf)]
    for _ in range(3):
        vnew = [
            (vkey[j], tuple(sorted((fkey[i], pm[i][j]) for i in range(nf))))
            for j in range(nv)
        ]
        fnew = [
            (fkey[i], tuple(sorted((vkey[j], pm[i][j]) for j in range(nv))))
            for i in range(nf)
        ]
        # Compress to ranks to keep keys small and hashable across rounds.
        vranks = {k: r for r, k in enumerate(sorted(set(vnew)))}
        franks = {k: r for r, k in enumerate(sorted(set(fnew)))}
        vkey2 = [(vranks[k],) for k in vnew]
        fkey2 = [(franks[k],) for k in fnew]
        if len(set(vkey2)) == len(set(vkey)) and len(set(fkey2)) == len(set(fkey)):
            vkey = vkey2
            break
        vkey, fkey = vkey2, fkey2
    return vkey


_ORDERING_CAP = 250_000


def _candidate_orderings(p: LatticePolytope):
    """Canonically determined vertex orderings to minimize the HNF over.

    In the plane these are the 2m rotations/reflections of the convex cycle;
    in higher dimension they are the orderings compatible with the refined
    pairing-matrix classes.
    """
    verts = list(p.vertices)
    if p.dim == 2:
        cycle = _monotone_chain(verts)
        m = len(cycle)
        orderings = []
        for rev in (cycle, cycle[::-1]):
            for s in range(m):
                orderings.append(tuple(rev[(s + t) % m] for t in range(m)))
        return orderings
    pm = _pairing_matrix(p)
    levels = [lvl for _, lvl in p.facets]
    vkey = _refine_keys(pm, levels)
    groups = {}
    for j, k in enumerate(vkey):
        groups.setdefault(k, []).append(verts[j])
    ordered_groups = [groups[k] for k in sorted(groups)]
    total = 1
    for g in ordered_groups:
        for i in range(2, len(g) + 1):
            total *= i
    if total > _ORDERING_CAP:
        raise RuntimeError("vertex symmetry group too large for normal form search")
    perms = [itertools.permutations(g) for g in ordered_groups]
    out = []
    for combo in itertools.product(*perms):
        out.append(tuple(v for block in combo for v in block))
    return out


def normal_form_maps(p: LatticePolytope):
    """All unimodular maps sending P to its normal form representative."""
    _require_origin_interior(p)
    best = None
    maps = []
    for ordering in _candidate_orderings(p):
        mat = transpose(ordering)  # dim x m vertex matrix
        h, u = hnf(mat)
        key = h
        if best is None or key < best:
            best = key
            maps = [u]
        elif key == best:
            maps.append(u)
    seen = []
    for u in maps:
        if u not in seen:
            seen.append(u)
    return [UnimodularMap(u) for u in seen]


def normal_form(p: LatticePolytope) -> LatticePolytope:
    """Canonical representative of the GL(n, Z) orbit of P.

    Two Fano polytopes have equal normal forms exactly when one is a
    unimodular image of the other. The representative is the lexicographically
    smallest Hermite normal form of the vertex matrix over a canonically
    determined family of vertex orderings, so it is deterministic and
    idempotent.
    """
    u = normal_form_maps(p)[0]
    return p.transform(u)


# ---------------------------------------------------------------------------
# Fano polygon enumeration


def _polygon_data(points):
    """(ccw cycle, twice-area, boundary count, interior count) of a lattice polygon."""
    cycle = _monotone_chain(points)
    twice_area = 0
    boundary = 0
    m = len(cycle)
    for i in range(m):
        a = cycle[i]
        b = cycle[(i + 1) % m]
        twice_area += a[0] * b[1] - a[1] * b[0]
        boundary += gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
    twice_area = abs(twice_area)
    interior = (twice_area - boundary + 2) // 2
    return cycle, twice_area, boundary, interior


def _origin_strictly_inside(cycle):
    m = len(cycle)
    sign = 0
    for i in range(m):
        a = cycle[i]
        b = cycle[(i + 1) % m]
        c = a[0] * b[1] - a[1] * b[0]
        if c == 0:
            return False
        s = 1 if c > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def default_polygon_box(interior_points: int) -> int:
    """Half-side of the vertex search box: linear in the interior point budget.

    Polygons with k interior points have normalized volume at most 2(2k+1)^2,
    which confines a suitable representative of each class to a box of side
    O(k); the enumeration double-checks stability under enlarging the box by
    one rather than relying on a sharp constant.
    """
    return 3 * interior_points + 1


def enumerate_fano_polygons(interior_points: int, box: int | None = None):
    """All Fano polygons, up to GL(2, Z), with exactly this many interior points.

    Fano means primitive vertices and the origin strictly inside (so the
    origin is always one of the interior points). The search grows polygons
    vertex-by-vertex from the irreducible seeds: triangles, and quadrilaterals
    whose diagonals cross at the origin. Removing a vertex of any larger Fano
    polygon keeps the origin strictly inside for at least one choice, so the
    upward search is exhaustive within the box.

    Returns normal forms, sorted, each with exactly `interior_points` interior
    lattice points.
    """
    if interior_points < 1:
        raise ValueError("interior point count must be at least 1")
    k = interior_points
    b = default_polygon_box(k) if box is None else box
    prim = sorted(
        (x, y)
        for x in range(-b, b + 1)
        for y in range(-b, b + 1)
        if (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1
    )

    states = {}

    def consider(points):
        cycle, _, _, interior = _polygon_data(points)
        if interior > k or not _origin_strictly_inside(cycle):
            return None
        key = frozenset(cycle)
        if key in states:
            return None
        states[key] = (tuple(cycle), interior)
        return key

    frontier = []
    npts = len(prim)
    for i in range(npts):
        a = prim[i]
        for j in range(i + 1, npts):
            c = prim[j]
            s1 = a[0] * c[1] - a[1] * c[0]
            if s1 == 0:
                continue
            # central quadrilateral seed {a, c, -a, -c}: diagonals cross at the origin
            key = consider([a, c, vec_neg(a), vec_neg(c)])
            if key is not None:
                frontier.append(key)
            for l in range(j + 1, npts):
                e = prim[l]
                s2 = c[0] * e[1] - c[1] * e[0]
                s3 = e[0] * a[1] - e[1] * a[0]
                # origin strictly inside the triangle a, c, e
                if (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0):
                    key = consider([a, c, e])
                    if key is not None:
                        frontier.append(key)

    while frontier:
        key = frontier.pop()
        cycle, _ = states[key]
        current = set(cycle)
        for q in prim:
            if q in current:
                continue
            grown = consider(list(cycle) + [q])
            if grown is not None:
                frontier.append(grown)

    classes = {}
    for cycle, interior in states.values():
        if interior != k:
            continue
        poly = LatticePolytope(tuple(cycle), 2)
        nf = normal_form(poly)
        classes[nf.vertices] = nf
    return [classes[key] for key in sorted(classes)]
