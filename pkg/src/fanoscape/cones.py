"""Pointed rational cones and Hilbert bases.

The Hilbert basis algorithm is completion-style: candidate irreducibles are
collected from the half-open parallelepipeds of every linearly independent
generator subset (Caratheodory covers the cone by those simplicial pieces),
then filtered by a graded irreducibility pass. Cones at desk scale have at
most a few dozen basis elements, so no project-and-lift machinery is needed.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DimensionMismatch, NotPointed
from .linalg import (
    clear_denominators,
    det,
    dot,
    inverse_rational,
    kernel_vector,
    primitive,
    rank,
    solve_rational,
    sublattice_basis,
    transpose,
    vec_sub,
)


@dataclass(frozen=True)
class PointedCone:
    """Cone spanned by finitely many primitive integer generators, containing no line."""

    generators: tuple
    dim: int

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = primitive(tuple(int(a) for a in g))
            if any(g) and g not in gens:
                gens.append(g)
        if not gens:
            raise ValueError("cone needs at least one nonzero generator")
        if any(len(g) != self.dim for g in gens):
            raise ValueError("generator length does not match ambient dimension")
        object.__setattr__(self, "generators", tuple(sorted(gens)))
        if not self._pointed:
            raise NotPointed("cone contains a line")

    @cached_property
    def _coords(self):
        """(basis rows of the saturated span, generator coordinates in that basis)."""
        basis = sublattice_basis(self.generators)
        k = len(basis)
        gens_c = tuple(_coords_of(basis, g) for g in self.generators)
        return basis, k, gens_c

    @cached_property
    def _facets(self):
        """Inward facet normals (>= 0 on the cone) in span coordinates."""
        basis, k, gens_c = self._coords
        if k == 1:
            if all(g[0] > 0 for g in gens_c):
                return ((1,),)
            if all(g[0] < 0 for g in gens_c):
                return ((-1,),)
            return ()
        normals = set()
        for subset in itertools.combinations(gens_c, k - 1):
            if rank(list(subset)) != k - 1:
                continue
            try:
                nrm = kernel_vector(subset)
            except ValueError:
                continue
            vals = [dot(nrm, g) for g in gens_c]
            if all(v >= 0 for v in vals):
                normals.add(nrm)
            elif all(v <= 0 for v in vals):
                normals.add(tuple(-a for a in nrm))
        return tuple(sorted(normals))

    @cached_property
    def _pointed(self):
        _, k, _ = self._coords
        facets = self._facets
        return bool(facets) and rank(list(facets)) == k

    @cached_property
    def grading(self):
        """Integer functional strictly positive on every nonzero cone point (span coords)."""
        _, k, _ = self._coords
        c = tuple(sum(col) for col in zip(*self._facets))
        return c

    def contains(self, v) -> bool:
        basis, k, _ = self._coords
        try:
            y = _coords_of(basis, v)
        except ValueError:
            return False
        return all(dot(nrm, y) >= 0 for nrm in self._facets)

    def coords_of(self, v):
        basis, _, _ = self._coords
        return _coords_of(basis, v)

    def from_coords(self, y):
        basis, _, _ = self._coords
        return tuple(dot(col, y) for col in transpose(basis))


def _least_squares_exact(bt, v):
    """Solve bt . y = v for y when consistent (bt is n x k of rank k)."""
    # Normal equations over Q are exact and well posed because bt has full column rank.
    btt = transpose(bt)
    gram = tuple(tuple(dot(r1, r2) for r2 in btt) for r1 in btt)
    rhs = tuple(dot(r, v) for r in btt)
    return solve_rational(gram, rhs)


def _coords_of(basis, v):
    """Integer coordinates of v in the saturated basis; raises if v is outside the span."""
    bt = transpose(basis)
    sol = _least_squares_exact(bt, v)
    if any(Fraction(a).denominator != 1 for a in sol):
        raise ValueError("vector outside span")
    y = tuple(int(a) for a in sol)
    if tuple(dot(row, y) for row in bt) != tuple(v):
        raise ValueError("vector outside span")
    return y


@dataclass(frozen=True)
class HilbertBasis:
    """The unique minimal generating set of the monoid of lattice points of a pointed cone."""

    elements: tuple
    cone: PointedCone

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def anticanonical_cone(q) -> PointedCone:
    """The four-dimensional cone over Q x {1} for a three-dimensional rational polytope Q."""
    if q.dim != 3:
        raise DimensionMismatch(f"need a 3-dimensional polytope, got dimension {q.dim}")
    gens = []
    for v in q.vertices:
        gens.append(clear_denominators(tuple(v) + (Fraction(1),)))
    return PointedCone(tuple(gens), 4)


def hilbert_basis(cone: PointedCone) -> HilbertBasis:
    """Minimal monoid generators, sorted by grading degree then lexicographically."""
    basis_rows, k, gens_c = cone._coords
    facets = cone._facets
    grading = cone.grading

    candidates = set(gens_c)
    for subset in itertools.combinations(gens_c, k):
        d = det(subset)
        if d == 0:
            continue
        candidates.update(_parallelepiped_points(subset, d))

    def in_cone_coords(y):
        return all(dot(nrm, y) >= 0 for nrm in facets)

    ordered = sorted(candidates, key=lambda y: (dot(grading, y), y))
    basis = []
    for y in ordered:
        reducible = False
        for z in basis:
            diff = vec_sub(y, z)
            if any(diff) and in_cone_coords(diff):
                reducible = True
                break
        if not reducible:
            basis.append(y)

    elements = sorted(cone.from_coords(y) for y in basis)
    return HilbertBasis(tuple(elements), cone)


def _parallelepiped_points(subset, d):
    """Nonzero lattice points of {sum t_i h_i : 0 <= t_i < 1} for independent h_i."""
    k = len(subset)
    h = transpose(subset)  # columns are the h_i
    # adjugate trick keeps the membership test in integers: t = adj(H) x / det(H)
    inv = inverse_rational(h)
    adj = tuple(tuple(int(a * d) for a in row) for row in inv)
    lo = tuple(sum(min(0, subset[i][j]) for i in range(k)) for j in range(k))
    hi = tuple(sum(max(0, subset[i][j]) for i in range(k)) for j in range(k))
    out = []
    for x in itertools.product(*[range(l, u + 1) for l, u in zip(lo, hi)]):
        if not any(x):
            continue
        ok = True
        for row in adj:
            s = dot(row, x)
            if d > 0:
                if s < 0 or s >= d:
                    ok = False
                    break
            else:
                if s > 0 or s <= d:
                    ok = False
                    break
        if ok:
            out.append(x)
    return out
