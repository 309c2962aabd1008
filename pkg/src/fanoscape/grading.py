"""Graded invariants read off a Fano polytope: dual Ehrhart series, genus,
and the Hilbert-basis codimension estimate."""

from .cones import anticanonical_cone, hilbert_basis
from .errors import DimensionMismatch, FanoscapeError
from .polytope import LatticePolytope, RationalPolytope, dual
from .series import TruncatedSeries


def ehrhart_series(q: RationalPolytope, order: int) -> TruncatedSeries:
    """Coefficient of t^k is the lattice point count of the k-th dilation of q."""
    if order < 1:
        raise ValueError("order must be at least 1")
    origin = tuple(0 for _ in range(q.dim))
    if not q.contains(origin):
        raise FanoscapeError("Ehrhart series here expects a polytope containing the origin")
    return TruncatedSeries(tuple(q.dilation_point_count(k) for k in range(order)))


def genus(p: LatticePolytope) -> int:
    """Lattice points of the dual polytope minus two.

    For the toric variety of the spanning fan this is dim H^0(-K) - 2, the
    genus of the anticanonical model.
    """
    if p.dim != 3:
        raise DimensionMismatch("genus is defined here for 3-dimensional Fano polytopes")
    return dual(p).dilation_point_count(1) - 2


def codimension_estimate(p: LatticePolytope) -> int:
    """Hilbert-basis size of the cone over (dual polytope) x {1}, minus four.

    The Hilbert basis elements are the generators of the anticanonical ring of
    the toric variety, so the ambient weighted projective space has |HB| - 1
    + 1 coordinates and the estimated codimension of the 3-fold is |HB| - 4.
    This is the estimate, not a claim about the true minimal embedding.
    """
    if p.dim != 3:
        raise DimensionMismatch("codimension estimate needs a 3-dimensional Fano polytope")
    hb = hilbert_basis(anticanonical_cone(dual(p)))
    return len(hb) - 4
