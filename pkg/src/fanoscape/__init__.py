"""Exact computational toolkit for the landscape of mildly singular Fano threefolds.

The package is organized around five layers:

* :mod:`fanoscape.polytope` -- exact lattice geometry: hulls, point counts,
  duality, Fano/reflexive/terminality predicates, normal forms, and the
  exhaustive enumeration of Fano polygons by interior point count.
* :mod:`fanoscape.cones` / :mod:`fanoscape.grading` / :mod:`fanoscape.series`
  -- Hilbert bases of pointed cones, dual Ehrhart series, genus and
  codimension estimates, and Hilbert series of weighted complete intersections.
* :mod:`fanoscape.laurent` / :mod:`fanoscape.mutation` -- sparse Laurent
  polynomials, classical periods, and period-preserving mutations with their
  polytope shadows.
* :mod:`fanoscape.hypersurfaces` -- quasismoothness and terminality of
  weighted hypersurface candidates, their Laurent mirrors, and the search
  that reproduces the 95 families.
* :mod:`fanoscape.landscape` -- record stores and deterministic SVG plots of
  the genus/codimension landscape.
"""

from .cones import HilbertBasis, PointedCone, anticanonical_cone, hilbert_basis
from .errors import (
    DegenerateHull,
    DimensionMismatch,
    DuplicateId,
    EmptyStore,
    FanoscapeError,
    NotMutable,
    NotPointed,
    NotQuasismooth,
    OriginNotInterior,
    ParseError,
    WeightMismatch,
    ZeroWeight,
)
from .grading import codimension_estimate, ehrhart_series, genus
from .hypersurfaces import (
    HypersurfaceCandidate,
    QuasismoothReport,
    TerminalityReport,
    candidate_invariants,
    interior_point_formula,
    is_quasismooth,
    is_terminal,
    przyjalkowski_mirror,
    search_famous_95,
)
from .landscape import (
    LandscapeRecord,
    LandscapeStore,
    PlotSpec,
    emit_plot,
    ingest,
    record_from_candidate,
    record_from_polytope,
)
from .laurent import ClassicalPeriod, LaurentPolynomial, classical_period, newton_polytope
from .mutation import (
    MutationData,
    SearchBounds,
    algebraic_mutation,
    canonical_form,
    combinatorial_mutation,
    laurent_divide,
    mutation_neighbours,
)
from .polytope import (
    LatticePolytope,
    RationalPolytope,
    UnimodularMap,
    convex_hull,
    dual,
    enumerate_fano_polygons,
    interior_lattice_points,
    is_fano,
    is_reflexive,
    lattice_points,
    normal_form,
    normal_form_maps,
    singularity_class,
)
from .series import (
    RationalGeneratingFunction,
    TruncatedSeries,
    hilbert_series_complete_intersection,
    series_match,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
