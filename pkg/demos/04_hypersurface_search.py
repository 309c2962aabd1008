"""The 95 quasismooth terminal hypersurfaces and their Laurent mirrors.

A candidate X_d in P(1, a1, a2, a3, a4) with d = a1+a2+a3+a4 survives when the
general member is quasismooth (every coordinate stratum carries the right
monomials) and its quotient singularities are isolated and terminal.
"""

from fanoscape import (
    HypersurfaceCandidate,
    candidate_invariants,
    classical_period,
    genus,
    interior_point_formula,
    is_quasismooth,
    is_terminal,
    newton_polytope,
    przyjalkowski_mirror,
    search_famous_95,
)

# Small weights first: the search is monotone in the weight bound.
small = search_famous_95(3)
for c in small:
    g, _ = candidate_invariants(c)
    print(f"X_{c.degree} in P{c.weights}  genus {g}")

# A candidate that is quasismooth yet fails terminality along a curve:
bad = HypersurfaceCandidate((1, 2, 2, 2, 2), 8)
print("\nX_8 in P(1,2,2,2,2): quasismooth =", is_quasismooth(bad).verdict)
print("terminal =", is_terminal(bad).verdict)
print("reason:", is_terminal(bad).failures[0])

# The top of the list: degree 66. Its mirror simplex is huge on the inside.
x66 = HypersurfaceCandidate((1, 5, 6, 22, 33), 66)
report = is_terminal(x66)
print("\nX_66 quotient points:")
for pt in report.singular_points:
    print(f"  1/{pt.index}{pt.local_weights}  minimal age {pt.reid_tai_minimum}  x{pt.count}")

mirror = przyjalkowski_mirror(x66.weights, x66.degree)
poly = newton_polytope(mirror)
print("mirror simplex interior points:", poly.interior_lattice_point_count(),
      "= tetrahedral number", interior_point_formula(66))
print("genus from the polytope:", genus(poly))
print("first period coefficients:", [str(c) for c in classical_period(mirror, 2).series.coefficients])
