"""Genus, codimension, and series invariants read off a Fano polytope.

The genus is the dual lattice point count minus two; the codimension estimate
counts Hilbert basis elements of the cone over the dual polytope at height one.
"""

from fanoscape import (
    anticanonical_cone,
    codimension_estimate,
    convex_hull,
    dual,
    ehrhart_series,
    genus,
    hilbert_basis,
    hilbert_series_complete_intersection,
    series_match,
)

p3 = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])

# The anticanonical model of projective 3-space is the fourth Veronese:
# 35 sections, so genus 33, embedded in codimension 31.
print("dual Ehrhart series of P^3:", ehrhart_series(dual(p3), 4).coefficients)
print("genus:", genus(p3))
hb = hilbert_basis(anticanonical_cone(dual(p3)))
print("Hilbert basis size:", len(hb), "-> codimension", codimension_estimate(p3))

# The quartic threefold degenerates to the toric variety of this simplex:
quartic = convex_hull([(-1, -1, -1), (3, -1, -1), (-1, 3, -1), (-1, -1, 3)])
print("\nquartic-mirror simplex: genus", genus(quartic),
      "codimension", codimension_estimate(quartic))

# Its Hilbert series (1 - t^4) / (1 - t)^5 matches the dual Ehrhart series.
h = hilbert_series_complete_intersection((1, 1, 1, 1, 1), (4,))
s = ehrhart_series(dual(quartic), 10)
print("series match:", series_match(h, s))
print("first coefficients:", s.coefficients[:5])

# A complete intersection with no anticanonical sections at all: such a
# threefold can never degenerate to a toric variety.
h0 = hilbert_series_complete_intersection((2, 3, 4, 5, 6, 7), (12, 14))
print("\nX(12,14) in P(2,3,4,5,6,7) section dimensions:",
      h0.expand(6).coefficients)
