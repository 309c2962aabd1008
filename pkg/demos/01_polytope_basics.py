"""Lattice polytopes: hulls, duality, and singularity predicates.

Everything is exact: vertices are integer tuples, dual vertices are rationals,
and predicates never touch floating point.
"""

from fanoscape import (
    convex_hull,
    dual,
    enumerate_fano_polygons,
    is_fano,
    is_reflexive,
    normal_form,
    singularity_class,
)

# The hull drops interior points and keeps a canonical vertex order.
triangle = convex_hull([(1, 0), (0, 1), (-1, -1), (0, 0)])
print("triangle vertices:", triangle.vertices)
print("lattice points:", triangle.lattice_points())
print("interior points:", triangle.interior_lattice_points())

# Fano: origin strictly inside, primitive vertices. This one is even reflexive:
# its polar dual is again a lattice polytope.
print("fano:", is_fano(triangle), " reflexive:", is_reflexive(triangle))
print("dual vertices:", dual(triangle).vertices)

# A threefold example: the simplex spanning the fan of projective 3-space.
p3 = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
print("\nP^3 simplex is", singularity_class(p3))
for shift in (-1, -2, -3):
    p = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, shift)])
    print(f"last vertex (-1,-1,{shift}):", singularity_class(p))

# Normal forms decide unimodular equivalence, so shears do not create new classes.
from fanoscape import UnimodularMap

sheared = triangle.transform(UnimodularMap(((1, 3), (0, 1))))
print("\nsheared vertices:", sheared.vertices)
print("same class:", normal_form(sheared) == normal_form(triangle))

# All Fano polygons with exactly one interior lattice point, up to equivalence.
polys = enumerate_fano_polygons(1)
print(f"\n{len(polys)} one-point polygon classes; vertex counts:",
      sorted(len(p.vertices) for p in polys))
