"""Classical periods and mutations of Laurent polynomials.

The classical period collects the constant-term coefficients of powers of f.
Mutations rewrite f slice by slice against a weight vector; they change the
polynomial (and its Newton polytope) but never the period.
"""

from fanoscape import (
    LaurentPolynomial,
    MutationData,
    SearchBounds,
    algebraic_mutation,
    classical_period,
    combinatorial_mutation,
    dual,
    ehrhart_series,
    mutation_neighbours,
    newton_polytope,
    normal_form,
    przyjalkowski_mirror,
)

# The cubic surface mirror: the shift -6 makes the degree-one coefficient vanish.
cubic = przyjalkowski_mirror((1, 1, 1), 3)
print("cubic mirror period:", [str(c) for c in classical_period(cubic, 7).series.coefficients])

# A worked mutation: weight (0,1), factor 1+x.
f = LaurentPolynomial({(0, 1): 1, (1, 0): 1, (-1, 0): 1, (-1, -1): 1, (0, -1): 2, (1, -1): 1})
m = MutationData((0, 1), LaurentPolynomial({(0, 0): 1, (1, 0): 1}))
g = algebraic_mutation(f, m)
print("\nmutated terms:", g.sorted_terms())
print("periods agree:", classical_period(f, 10).series == classical_period(g, 10).series)

# The polytope shadow does the same at the level of Newton polytopes.
p = newton_polytope(f)
q = combinatorial_mutation(p, m.weight, m.factor)
print("shadow agrees with Newton polytope of the mutation:", q == newton_polytope(g))
print("dual Ehrhart preserved:", ehrhart_series(dual(q), 10) == ehrhart_series(dual(p), 10))
print("but the polytopes are inequivalent:", normal_form(q) != normal_form(p))

# Bounded neighbour search: every valid mutation with small weights and factors.
for data, out in mutation_neighbours(f, SearchBounds(1, 3)):
    print("weight", data.weight, "factor", data.factor.sorted_terms())
