import random

import pytest

from fanoscape import (
    LatticePolytope,
    LaurentPolynomial,
    UnimodularMap,
    convex_hull,
    przyjalkowski_mirror,
)


@pytest.fixture
def reflexive_triangle():
    return convex_hull([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture
def p3_simplex():
    return convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])


@pytest.fixture
def quartic_mirror_polytope():
    return convex_hull([(-1, -1, -1), (3, -1, -1), (-1, 3, -1), (-1, -1, 3)])


@pytest.fixture
def x66_mirror_polytope():
    d, a2, a3, a4 = 66, 6, 22, 33
    return convex_hull(
        [
            (-a2, -a3, -a4),
            (d - a2, -a3, -a4),
            (-a2, d - a3, -a4),
            (-a2, -a3, d - a4),
        ]
    )


@pytest.fixture
def cubic_mirror():
    return przyjalkowski_mirror((1, 1, 1), 3)


@pytest.fixture
def worked_mutation_poly():
    # y + x + 1/x + (1+x)^2/(xy)
    return LaurentPolynomial(
        {(0, 1): 1, (1, 0): 1, (-1, 0): 1, (-1, -1): 1, (0, -1): 2, (1, -1): 1}
    )


def random_unimodular(n, rng, steps=6):
    """Product of elementary shears, swaps, and sign flips."""
    from fanoscape.linalg import identity, mat_mul

    m = [list(row) for row in identity(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            elem = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            elem[i][j] = c
        elif kind == 1 and i != j:
            elem = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            elem[i][i] = elem[j][j] = 0
            elem[i][j] = elem[j][i] = 1
        else:
            elem = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            elem[i][i] = -1
        m = [list(row) for row in mat_mul(tuple(tuple(r) for r in elem), tuple(tuple(r) for r in m))]
    return UnimodularMap(tuple(tuple(row) for row in m))


@pytest.fixture
def rng():
    return random.Random(20240815)
