"""Small exact linear algebra over Z and Q used throughout the package.

Everything here works on tuples of Python ints or fractions.Fraction; no
floating point is allowed anywhere near polytope predicates.
"""

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_neg(u):
    return tuple(-a for a in u)


def mat_vec(m, v):
    """Apply the matrix (tuple of rows) to a column vector."""
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*m))


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def primitive(v):
    """Divide an integer vector by the gcd of its entries; zero stays zero."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def clear_denominators(v):
    """Scale a rational vector to a primitive integer vector, preserving direction."""
    fracs = [Fraction(a) for a in v]
    lcm = 1
    for a in fracs:
        d = a.denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive(tuple(int(a * lcm) for a in fracs))


def det(m):
    """Exact determinant by cofactor expansion; fine for the n <= 4 sizes used here."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    rest = m[1:]
    sign = 1
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in rest)
        if m[0][j]:
            total += sign * m[0][j] * det(minor)
        sign = -sign
    return total


def rank(rows):
    """Rank over Q via Gaussian elimination with exact fractions."""
    work = [[Fraction(a) for a in row] for row in rows]
    r = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][c]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def affine_rank(points):
    """Dimension of the affine span of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([vec_sub(p, base) for p in points[1:]])


def kernel_vector(rows):
    """A nonzero integer vector orthogonal to n-1 independent rows of length n.

    Computed from signed maximal minors (the generalized cross product), then
    made primitive. Raises ValueError if the rows do not have rank n-1.
    """
    n = len(rows[0])
    if len(rows) != n - 1:
        raise ValueError("need exactly n-1 rows")
    entries = []
    for j in range(n):
        minor = tuple(tuple(row[k] for k in range(n) if k != j) for row in rows)
        entries.append((-1) ** j * det(minor))
    v = clear_denominators(entries)
    if all(a == 0 for a in v):
        raise ValueError("rows are not of rank n-1")
    return v


def solve_rational(m, b):
    """Solve m x = b exactly over Q; m square nonsingular. Returns Fraction tuple."""
    n = len(m)
    work = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        work[c], work[pivot] = work[pivot], work[c]
        pv = work[c][c]
        work[c] = [a / pv for a in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * bb for a, bb in zip(work[i], work[c])]
    return tuple(work[i][n] for i in range(n))


def inverse_rational(m):
    """Exact inverse of a square rational matrix as a tuple of Fraction rows."""
    n = len(m)
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        cols.append(solve_rational(m, e))
    return tuple(zip(*cols))


def inverse_unimodular(m):
    """Inverse of a determinant +-1 integer matrix, returned with integer entries."""
    inv = inverse_rational(m)
    return tuple(tuple(int(a) for a in row) for row in inv)


def hnf(mat):
    """Row Hermite normal form H = U . mat with U in GL(n, Z).

    Pivots are positive, entries above each pivot are reduced into [0, pivot).
    The result is the unique canonical representative of the left GL(n, Z)
    orbit of `mat`, which is what the polytope normal form minimizes over.
    Returns (H, U).
    """
    h = [list(row) for row in mat]
    n = len(h)
    u = [list(row) for row in identity(n)]
    cols = len(h[0]) if h else 0
    r = 0
    for c in range(cols):
        if r == n:
            break
        # Euclid rows r..n-1 on column c down to a single nonzero entry.
        while True:
            nz = [i for i in range(r, n) if h[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            if all(h[i][c] == 0 for i in range(r + 1, n)):
                break
            for i in range(r + 1, n):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-a for a in h[r]]
            u[r] = [-a for a in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        r += 1
    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


def integer_orthogonal_complement(rows, n):
    """Primitive basis of {u in Z^n : <u, row> = 0 for every row}.

    The rows of U in H = U . M that pair with zero rows of H form a basis of
    the left kernel, and because U is unimodular that basis is saturated.
    """
    if not rows:
        return tuple(identity(n))
    m = transpose(tuple(tuple(r) for r in rows))  # n x k, left kernel = complement
    h, u = hnf(m)
    return tuple(u[i] for i in range(len(h)) if all(a == 0 for a in h[i]))


def sublattice_basis(vectors):
    """Basis of span_Q(vectors) intersected with Z^n (the saturated sublattice)."""
    vecs = [tuple(v) for v in vectors]
    n = len(vecs[0])
    comp = integer_orthogonal_complement(vecs, n)
    return integer_orthogonal_complement(comp, n)


def complete_to_unimodular(w):
    """A GL(n, Z) matrix T whose last row is the primitive vector w.

    Applying T to an exponent vector e puts the pairing <w, e> into the last
    coordinate, which is how mutations split a Laurent polynomial into graded
    slices.
    """
    w = tuple(w)
    if primitive(w) != w or all(a == 0 for a in w):
        raise ValueError("weight vector must be primitive")
    # U . w^T = (1, 0, .., 0)^T, so the first row of (U^T)^-1 is w itself.
    h, u = hnf(tuple((a,) for a in w))
    if h[0][0] != 1:
        raise ValueError("weight vector must be primitive")
    s = inverse_unimodular(transpose(u))
    t = tuple(s[1:]) + (s[0],)
    if abs(det(t)) != 1:
        raise AssertionError("unimodular completion failed")
    return t
