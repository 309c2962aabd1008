"""Sparse Laurent polynomials, Newton polytopes, and classical periods.

A Laurent polynomial is a finitely supported map from integer exponent
vectors to nonzero rational coefficients. The classical period of f is the
series whose d-th coefficient is the constant-exponent coefficient of f^d;
powers are expanded with support pruning so that exponents which cannot
return to zero within the remaining multiplications are dropped.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateHull
from .linalg import dot, vec_neg
from .polytope import LatticePolytope, UnimodularMap, convex_hull
from .series import TruncatedSeries


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms, nvars=None):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for e, c in items:
            e = tuple(int(a) for a in e)
            c = Fraction(c)
            if c != 0:
                data[e] = data.get(e, Fraction(0)) + c
                if data[e] == 0:
                    del data[e]
        if nvars is None:
            if not data:
                raise ValueError("cannot infer variable count of the zero polynomial")
            nvars = len(next(iter(data)))
        if any(len(e) != nvars for e in data):
            raise ValueError("inconsistent exponent lengths")
        object.__setattr__(self, "terms", data)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({tuple(0 for _ in range(nvars)): Fraction(c)}, nvars)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({tuple(exponent): Fraction(coefficient)}, len(tuple(exponent)))

    @classmethod
    def variable(cls, index, nvars):
        e = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({e: Fraction(1)}, nvars)

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def constant_term(self):
        return self.terms.get(tuple(0 for _ in range(self.nvars)), Fraction(0))

    def sorted_terms(self):
        """Canonical term order used for serialization and hashing."""
        return tuple((e, self.terms[e]) for e in sorted(self.terms))

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def has_integer_coefficients(self):
        return all(c.denominator == 1 for c in self.terms.values())

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        return LaurentPolynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            data[e] = data.get(e, Fraction(0)) + c
        return LaurentPolynomial(data, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        data = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = data.get(e)
                data[e] = c1 * c2 if v is None else v + c1 * c2
        return LaurentPolynomial(data, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = LaurentPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, self.sorted_terms())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "LaurentPolynomial(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}^{p}" for i, p in enumerate(e) if p
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "LaurentPolynomial(" + " + ".join(bits) + ")"

    # -- structure ---------------------------------------------------------

    def transform(self, u: UnimodularMap):
        """Monomial change of variables: exponent vectors map through u."""
        return LaurentPolynomial(
            {tuple(u(e)): c for e, c in self.terms.items()}, self.nvars
        )

    def weight_slices(self, weight):
        """Split into parts of fixed pairing against the weight vector."""
        slices = {}
        for e, c in self.terms.items():
            h = dot(weight, e)
            slices.setdefault(h, {})[e] = c
        return {
            h: LaurentPolynomial(data, self.nvars) for h, data in sorted(slices.items())
        }


@dataclass(frozen=True)
class ClassicalPeriod:
    """Constant-term series of the powers of a Laurent polynomial."""

    series: TruncatedSeries

    def coefficient(self, d):
        return self.series.coefficient(d)

    @property
    def order(self):
        return self.series.order


def newton_polytope(f: LaurentPolynomial) -> LatticePolytope:
    """Convex hull of the support; requires full-dimensional support."""
    if f.is_zero():
        raise DegenerateHull("the zero polynomial has no Newton polytope")
    return convex_hull(f.support())


def _pruning_test(f: LaurentPolynomial):
    """Return keep(e, r): can -e be written as a sum of r support vectors (necessary test).

    Uses the exact Newton polytope facets when the support is full-dimensional,
    otherwise per-coordinate support bounds. Either way the test is sound: it
    never discards an exponent that could still reach zero.
    """
    support = f.support()
    n = f.nvars
    lo = [min(e[i] for e in support) for i in range(n)]
    hi = [max(e[i] for e in support) for i in range(n)]
    facets = None
    try:
        facets = newton_polytope(f).facets
    except DegenerateHull:
        pass

    def keep(e, r):
        if r == 0:
            return not any(e)
        for i in range(n):
            if not r * lo[i] <= -e[i] <= r * hi[i]:
                return False
        if facets is not None:
            for normal, level in facets:
                if dot(normal, vec_neg(e)) < r * level:
                    return False
        return True

    return keep


def classical_period(f: LaurentPolynomial, order: int) -> ClassicalPeriod:
    """Series of constant-term coefficients of f^d for 0 <= d < order.

    Powers are built by repeated multiplication; after the d-th step any
    exponent that cannot return to the origin within the remaining order-1-d
    multiplications is pruned, which keeps mirrors of large simplices
    tractable without changing any retained coefficient.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = [Fraction(0)] * order
    coeffs[0] = Fraction(1)
    if order > 1:
        keep = _pruning_test(f)
        zero = tuple(0 for _ in range(f.nvars))
        current = {zero: Fraction(1)}
        fterms = list(f.terms.items())
        for d in range(1, order):
            remaining = order - 1 - d
            nxt = {}
            for e1, c1 in current.items():
                for e2, c2 in fterms:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    if not keep(e, remaining):
                        continue
                    v = nxt.get(e)
                    nxt[e] = c1 * c2 if v is None else v + c1 * c2
            current = {e: c for e, c in nxt.items() if c != 0}
            coeffs[d] = current.get(zero, Fraction(0))
    if f.has_integer_coefficients():
        bad = [c for c in coeffs if c.denominator != 1]
        if bad:
            raise AssertionError("period of an integer polynomial must have integer coefficients")
    return ClassicalPeriod(TruncatedSeries(tuple(coeffs)))
