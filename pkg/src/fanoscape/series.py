"""Truncated power series and rational generating functions in one variable t.

These carry Ehrhart series, anticanonical Hilbert series, and classical
periods. Coefficients are exact rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroWeight


@dataclass(frozen=True)
class TruncatedSeries:
    """Prefix of a power series: coefficient of t^d at index d, truncated at `order`."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )
        if not self.coefficients:
            raise ValueError("a truncated series needs at least one coefficient")

    @property
    def order(self):
        return len(self.coefficients)

    def coefficient(self, d):
        if not 0 <= d < self.order:
            raise IndexError(f"coefficient {d} beyond truncation order {self.order}")
        return self.coefficients[d]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[:order])

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[:order]
        )

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coefficients[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients[: order - i]):
                out[i + j] += a * b
        return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class RationalGeneratingFunction:
    """numerator(t) / prod_w (1 - t^w), stored as the numerator coefficient list
    and the list of denominator exponents w."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(int(a) for a in self.numerator))
        den = tuple(int(w) for w in self.denominator)
        if any(w <= 0 for w in den):
            raise ZeroWeight("denominator exponents must be positive integers")
        object.__setattr__(self, "denominator", tuple(sorted(den)))

    def expand(self, order: int) -> TruncatedSeries:
        """Series expansion to the given exclusive order, by geometric-series sweeps."""
        if order < 1:
            raise ValueError("order must be at least 1")
        coeffs = [Fraction(0)] * order
        for d, a in enumerate(self.numerator[:order]):
            coeffs[d] = Fraction(a)
        # multiplying by 1/(1 - t^w) is a running sum with stride w
        for w in self.denominator:
            for d in range(w, order):
                coeffs[d] += coeffs[d - w]
        return TruncatedSeries(tuple(coeffs))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def hilbert_series_complete_intersection(weights, degrees) -> RationalGeneratingFunction:
    """Hilbert series prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j}).

    With no degrees this is the series of the weighted projective space itself;
    each equation degree contributes one numerator factor. The expansion
    coefficient of t^n is the dimension of the degree-n graded piece for a
    general complete intersection of those degrees.
    """
    ws = tuple(int(w) for w in weights)
    ds = tuple(int(d) for d in degrees)
    if not ws:
        raise ZeroWeight("need at least one weight")
    if any(w <= 0 for w in ws):
        raise ZeroWeight("weights must be positive integers")
    if any(d <= 0 for d in ds):
        raise ZeroWeight("equation degrees must be positive integers")
    num = [1]
    for d in ds:
        factor = [0] * (d + 1)
        factor[0] = 1
        factor[d] = -1
        num = _poly_mul(num, factor)
    return RationalGeneratingFunction(tuple(num), ws)


def series_match(h: RationalGeneratingFunction, s: TruncatedSeries) -> bool:
    """True when the expansion of h agrees with s through s.order."""
    return h.expand(s.order).coefficients == s.coefficients
