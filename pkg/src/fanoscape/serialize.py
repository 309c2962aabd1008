"""JSON codecs for the shared wire formats.

Polytope: {"dim": n, "vertices": [[int, ...], ...]} with vertices in canonical order.
Series: {"order": n, "coeffs": ["rational-as-string", ...]}.
Generating function: {"num": [int, ...], "den": [int, ...]}.
Laurent: {"n": k, "terms": [{"e": [int, ...], "c": "rational-as-string"}, ...]}.
Candidate: {"weights": [...], "degree": d, "genus": g, "quasismooth": b, "terminal": b}.
"""

import json
from fractions import Fraction

from .errors import ParseError
from .laurent import LaurentPolynomial
from .polytope import LatticePolytope, convex_hull
from .series import RationalGeneratingFunction, TruncatedSeries


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def polytope_to_json(p: LatticePolytope) -> dict:
    return {"dim": p.dim, "vertices": [list(v) for v in p.vertices]}


def polytope_from_json(data) -> LatticePolytope:
    try:
        dim = int(data["dim"])
        vertices = [tuple(int(a) for a in v) for v in data["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polytope record: {exc}") from None
    if any(len(v) != dim for v in vertices):
        raise ParseError("vertex length does not match dim")
    return convex_hull(vertices)


def series_to_json(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [str(c) for c in s.coefficients]}


def series_from_json(data) -> TruncatedSeries:
    try:
        coeffs = tuple(Fraction(c) for c in data["coeffs"])
        order = int(data["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed series record: {exc}") from None
    if len(coeffs) != order:
        raise ParseError("series coefficient count does not match order")
    return TruncatedSeries(coeffs)


def genfun_to_json(h: RationalGeneratingFunction) -> dict:
    return {"num": list(h.numerator), "den": list(h.denominator)}


def genfun_from_json(data) -> RationalGeneratingFunction:
    try:
        return RationalGeneratingFunction(
            tuple(int(a) for a in data["num"]), tuple(int(w) for w in data["den"])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed generating function record: {exc}") from None


def laurent_to_json(f: LaurentPolynomial) -> dict:
    return {
        "n": f.nvars,
        "terms": [{"e": list(e), "c": str(c)} for e, c in f.sorted_terms()],
    }


def laurent_from_json(data) -> LaurentPolynomial:
    try:
        n = int(data["n"])
        terms = {
            tuple(int(a) for a in t["e"]): Fraction(t["c"]) for t in data["terms"]
        }
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed Laurent record: {exc}") from None
    return LaurentPolynomial(terms, n)


def candidate_to_json(candidate, genus, quasismooth, terminal) -> dict:
    return {
        "weights": list(candidate.weights),
        "degree": candidate.degree,
        "genus": genus,
        "quasismooth": bool(quasismooth),
        "terminal": bool(terminal),
    }
