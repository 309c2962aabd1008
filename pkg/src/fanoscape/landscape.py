"""Landscape records, ingestion, and deterministic SVG plots.

Records carry a (genus, codimension) pair plus provenance. The store is an
in-memory index over append-only JSONL; plots are written as SVG 1.1 with all
geometry computed in integer arithmetic, so output bytes are identical across
runs and platforms for identical input.
"""

import csv
import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from math import isqrt

from .errors import DuplicateId, EmptyStore, ParseError
from .grading import codimension_estimate, genus
from .hypersurfaces import HypersurfaceCandidate, candidate_invariants
from .polytope import LatticePolytope, normal_form
from .serialize import dumps, polytope_to_json

SOURCES = ("polytope", "hypersurface", "ingested")


@dataclass(frozen=True)
class LandscapeRecord:
    id: str
    genus: int
    codimension: int
    source: str
    payload: dict | None = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        if self.genus < -2:
            raise ValueError("genus must be at least -2")
        if self.codimension < 0:
            raise ValueError("codimension must be non-negative")

    def to_json(self) -> dict:
        data = {
            "id": self.id,
            "genus": self.genus,
            "codimension": self.codimension,
            "source": self.source,
        }
        if self.payload is not None:
            data["payload"] = self.payload
        return data


class LandscapeStore:
    """Id-indexed collection of landscape records."""

    def __init__(self):
        self._records = []
        self._by_id = {}

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def add(self, record: LandscapeRecord):
        if record.id in self._by_id:
            raise DuplicateId(f"duplicate record id {record.id!r}")
        self._records.append(record)
        self._by_id[record.id] = record

    def get(self, record_id):
        return self._by_id[record_id]

    def write_jsonl(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            for record in self._records:
                fh.write(dumps(record.to_json()) + "\n")
        return path


def _record_from_dict(data, line=None):
    try:
        rid = str(data["id"])
        g = data["genus"]
        c = data["codimension"]
        if not isinstance(g, int) or isinstance(g, bool):
            raise ValueError(f"genus {g!r} is not an integer")
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"codimension {c!r} is not an integer")
        source = data.get("source", "ingested")
        payload = data.get("payload")
        return LandscapeRecord(rid, g, c, source, payload)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), line=line) from None


def record_from_candidate(candidate: HypersurfaceCandidate) -> LandscapeRecord:
    """Hypersurface record; quasismooth hypersurfaces always sit in codimension one."""
    g, _ = candidate_invariants(candidate)
    rid = f"X{candidate.degree}-" + ".".join(str(a) for a in candidate.weights)
    payload = {"weights": list(candidate.weights), "degree": candidate.degree}
    return LandscapeRecord(rid, g, 1, "hypersurface", payload)


def record_from_polytope(p: LatticePolytope) -> LandscapeRecord:
    """Genus and estimated codimension of a 3-dimensional Fano polytope.

    The payload and id are computed from the normal form, so unimodular images
    of the same polytope produce identical records.
    """
    nf = normal_form(p)
    payload = polytope_to_json(nf)
    digest = hashlib.sha256(dumps(payload).encode()).hexdigest()[:12]
    return LandscapeRecord(
        f"polytope-{digest}", genus(p), codimension_estimate(p), "polytope", payload
    )


def _candidate_line_to_record(data, line):
    try:
        candidate = HypersurfaceCandidate(tuple(data["weights"]), data["degree"])
    except Exception as exc:
        raise ParseError(str(exc), line=line) from None
    g = data.get("genus")
    if g is None:
        g, _ = candidate_invariants(candidate)
    rid = f"X{candidate.degree}-" + ".".join(str(a) for a in candidate.weights)
    return LandscapeRecord(
        rid, int(g), 1, "hypersurface", {"weights": list(candidate.weights), "degree": candidate.degree}
    )


def ingest(path, format: str) -> LandscapeStore:
    """Load records from CSV (columns id, genus, codimension) or JSONL.

    JSONL lines may be landscape records or hypersurface candidate objects;
    candidates are converted to codimension-one hypersurface records. Raises
    ParseError with the offending line number, or DuplicateId.
    """
    store = LandscapeStore()
    if format == "csv":
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or not {"id", "genus", "codimension"} <= set(
                reader.fieldnames
            ):
                raise ParseError("CSV must have id, genus, codimension columns", line=1)
            for lineno, row in enumerate(reader, start=2):
                try:
                    data = {
                        "id": row["id"],
                        "genus": int(row["genus"]),
                        "codimension": int(row["codimension"]),
                    }
                except (TypeError, ValueError) as exc:
                    raise ParseError(str(exc), line=lineno) from None
                store.add(_record_from_dict(data, line=lineno))
    elif format == "jsonl":
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                raw = raw.strip()
                if not raw:
                    continue
                try:
                    data = json.loads(raw)
                except json.JSONDecodeError as exc:
                    raise ParseError(str(exc), line=lineno) from None
                if "id" in data:
                    store.add(_record_from_dict(data, line=lineno))
                elif "weights" in data:
                    store.add(_candidate_line_to_record(data, lineno))
                else:
                    raise ParseError("line is neither a record nor a candidate", line=lineno)
    else:
        raise ValueError(f"unknown ingest format {format!r}")
    return store


# ---------------------------------------------------------------------------
# Deterministic SVG emission


@dataclass(frozen=True)
class PlotSpec:
    kind: str  # "scatter" | "histogram"
    path: str
    x_range: tuple | None = None
    y_range: tuple | None = None
    marker_size: int = 4

    def __post_init__(self):
        if self.kind not in ("scatter", "histogram"):
            raise ValueError("plot kind must be scatter or histogram")


_VIEW_W, _VIEW_H = 800, 600
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 780, 20, 550

_OPACITY_STEPS = ("0.35", "0.45", "0.55", "0.65", "0.75", "0.85")


def _tick_step(span):
    step = 1
    for candidate in (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000):
        step = candidate
        if span // candidate <= 8:
            break
    return step


def _px(value, lo, hi, p_lo, p_hi):
    # integer pixel mapping with round-to-nearest, exact in integer arithmetic
    num = (value - lo) * (p_hi - p_lo) * 2 + (hi - lo)
    return p_lo + num // (2 * (hi - lo))


def _svg_header(title):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {_VIEW_W} {_VIEW_H}">',
        f'<rect x="0" y="0" width="{_VIEW_W}" height="{_VIEW_H}" fill="white"/>',
        f'<text x="{(_LEFT + _RIGHT) // 2}" y="14" text-anchor="middle" font-family="sans-serif" font-size="13">{title}</text>',
    ]


def _axes(x_label, y_label):
    return [
        f'<line x1="{_LEFT}" y1="{_BOTTOM}" x2="{_RIGHT}" y2="{_BOTTOM}" stroke="black"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_BOTTOM}" stroke="black"/>',
        f'<text x="{(_LEFT + _RIGHT) // 2}" y="{_BOTTOM + 40}" text-anchor="middle" font-family="sans-serif" font-size="13">{x_label}</text>',
        f'<text x="18" y="{(_TOP + _BOTTOM) // 2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 18 {(_TOP + _BOTTOM) // 2})">{y_label}</text>',
    ]


def _scatter_svg(records, spec: PlotSpec) -> str:
    groups = Counter((r.genus, r.codimension) for r in records)
    xs = [g for g, _ in groups]
    ys = [c for _, c in groups]
    x_lo, x_hi = spec.x_range if spec.x_range else (min(xs) - 1, max(xs) + 1)
    y_lo, y_hi = spec.y_range if spec.y_range else (min(ys) - 1, max(ys) + 1)
    if x_hi <= x_lo:
        x_hi = x_lo + 1
    if y_hi <= y_lo:
        y_hi = y_lo + 1
    parts = _svg_header("landscape: genus vs codimension")
    parts += _axes("genus", "codimension")
    for x in range(x_lo, x_hi + 1, _tick_step(x_hi - x_lo)):
        px = _px(x, x_lo, x_hi, _LEFT, _RIGHT)
        parts.append(f'<line x1="{px}" y1="{_BOTTOM}" x2="{px}" y2="{_BOTTOM + 5}" stroke="black"/>')
        parts.append(
            f'<text x="{px}" y="{_BOTTOM + 20}" text-anchor="middle" font-family="sans-serif" font-size="11">{x}</text>'
        )
    for y in range(y_lo, y_hi + 1, _tick_step(y_hi - y_lo)):
        py = _px(y, y_lo, y_hi, _BOTTOM, _TOP)
        parts.append(f'<line x1="{_LEFT - 5}" y1="{py}" x2="{_LEFT}" y2="{py}" stroke="black"/>')
        parts.append(
            f'<text x="{_LEFT - 9}" y="{py + 4}" text-anchor="end" font-family="sans-serif" font-size="11">{y}</text>'
        )
    for (g, c) in sorted(groups):
        count = groups[(g, c)]
        px = _px(g, x_lo, x_hi, _LEFT, _RIGHT)
        py = _px(c, y_lo, y_hi, _BOTTOM, _TOP)
        radius = spec.marker_size + min(isqrt(count - 1), 6)
        opacity = _OPACITY_STEPS[min(count - 1, len(_OPACITY_STEPS) - 1)]
        parts.append(
            f'<circle cx="{px}" cy="{py}" r="{radius}" fill="steelblue" fill-opacity="{opacity}">'
            f"<title>genus {g}, codimension {c}, count {count}</title></circle>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _histogram_svg(records, spec: PlotSpec) -> str:
    counts = Counter(r.codimension for r in records)
    if counts:
        c_lo, c_hi = min(counts), max(counts)
    else:
        c_lo, c_hi = 0, 1
    if spec.x_range:
        c_lo, c_hi = spec.x_range
    n_bins = c_hi - c_lo + 1
    top = max(counts.values(), default=0)
    top = max(top, 1)
    parts = _svg_header("landscape: records by codimension")
    parts += _axes("codimension", "count")
    width = (_RIGHT - _LEFT) // max(n_bins, 1)
    for idx in range(n_bins):
        c = c_lo + idx
        count = counts.get(c, 0)
        x0 = _LEFT + idx * width + 2
        h = (count * (_BOTTOM - _TOP)) // top
        y0 = _BOTTOM - h
        parts.append(
            f'<rect x="{x0}" y="{y0}" width="{max(width - 4, 1)}" height="{h}" fill="darkorange" stroke="black">'
            f"<title>codimension {c}: {count}</title></rect>"
        )
        parts.append(
            f'<text x="{x0 + max(width - 4, 1) // 2}" y="{_BOTTOM + 20}" text-anchor="middle" font-family="sans-serif" font-size="11">{c}</text>'
        )
    for y in range(0, top + 1, _tick_step(top)):
        py = _BOTTOM - (y * (_BOTTOM - _TOP)) // top
        parts.append(f'<line x1="{_LEFT - 5}" y1="{py}" x2="{_LEFT}" y2="{py}" stroke="black"/>')
        parts.append(
            f'<text x="{_LEFT - 9}" y="{py + 4}" text-anchor="end" font-family="sans-serif" font-size="11">{y}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_plot(store: LandscapeStore, spec: PlotSpec) -> str:
    """Write the requested SVG and return its path. Scatter needs a nonempty store."""
    records = list(store)
    if spec.kind == "scatter":
        if not records:
            raise EmptyStore("scatter plot needs at least one record")
        svg = _scatter_svg(records, spec)
    else:
        svg = _histogram_svg(records, spec)
    with open(spec.path, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return spec.path
