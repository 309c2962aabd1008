import hashlib
import random

import pytest

from fanoscape import (
    DuplicateId,
    EmptyStore,
    HypersurfaceCandidate,
    LandscapeRecord,
    LandscapeStore,
    ParseError,
    PlotSpec,
    emit_plot,
    ingest,
    record_from_candidate,
    record_from_polytope,
)

from conftest import random_unimodular


def make_store(records):
    store = LandscapeStore()
    for r in records:
        store.add(r)
    return store


# ---------------------------------------------------------------------------
# ingestion


def test_csv_ingest(tmp_path):
    path = tmp_path / "records.csv"
    path.write_text("id,genus,codimension\na,3,1\nb,33,31\nc,-1,1\n")
    store = ingest(path, "csv")
    assert len(store) == 3
    assert store.get("b").codimension == 31


def test_csv_ingest_rejects_bad_genus(tmp_path):
    path = tmp_path / "records.csv"
    path.write_text("id,genus,codimension\na,3,1\nb,three,2\n")
    with pytest.raises(ParseError) as err:
        ingest(path, "csv")
    assert err.value.line == 3


def test_duplicate_id(tmp_path):
    path = tmp_path / "records.csv"
    path.write_text("id,genus,codimension\na,3,1\na,4,2\n")
    with pytest.raises(DuplicateId):
        ingest(path, "csv")


def test_jsonl_round_trip(tmp_path):
    records = [
        LandscapeRecord("a", 3, 1, "hypersurface", {"weights": [1, 1, 1, 1, 1]}),
        LandscapeRecord("b", 33, 31, "polytope"),
        LandscapeRecord("c", -1, 1, "ingested"),
    ]
    store = make_store(records)
    path = tmp_path / "records.jsonl"
    store.write_jsonl(path)
    again = ingest(path, "jsonl")
    assert [r for r in again] == records


def test_jsonl_accepts_candidate_lines(tmp_path):
    path = tmp_path / "cands.jsonl"
    path.write_text('{"weights":[1,1,1,1,1],"degree":4,"genus":3}\n')
    store = ingest(path, "jsonl")
    record = next(iter(store))
    assert record.genus == 3 and record.codimension == 1
    assert record.source == "hypersurface"


def test_jsonl_parse_error_names_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"id":"a","genus":1,"codimension":1}\nnot json\n')
    with pytest.raises(ParseError) as err:
        ingest(path, "jsonl")
    assert err.value.line == 2


# ---------------------------------------------------------------------------
# records from geometry


def test_record_from_p3(p3_simplex):
    r = record_from_polytope(p3_simplex)
    assert (r.genus, r.codimension) == (33, 31)
    assert r.source == "polytope"


def test_record_from_quartic_polytope(quartic_mirror_polytope):
    r = record_from_polytope(quartic_mirror_polytope)
    assert (r.genus, r.codimension) == (3, 1)


def test_record_from_x66_polytope(x66_mirror_polytope):
    r = record_from_polytope(x66_mirror_polytope)
    assert (r.genus, r.codimension) == (-1, 1)


def test_record_unimodular_invariant(p3_simplex, rng):
    base = record_from_polytope(p3_simplex)
    for _ in range(4):
        u = random_unimodular(3, rng)
        assert record_from_polytope(p3_simplex.transform(u)) == base


def test_record_from_candidate():
    c = HypersurfaceCandidate((1, 1, 1, 1, 1), 4)
    r = record_from_candidate(c)
    assert (r.genus, r.codimension, r.source) == (3, 1, "hypersurface")


def test_record_invariants():
    with pytest.raises(ValueError):
        LandscapeRecord("x", -3, 0, "ingested")
    with pytest.raises(ValueError):
        LandscapeRecord("x", 0, -1, "ingested")


# ---------------------------------------------------------------------------
# plots


def test_scatter_determinism(tmp_path):
    records = [
        LandscapeRecord("a", 3, 1, "ingested"),
        LandscapeRecord("b", 33, 31, "ingested"),
        LandscapeRecord("c", -1, 1, "ingested"),
        LandscapeRecord("d", 3, 1, "ingested"),
    ]
    store = make_store(records)
    p1 = tmp_path / "one.svg"
    p2 = tmp_path / "two.svg"
    emit_plot(store, PlotSpec("scatter", str(p1)))
    emit_plot(store, PlotSpec("scatter", str(p2)))
    b1, b2 = p1.read_bytes(), p2.read_bytes()
    assert b1 == b2
    assert hashlib.sha256(b1).hexdigest() == hashlib.sha256(b2).hexdigest()


def test_scatter_requires_records(tmp_path):
    with pytest.raises(EmptyStore):
        emit_plot(LandscapeStore(), PlotSpec("scatter", str(tmp_path / "e.svg")))


def test_empty_histogram_is_valid_svg(tmp_path):
    path = tmp_path / "h.svg"
    emit_plot(LandscapeStore(), PlotSpec("histogram", str(path)))
    text = path.read_text()
    assert text.startswith("<?xml")
    assert "</svg>" in text and "codimension" in text


def test_scatter_contains_axis_labels_and_markers(tmp_path):
    store = make_store(
        [
            LandscapeRecord("a", 3, 1, "ingested"),
            LandscapeRecord("b", 33, 31, "ingested"),
        ]
    )
    path = tmp_path / "s.svg"
    emit_plot(store, PlotSpec("scatter", str(path)))
    text = path.read_text()
    assert ">genus<" in text and ">codimension<" in text
    assert text.count("<circle") == 2
    assert "genus 33, codimension 31" in text
