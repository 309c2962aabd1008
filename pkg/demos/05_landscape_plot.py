"""Building the genus/codimension landscape and rendering it as SVG.

Records come from three sources: hypersurface candidates, Fano polytopes, and
ingested files. The SVG emitter is deterministic down to the byte.
"""

import tempfile
from pathlib import Path

from fanoscape import (
    LandscapeStore,
    PlotSpec,
    convex_hull,
    emit_plot,
    ingest,
    record_from_candidate,
    record_from_polytope,
    search_famous_95,
)

out_dir = Path(tempfile.mkdtemp(prefix="fanoscape-demo-"))

store = LandscapeStore()
for candidate in search_famous_95(8):
    store.add(record_from_candidate(candidate))

p3 = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
store.add(record_from_polytope(p3))
print(f"{len(store)} records (hypersurfaces in codimension 1, plus P^3 at (33, 31))")

scatter = emit_plot(store, PlotSpec("scatter", str(out_dir / "landscape.svg")))
hist = emit_plot(store, PlotSpec("histogram", str(out_dir / "codimensions.svg")))
print("wrote", scatter)
print("wrote", hist)

# Round trip: JSONL out, ingest back in.
records_path = out_dir / "records.jsonl"
store.write_jsonl(records_path)
again = ingest(records_path, "jsonl")
print("round trip preserves every record:", list(again) == list(store))
