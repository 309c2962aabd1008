"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (degenerate input, failed
mutation preconditions, empty stores, ...), 2 on I/O and parse errors.
"""

import json
import sys

import click

from .errors import FanoscapeError, ParseError
from .grading import codimension_estimate, ehrhart_series, genus
from .hypersurfaces import (
    candidate_invariants,
    is_quasismooth,
    is_terminal,
    przyjalkowski_mirror,
    search_famous_95,
)
from .landscape import PlotSpec, emit_plot, ingest
from .laurent import classical_period
from .mutation import MutationData, algebraic_mutation
from .polytope import dual, is_fano, is_reflexive, singularity_class
from .serialize import (
    candidate_to_json,
    dumps,
    laurent_from_json,
    laurent_to_json,
    polytope_from_json,
    polytope_to_json,
    series_to_json,
)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


@click.group()
def cli():
    """Lattice-polytope and weighted-hypersurface toolkit for the Fano landscape."""


@cli.group("polytope")
def polytope_group():
    """Polytope analysis."""


@polytope_group.command("analyze")
@click.argument("file", type=click.Path())
def polytope_analyze(file):
    """Predicates and graded invariants of a polytope JSON file."""
    p = polytope_from_json(_load_json(file))
    report = {
        "dim": p.dim,
        "vertices": [list(v) for v in p.vertices],
        "lattice_points": p.lattice_point_count(),
        "interior_points": p.interior_lattice_point_count(),
        "fano": is_fano(p),
    }
    if report["fano"]:
        report["reflexive"] = is_reflexive(p)
        report["singularity_class"] = singularity_class(p)
        report["dual_ehrhart"] = series_to_json(ehrhart_series(dual(p), 4))
        if p.dim == 3:
            report["genus"] = genus(p)
            report["codimension"] = codimension_estimate(p)
    click.echo(dumps(report))


@cli.command("period")
@click.argument("file", type=click.Path())
@click.option("--order", type=int, required=True, help="exclusive truncation order")
def period_cmd(file, order):
    """Classical period of a Laurent polynomial JSON file."""
    f = laurent_from_json(_load_json(file))
    pi = classical_period(f, order)
    click.echo(dumps(series_to_json(pi.series)))


@cli.command("mutate")
@click.argument("file", type=click.Path())
@click.option("--weight", required=True, help="comma-separated weight vector, e.g. 0,1")
@click.option("--factor", "factor_file", required=True, type=click.Path(), help="factor polynomial JSON file")
def mutate_cmd(file, weight, factor_file):
    """Algebraic mutation of a Laurent polynomial."""
    f = laurent_from_json(_load_json(file))
    try:
        w = tuple(int(x) for x in weight.split(","))
    except ValueError:
        raise ParseError(f"bad weight vector {weight!r}") from None
    factor = laurent_from_json(_load_json(factor_file))
    try:
        data = MutationData(w, factor)
    except ValueError as exc:
        raise FanoscapeError(str(exc)) from None
    result = algebraic_mutation(f, data)
    click.echo(dumps(laurent_to_json(result)))


@cli.command("mirror")
@click.option("--weights", required=True, help="comma-separated weights, e.g. 1,1,1,1,1")
@click.option("--degree", type=int, required=True)
def mirror_cmd(weights, degree):
    """Laurent-polynomial mirror of a weighted projective hypersurface."""
    try:
        w = tuple(int(x) for x in weights.split(","))
    except ValueError:
        raise ParseError(f"bad weights {weights!r}") from None
    f = przyjalkowski_mirror(w, degree)
    click.echo(dumps(laurent_to_json(f)))


@cli.command("search95")
@click.option("--bound", type=int, required=True, help="largest weight to enumerate")
@click.option("--out", "out_path", required=True, type=click.Path(), help="output JSONL path")
def search95_cmd(bound, out_path):
    """Search for quasismooth terminal hypersurfaces and write them as JSONL."""
    results = search_famous_95(bound)
    with open(out_path, "w", encoding="utf-8") as fh:
        for c in results:
            g, _ = candidate_invariants(c)
            record = candidate_to_json(
                c, g, is_quasismooth(c).verdict, is_terminal(c).verdict
            )
            fh.write(dumps(record) + "\n")
    click.echo(f"{len(results)} candidates written to {out_path}")


@cli.group("landscape")
def landscape_group():
    """Record stores and plots."""


@landscape_group.command("plot")
@click.option("--in", "in_path", required=True, type=click.Path(), help="records file (JSONL or CSV)")
@click.option("--kind", type=click.Choice(["scatter", "histogram"]), default="scatter")
@click.option("--out", "out_path", required=True, type=click.Path(), help="output SVG path")
def landscape_plot(in_path, kind, out_path):
    """Render the genus/codimension landscape from a record file."""
    fmt = "csv" if in_path.endswith(".csv") else "jsonl"
    store = ingest(in_path, fmt)
    emit_plot(store, PlotSpec(kind=kind, path=out_path))
    click.echo(f"wrote {out_path} ({len(store)} records)")


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(1)
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(2)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(2)
    except FanoscapeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    sys.exit(0)


if __name__ == "__main__":
    main()
