"""Command-line surface.

Exit codes are part of the contract: 0 success / verified, 1 counterexamples
found, 2 input parse error, 3 input beyond an exhaustive-search cap, 4
invalid family spec.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from . import enumeration
from .decompose import (
    find_proper_2_cutset,
    find_special_edges,
    has_k4_minor,
    is_chordless,
    is_two_sparse,
    recognize_line_graph,
    reduce_adjacent_degree2,
    reduce_special_edges,
    triangle_free,
)
from .detectors import classify
from .canon import are_isomorphic
from .errors import (
    CapacityExceeded,
    GraphError,
    InvalidLengths,
    MalformedGraph6,
    NotConnected,
    NotTwoConnected,
    AmbiguousMidpoints,
    ShortVariant,
    SpecSyntaxError,
    TooFewSpokes,
    TooLarge,
    TooManyThetaChords,
    VertexOutOfRange,
)
from .families import build_from_spec, parse_spec
from .graphs import Graph, decode_graph6, encode_graph6, find_clique_cutset, parse_edge_list
from .hamiltonicity import find_hamiltonian_cycle, find_hamiltonian_path

EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_BAD_SPEC = 4

_SPEC_ERRORS = (ShortVariant, TooManyThetaChords, InvalidLengths, TooFewSpokes)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_graph(text: Optional[str], input_file: Optional[str]) -> Graph:
    if input_file is not None:
        try:
            with open(input_file, "r", encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except OSError as exc:
            _fail(EXIT_PARSE, f"cannot read {input_file}: {exc}")
        except GraphError as exc:
            _fail(EXIT_PARSE, str(exc))
    if text is None:
        _fail(EXIT_PARSE, "no input given")
    if ":" in text:
        try:
            return build_from_spec(parse_spec(text))
        except SpecSyntaxError as exc:
            _fail(EXIT_PARSE, str(exc))
        except _SPEC_ERRORS as exc:
            _fail(EXIT_BAD_SPEC, str(exc))
        except VertexOutOfRange as exc:
            _fail(EXIT_BAD_SPEC, str(exc))
    try:
        return decode_graph6(text)
    except MalformedGraph6 as exc:
        _fail(EXIT_PARSE, str(exc))
    raise AssertionError("unreachable")


@click.group()
def main() -> None:
    """Wheel-free Hamiltonicity obstructions: build, detect, verify."""


@main.command()
@click.argument("graph", required=False)
@click.option("--input", "input_file", type=click.Path(), help="edge-list file (n, then 'u v' lines)")
def check(graph: Optional[str], input_file: Optional[str]) -> None:
    """Classify one graph (graph6 or family spec), or graph6 lines on stdin."""
    if graph is None and input_file is None:
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            _emit_record(_load_graph(line, None))
        return
    _emit_record(_load_graph(graph, input_file))


def _emit_record(g: Graph) -> None:
    try:
        record = classify(g)
    except TooLarge as exc:
        _fail(EXIT_TOO_LARGE, str(exc))
    click.echo(json.dumps(record.to_dict(), sort_keys=True))


@main.command()
@click.argument("spec")
def gen(spec: str) -> None:
    """Emit the graph6 of a family spec (theta:2,2,2, wheel:6@0,2,4, ...)."""
    try:
        g = build_from_spec(parse_spec(spec))
    except SpecSyntaxError as exc:
        _fail(EXIT_PARSE, str(exc))
    except (_SPEC_ERRORS + (VertexOutOfRange,)) as exc:
        _fail(EXIT_BAD_SPEC, str(exc))
    try:
        click.echo(encode_graph6(g))
    except CapacityExceeded as exc:
        _fail(EXIT_TOO_LARGE, str(exc))


@main.command()
@click.argument("graph", required=False)
@click.option("--input", "input_file", type=click.Path())
@click.option("--path", "want_path", is_flag=True, help="search a Hamiltonian path instead")
def ham(graph: Optional[str], input_file: Optional[str], want_path: bool) -> None:
    """Exact Hamiltonian cycle (default) or path search."""
    g = _load_graph(graph, input_file)
    if want_path:
        res = find_hamiltonian_path(g)
        click.echo(json.dumps({"found": res.found, "path": list(res.order) if res.order else None}))
    else:
        res = find_hamiltonian_cycle(g)
        click.echo(json.dumps({"found": res.found, "cycle": list(res.order) if res.order else None}))


@main.command()
@click.argument("graph", required=False)
@click.option("--input", "input_file", type=click.Path())
def decompose(graph: Optional[str], input_file: Optional[str]) -> None:
    """Trace the structural pipeline; emits a JSON array of step records."""
    g = _load_graph(graph, input_file)
    steps: list[dict] = []

    def record(step: str, n: int, certificate=None, error: Optional[str] = None) -> None:
        entry: dict = {"step": step, "input_n": n}
        if error is not None:
            entry["error"] = error
        else:
            entry["certificate"] = certificate
        steps.append(entry)

    cur = g
    try:
        cur, log = reduce_adjacent_degree2(cur)
        record("reduce_adjacent_degree2", g.n, {"contractions": [list(e) for e in log]})
    except NotTwoConnected as exc:
        record("reduce_adjacent_degree2", g.n, error=type(exc).__name__)
    try:
        specials = find_special_edges(cur)
        record(
            "find_special_edges",
            cur.n,
            {"special_edges": [[list(s.edge), s.midpoint] for s in specials]},
        )
        reduced, removed = reduce_special_edges(cur)
        record("reduce_special_edges", cur.n, {"removed": list(removed)})
        cur = reduced
    except (NotTwoConnected, AmbiguousMidpoints) as exc:
        record("reduce_special_edges", cur.n, error=type(exc).__name__)
    try:
        cutset = find_clique_cutset(cur)
        record(
            "find_clique_cutset",
            cur.n,
            {"clique_cutset": sorted(cutset[0]) if cutset else None},
        )
    except NotConnected as exc:
        record("find_clique_cutset", cur.n, error=type(exc).__name__)
    root = None
    try:
        res = recognize_line_graph(cur)
        if res is None:
            record("recognize_line_graph", cur.n, {"root": None})
        else:
            root = res.root
            record(
                "recognize_line_graph",
                cur.n,
                {
                    "root": {
                        "n": root.n,
                        "edges": [list(e) for e in root.edges()],
                        "triangle_free": triangle_free(root),
                        "chordless": is_chordless(root)[0],
                    },
                    "edge_map": [list(e) for e in res.edge_map],
                },
            )
    except NotConnected as exc:
        record("recognize_line_graph", cur.n, error=type(exc).__name__)
    target = root if root is not None else cur
    sparse, violator = is_two_sparse(target)
    record("is_two_sparse", target.n, {"two_sparse": sparse, "violating_edge": violator})
    try:
        split = find_proper_2_cutset(target)
        record(
            "find_proper_2_cutset",
            target.n,
            {
                "split": None
                if split is None
                else {
                    "u": split.u,
                    "v": split.v,
                    "X": sorted(split.side_x),
                    "Y": sorted(split.side_y),
                }
            },
        )
    except NotConnected as exc:
        record("find_proper_2_cutset", target.n, error=type(exc).__name__)
    record("has_k4_minor", target.n, {"has_k4_minor": has_k4_minor(target)})
    click.echo(json.dumps(steps, sort_keys=True))


@main.command()
@click.argument("g1")
@click.argument("g2")
def iso(g1: str, g2: str) -> None:
    """Isomorphism test between two graphs (graph6 or family spec)."""
    a = _load_graph(g1, None)
    b = _load_graph(g2, None)
    click.echo(json.dumps({"isomorphic": are_isomorphic(a, b)}))


def _report_options(fn):
    fn = click.option("--max-n", "max_n", type=int, default=8, show_default=True)(fn)
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv", "text"]),
        default="json",
        show_default=True,
    )(fn)
    fn = click.option("--jobs", type=int, default=None, help="parallel workers (env OBSTRUCTA_JOBS)")(fn)
    return fn


def _emit_report(report: enumeration.CensusReport, fmt: str) -> None:
    if fmt == "json":
        click.echo(report.to_json(), nl=False)
    elif fmt == "csv":
        click.echo(report.to_csv(), nl=False)
    else:
        click.echo(report.to_text(), nl=False)


@main.command()
@_report_options
def verify(max_n: int, fmt: str, jobs: Optional[int]) -> None:
    """Exhaustively verify the characterization up to --max-n vertices."""
    try:
        report = enumeration.verify_main_theorem(max_n, jobs)
    except TooLarge as exc:
        _fail(EXIT_TOO_LARGE, str(exc))
    _emit_report(report, fmt)
    if report.counterexamples:
        sys.exit(EXIT_COUNTEREXAMPLE)


@main.command()
@_report_options
def census(max_n: int, fmt: str, jobs: Optional[int]) -> None:
    """Count table per vertex count, without theorem assertions."""
    try:
        report = enumeration.census(max_n, jobs)
    except TooLarge as exc:
        _fail(EXIT_TOO_LARGE, str(exc))
    _emit_report(report, fmt)


if __name__ == "__main__":
    main()
