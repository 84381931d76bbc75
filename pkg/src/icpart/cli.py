"""``icpart`` command line.

Graphs are given either as graph6 text or as a family description
``<name>:<param>[,<param>...]`` such as ``path:9``, ``cycle:6``,
``multipartite:1,2,3``, ``doublestar:2,3``, ``familyK:2`` or ``K0``.

Exit codes: 0 success or valid, 1 invalid partition or counterexample,
2 usage or parse error.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .coalition import (
    MAX_IC_ORDER,
    Partition,
    PartitionError,
    verify_ic_partition,
)
from .enumeration import MAX_ENUM_ORDER, MAX_TREE_ORDER, enumerate_graphs
from .families import generate, is_family_text, parse_family
from .graph import CapacityError, Graph
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .scan import ResultCache, cached_record, scan, to_csv_row, to_jsonl, CSV_HEADER
from .theorems import CHECKS, Scope, run_checks

FAMILY_HELP = (
    "A graph is graph6 text or NAME:P[,P...] with NAME one of path, cycle, complete, "
    "empty, star, doublestar, multipartite, familyB, deltasharp, familyK, K0."
)


def load_graph(text: str) -> tuple[Graph, str]:
    """Parse one graph argument; returns the graph and its cache key."""
    text = text.strip()
    if is_family_text(text):
        g = generate(parse_family(text))
        return g, encode_graph6(g)
    return parse_graph6(text), text


def parse_partition(text: str) -> Partition:
    """``[[0,2],[1]]`` (JSON) or ``0,2|1``."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(
            isinstance(c, list) and all(isinstance(v, int) for v in c) for c in data
        ):
            raise ValueError("partition must be a list of vertex lists")
        classes = data
    else:
        classes = [[int(v) for v in part.split(",") if v.strip()] for part in text.split("|")]
    return Partition.from_lists(classes)


def _fail(message: str, code: int = 2) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _graph_or_exit(text: str) -> tuple[Graph, str]:
    try:
        return load_graph(text)
    except Graph6Error as exc:
        _fail(f"line 1: cannot parse {text!r}: {exc}")
    except (ValueError, CapacityError) as exc:
        _fail(str(exc))
    raise AssertionError  # unreachable


def _cache(no_cache: bool) -> Optional[ResultCache]:
    return None if no_cache else ResultCache()


@click.group(help=__doc__)
def main() -> None:
    pass


@main.command(help="Compute every invariant of one graph and print it as JSON. " + FAMILY_HELP)
@click.argument("graph")
@click.option("--no-cache", is_flag=True, help="Neither read nor write the result cache.")
def compute(graph: str, no_cache: bool) -> None:
    g, key = _graph_or_exit(graph)
    if g.n > MAX_IC_ORDER:
        _fail(f"solver bound exceeded: order {g.n} > {MAX_IC_ORDER}")
    record = cached_record(g, key, _cache(no_cache))
    click.echo(record.to_json())


@main.command(help=(
    "Check a partition against the ic-partition conditions. PARTITION is JSON "
    "like [[0,2],[1]] or 0,2|1. " + FAMILY_HELP
))
@click.argument("graph")
@click.argument("partition")
def verify(graph: str, partition: str) -> None:
    g, _ = _graph_or_exit(graph)
    try:
        p = parse_partition(partition)
    except ValueError as exc:
        _fail(f"cannot parse partition: {exc}")
    try:
        report = verify_ic_partition(g, p)
    except PartitionError as exc:
        _fail(str(exc))
    for i, (cls, verdict) in enumerate(zip(p.as_lists(), report.verdicts)):
        click.echo(f"class {i} {cls}: {verdict}")
    click.echo("valid" if report.valid else "invalid")
    sys.exit(0 if report.valid else 1)


@main.command(name="scan", help=(
    "Read graph6 lines from FILE (default: standard input) and write one "
    "record per line. Undecodable lines become rows with an error column."
))
@click.argument("file", type=click.File("r"), default="-")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv", show_default=True)
@click.option("--skip-ic-above", type=int, default=10, show_default=True,
              help="Report ic and coalition as 'skipped' above this order.")
@click.option("-j", "--parallelism", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes; output order never depends on it.")
@click.option("-o", "--output", type=click.File("w"), default="-")
@click.option("--no-cache", is_flag=True, help="Neither read nor write the result cache.")
def scan_cmd(file, fmt: str, skip_ic_above: int, parallelism: int, output, no_cache: bool) -> None:
    records = scan(file, ic_bound=skip_ic_above, jobs=parallelism, cache=_cache(no_cache))
    if fmt == "csv":
        import csv

        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(to_csv_row(r))
    else:
        for r in records:
            output.write(to_jsonl(r) + "\n")


@main.command(help=(
    f"Write one graph6 line per isomorphism class of order N (N <= {MAX_ENUM_ORDER})."
))
@click.argument("n", type=int)
@click.option("--connected", is_flag=True)
@click.option("--triangle-free", is_flag=True)
def graphs(n: int, connected: bool, triangle_free: bool) -> None:
    try:
        found = list(enumerate_graphs(n, connected, triangle_free, up_to_isomorphism=True))
    except ValueError as exc:
        _fail(str(exc))
    for g in found:
        click.echo(encode_graph6(g))


@main.command(help="Run theorem checks (all of them when no ID is given).")
@click.argument("ids", nargs=-1)
@click.option("--max-order", type=int, default=6, show_default=True,
              help="Order bound for checks over all graphs.")
@click.option("--max-tree-order", type=int, default=9, show_default=True)
@click.option("--max-tf-order", type=int, default=7, show_default=True,
              help="Order bound for checks over triangle-free graphs.")
@click.option("--list", "list_ids", is_flag=True, help="List check ids and exit.")
def theorems(ids, max_order: int, max_tree_order: int, max_tf_order: int, list_ids: bool) -> None:
    if list_ids:
        for key, check in CHECKS.items():
            click.echo(f"{key:13s} {check.statement}")
        return
    if not 1 <= max_order <= MAX_ENUM_ORDER or not 1 <= max_tf_order <= MAX_ENUM_ORDER:
        _fail(f"graph scopes must lie in 1..{MAX_ENUM_ORDER}")
    if not 1 <= max_tree_order <= MAX_TREE_ORDER:
        _fail(f"tree scope must lie in 1..{MAX_TREE_ORDER}")
    chosen = [] if list(ids) == ["all"] else list(ids)
    scope = Scope(max_order, max_tree_order, max_tf_order)
    try:
        results = run_checks(chosen, scope)
    except KeyError as exc:
        _fail(exc.args[0])
    for r in results:
        click.echo(str(r))
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":  # pragma: no cover
    main()
