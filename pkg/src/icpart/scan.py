"""Per-graph report records, CSV/JSONL serialisation and the result cache."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .coalition import MAX_COALITION_ORDER, MAX_IC_ORDER, coalition_number, ic_number
from .graph import Graph, is_connected, is_triangle_free
from .graph6 import encode_graph6, parse_graph6, read_stream
from .invariants import invariant_report

log = logging.getLogger(__name__)

CACHE_ENV = "ICPART_CACHE"
DEFAULT_CACHE = Path.home() / ".cache" / "icpart" / "records.jsonl"

COLUMNS = (
    "graph6",
    "n",
    "edges",
    "connected",
    "triangle_free",
    "girth",
    "alpha",
    "gamma_i",
    "chi",
    "idomatic",
    "ic",
    "coalition",
)
# decode failures fill only graph6 and error
CSV_HEADER = COLUMNS + ("error",)

Value = Union[int, str, None]


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    n: Optional[int] = None
    edges: Optional[int] = None
    connected: Optional[bool] = None
    triangle_free: Optional[bool] = None
    girth: Optional[int] = None
    alpha: Optional[int] = None
    gamma_i: Optional[int] = None
    chi: Optional[int] = None
    idomatic: Optional[int] = None
    ic: Value = None
    coalition: Value = None
    witness: Optional[str] = None
    error: Optional[str] = None

    def contractual(self) -> dict:
        return {k: getattr(self, k) for k in COLUMNS}

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def compute_record(
    g: Graph,
    key: Optional[str] = None,
    ic_bound: int = MAX_IC_ORDER,
    coalition_bound: int = MAX_COALITION_ORDER,
) -> ScanRecord:
    """Every invariant of ``g``; IC and C beyond their bounds read ``"skipped"``."""
    inv = invariant_report(g)
    witness = None
    if g.n <= min(ic_bound, MAX_IC_ORDER):
        result = ic_number(g)
        ic_value: Value = result.value if result.exists else "none"
        witness = str(result.witness) if result.exists else None
    else:
        ic_value = "skipped"
    if g.n <= min(coalition_bound, ic_bound, MAX_COALITION_ORDER):
        c = coalition_number(g)
        c_value: Value = "none" if c is None else c
    else:
        c_value = "skipped"
    return ScanRecord(
        graph6=key if key is not None else encode_graph6(g),
        n=g.n,
        edges=g.edge_count,
        connected=is_connected(g),
        triangle_free=is_triangle_free(g),
        girth=inv.girth,
        alpha=inv.alpha,
        gamma_i=inv.gamma_i,
        chi=inv.chi,
        idomatic=inv.idomatic,
        ic=ic_value,
        coalition=c_value,
        witness=witness,
    )


def error_record(text: str, message: str) -> ScanRecord:
    return ScanRecord(graph6=text, error=message)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def to_csv_row(record: ScanRecord) -> list[str]:
    return [_csv_cell(getattr(record, k)) for k in CSV_HEADER]


def to_jsonl(record: ScanRecord) -> str:
    row = {k: getattr(record, k) for k in COLUMNS}
    if record.error is not None:
        row["error"] = record.error
    return json.dumps(row, separators=(",", ":"))


_BOOL_FIELDS = {"connected", "triangle_free"}
_NUMERIC_OR_WORD = {"ic", "coalition"}


def from_csv_row(row: dict) -> ScanRecord:
    values = {}
    for k in CSV_HEADER:
        cell = row.get(k, "")
        if cell == "":
            values[k] = None
        elif k in ("graph6", "error"):
            values[k] = cell
        elif k in _BOOL_FIELDS:
            values[k] = cell == "true"
        elif k in _NUMERIC_OR_WORD and not cell.lstrip("-").isdigit():
            values[k] = cell
        else:
            values[k] = int(cell)
    return ScanRecord(**values)


def from_jsonl(line: str) -> ScanRecord:
    data = json.loads(line)
    return ScanRecord(**{k: data.get(k) for k in CSV_HEADER})


class ResultCache:
    """Append-only JSON-lines store keyed by literal graph6 strings.

    The last entry for a key wins.  Unreadable or inconsistent lines are
    skipped with a warning.
    """

    def __init__(self, path: Union[str, Path, None] = None):
        if path is None:
            path = os.environ.get(CACHE_ENV) or DEFAULT_CACHE
        self.path = Path(path)
        self._entries: dict[str, ScanRecord] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    key = entry["key"]
                    record = ScanRecord(**entry["record"])
                    _validate(key, record)
                except Exception as exc:  # noqa: BLE001 - any bad line is skipped
                    log.warning("ignoring corrupt cache entry %s:%d (%s)", self.path, lineno, exc)
                    continue
                self._entries[key] = record

    def get(self, key: str) -> Optional[ScanRecord]:
        return self._entries.get(key)

    def put(self, key: str, record: ScanRecord) -> None:
        _validate(key, record)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps({"key": key, "record": asdict(record)}, separators=(",", ":")) + "\n"
        # one write per entry keeps concurrent appends line-atomic on POSIX
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line)
        self._entries[key] = record

    def __len__(self) -> int:
        return len(self._entries)


def _validate(key: str, record: ScanRecord) -> None:
    if record.graph6 != key:
        raise ValueError("record key mismatch")
    g = parse_graph6(key)
    if record.n != g.n or record.edges != g.edge_count or record.error is not None:
        raise ValueError("record does not describe its key")
    for name in ("alpha", "chi"):
        if not isinstance(getattr(record, name), int):
            raise ValueError(f"field {name} is not an integer")
    for name in ("ic", "coalition"):
        value = getattr(record, name)
        if not (isinstance(value, int) or value in ("none", "skipped")):
            raise ValueError(f"field {name} has unexpected value {value!r}")


def cached_record(
    g: Graph,
    key: str,
    cache: Optional[ResultCache],
    ic_bound: int = MAX_IC_ORDER,
) -> ScanRecord:
    if cache is not None:
        hit = cache.get(key)
        if hit is not None and "skipped" not in (hit.ic, hit.coalition):
            return hit
    record = compute_record(g, key, ic_bound)
    if cache is not None and "skipped" not in (record.ic, record.coalition):
        cache.put(key, record)
    return record


def _work(args: tuple[str, int]) -> ScanRecord:
    text, ic_bound = args
    return compute_record(parse_graph6(text), text, ic_bound)


def scan(
    lines: Iterable[str],
    ic_bound: int = 10,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
    batch: int = 256,
) -> Iterator[ScanRecord]:
    """One record per graph6 line, in input order, whatever ``jobs`` is."""
    items = read_stream(lines)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while True:
            chunk = list(islice(items, batch))
            if not chunk:
                return
            out: list[Optional[ScanRecord]] = [None] * len(chunk)
            todo = []
            for i, item in enumerate(chunk):
                if item.error is not None:
                    out[i] = error_record(item.text, f"line {item.lineno}: {item.error}")
                    continue
                hit = cache.get(item.text) if cache is not None else None
                if hit is not None and "skipped" not in (hit.ic, hit.coalition):
                    out[i] = hit
                else:
                    todo.append(i)
            args = [(chunk[i].text, ic_bound) for i in todo]
            results = pool.map(_work, args, chunksize=8) if pool else map(_work, args)
            for i, record in zip(todo, results):
                out[i] = record
                if cache is not None and "skipped" not in (record.ic, record.coalition):
                    cache.put(record.graph6, record)
            yield from out  # type: ignore[misc]
    finally:
        if pool is not None:
            pool.shutdown()


def write_csv(records: Iterable[ScanRecord], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(to_csv_row(r))


def read_csv(text: str) -> list[ScanRecord]:
    return [from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]
