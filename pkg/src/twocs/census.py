"""Census pipeline: stream graphs, classify which 2-community variants each
one admits, and aggregate per-order summaries.

Input is either a graph6 file (one graph per line) or the internal generator
of all connected graphs up to isomorphism for very small orders. Records are
emitted as JSON Lines in input order regardless of worker count, so parallel
runs are byte-identical to sequential ones.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import IO, Iterable, Iterator

from .graph import (Graph, GraphError, UnsupportedGraphError, are_isomorphic,
                    bits, is_connected, parse_graph6, triangle_counts)

GENERATOR_MAX_N = 7


@dataclass(frozen=True)
class CensusRecord:
    """Per-graph classification result.

    sample_a is the bitmask of part A of the first relaxed-valid canonical
    bipartition (the weakest variant, so it exists whenever any flag is set).
    """

    graph_id: int
    n: int
    edge_count: int
    has_strict: bool = False
    has_relaxed: bool = False
    has_connected_strict: bool = False
    has_connected_relaxed: bool = False
    has_balanced: bool = False
    sample_a: int | None = None
    partitions_examined: int = 0
    error: str | None = None


def classify_graph(g: Graph, graph_id: int = 0) -> CensusRecord:
    """Classify one graph with a single canonical bipartition scan.

    The scan fixes vertex 0 in part A and updates all five variant flags per
    candidate, stopping early once every flag is decided.
    """
    if g.n > 32:
        return CensusRecord(graph_id, g.n, g.edge_count,
                            error="unsupported: more than 32 vertices")
    if g.n < 2:
        return CensusRecord(graph_id, g.n, g.edge_count,
                            error="unsupported: fewer than 2 vertices")
    n = g.n
    full = g.full_mask
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    half = n // 2
    balanced_possible = n % 2 == 0
    strict = relaxed = cstrict = crelaxed = balanced = False
    sample = None
    examined = 0
    for m in range(1 << (n - 1)):
        a = m << 1 | 1
        b = full ^ a
        if not b:
            continue
        examined += 1
        size_a = a.bit_count()
        size_b = n - size_a
        ok = True
        for u in bits(a):
            da = (adj[u] & a).bit_count()
            if size_b * da < (size_a - 1) * (deg[u] - da):
                ok = False
                break
        if ok:
            for u in bits(b):
                db = (adj[u] & b).bit_count()
                if size_a * db < (size_b - 1) * (deg[u] - db):
                    ok = False
                    break
        if not ok:
            continue
        relaxed = True
        if sample is None:
            sample = a
        sizes_ok = size_a >= 2 and size_b >= 2
        strict = strict or sizes_ok
        if sizes_ok and balanced_possible and size_a == half:
            balanced = True
        if not (cstrict and crelaxed):
            if is_connected(g, a) and is_connected(g, b):
                crelaxed = True
                cstrict = cstrict or sizes_ok
        if strict and crelaxed and cstrict and (balanced or not balanced_possible):
            break
    return CensusRecord(graph_id, n, g.edge_count, strict, relaxed, cstrict,
                        crelaxed, balanced, sample, examined)


# ---------------------------------------------------------------------------
# Internal generator of small connected graphs up to isomorphism.

def _invariant_key(g: Graph):
    return g.edge_count, g.degree_sequence(), triangle_counts(g)


def _dedupe_insert(buckets: dict, out: list, g: Graph) -> None:
    key = _invariant_key(g)
    bucket = buckets.setdefault(key, [])
    for h in bucket:
        if are_isomorphic(g, h):
            return
    bucket.append(g)
    out.append(g)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs on n vertices up to isomorphism (connected or not).

    Built by extending each (n-1)-vertex graph with one new vertex attached
    to every possible neighborhood, then deduplicating isomorphs; every
    n-vertex graph arises this way by deleting its last vertex.
    """
    if n == 1:
        return (Graph(1, (0,)),)
    buckets: dict = {}
    out: list[Graph] = []
    for h in _all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            adj = [row | ((nb >> v & 1) << (n - 1)) for v, row in enumerate(h.adj)]
            adj.append(nb)
            _dedupe_insert(buckets, out, Graph(n, tuple(adj)))
    return tuple(out)


def generate_small_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, n <= 7.

    Larger orders are meant to come from external graph6 files.
    """
    if n < 1:
        raise GraphError("vertex count must be positive")
    if n > GENERATOR_MAX_N:
        raise UnsupportedGraphError(
            f"internal generator limited to n <= {GENERATOR_MAX_N}; "
            "use an external graph6 file")
    return [g for g in _all_graphs(n) if is_connected(g)]


# ---------------------------------------------------------------------------
# Census driver.

SourceEntry = tuple[int, Graph | None, str | None]  # (id, graph, parse error)


def graph6_source(lines: Iterable[str]) -> Iterator[SourceEntry]:
    """Turn graph6 lines into census entries; parse failures become error
    entries instead of aborting the run."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line), None
        except (GraphError, ValueError) as exc:
            yield lineno, None, str(exc)


def generator_source(n: int) -> Iterator[SourceEntry]:
    for idx, g in enumerate(generate_small_graphs(n)):
        yield idx, g, None


def _classify_entry(entry: SourceEntry) -> CensusRecord:
    graph_id, g, error = entry
    if error is not None:
        return CensusRecord(graph_id, 0, 0, error=f"parse error: {error}")
    assert g is not None
    return classify_graph(g, graph_id)


def run_census(source: Iterable[SourceEntry], workers: int = 1,
               config: dict | None = None) -> tuple[list[CensusRecord], dict]:
    """Classify every entry and aggregate a summary.

    Records come back in input order for any worker count.
    """
    entries = list(source)
    start = time.monotonic()
    if workers > 1 and len(entries) > 1:
        with multiprocessing.Pool(workers) as pool:
            records = pool.map(_classify_entry, entries, chunksize=64)
    else:
        records = [_classify_entry(e) for e in entries]
    wall = time.monotonic() - start
    return records, summarize(records, config=config or {}, wall_time=wall)


_FLAG_NAMES = ("strict", "relaxed", "connected_strict", "connected_relaxed", "balanced")


def summarize(records: list[CensusRecord], config: dict, wall_time: float) -> dict:
    per_order: dict[int, dict] = {}
    ids_lacking_relaxed = []
    parse_errors = []
    for r in records:
        if r.error is not None:
            parse_errors.append({"graph_id": r.graph_id, "error": r.error})
            continue
        row = per_order.setdefault(r.n, {"total": 0} | {
            f"lacking_{name}": 0 for name in _FLAG_NAMES})
        row["total"] += 1
        for name in _FLAG_NAMES:
            if not getattr(r, f"has_{name}"):
                row[f"lacking_{name}"] += 1
        if not r.has_relaxed:
            ids_lacking_relaxed.append(r.graph_id)
    return {
        "config": config,
        "per_order": {str(n): per_order[n] for n in sorted(per_order)},
        "ids_lacking_relaxed": ids_lacking_relaxed,
        "parse_errors": parse_errors,
        "wall_time_s": round(wall_time, 3),
    }


def write_records_jsonl(records: Iterable[CensusRecord], fp: IO[str]) -> None:
    for r in records:
        fp.write(json.dumps(asdict(r), separators=(",", ":")) + "\n")


def summary_json(summary: dict, include_wall_time: bool = True) -> str:
    if not include_wall_time:
        summary = {k: v for k, v in summary.items() if k != "wall_time_s"}
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"
