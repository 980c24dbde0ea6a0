"""Exhaustive and heuristic search for 2-community structures.

The exhaustive scan fixes vertex 0 in part A, which halves the 2^n space
(the two parts are unordered) and makes the enumeration order canonical:
ascending bitmask of A.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, UnsupportedGraphError, bits, is_connected
from .check import Mode, Partition, bipartition, check_partition


class Outcome(enum.Enum):
    FOUND = "found"
    NONE = "none"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SolveOptions:
    mode: Mode = Mode.STRICT
    require_connected: bool = False
    require_balanced: bool = False
    enumerate_all: bool = False
    budget: int | None = None  # bipartitions examined, not wall time


@dataclass
class SolveResult:
    outcome: Outcome
    part_a: int | None = None  # bitmask of part A for a FOUND result
    partitions_examined: int = 0
    all_solutions: list[int] | None = None

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    def partition(self, n: int) -> Partition | None:
        return bipartition(n, self.part_a) if self.part_a is not None else None


def _inequalities_hold(adj: tuple[int, ...], deg: list[int], a: int, b: int,
                       size_a: int, size_b: int) -> bool:
    # Cross-multiplied proportion inequality for every vertex; early exit.
    for u in bits(a):
        da = (adj[u] & a).bit_count()
        if size_b * da < (size_a - 1) * (deg[u] - da):
            return False
    for u in bits(b):
        db = (adj[u] & b).bit_count()
        if size_a * db < (size_b - 1) * (deg[u] - db):
            return False
    return True


def _check_preconditions(g: Graph, opts: SolveOptions) -> None:
    if g.n > 32:
        raise UnsupportedGraphError("exhaustive solver limited to n <= 32")
    if g.n < 2:
        raise GraphError("need at least 2 vertices for a bipartition")
    if opts.require_balanced and g.n % 2:
        raise GraphError("balanced bipartition requires an even vertex count")


def _scan(g: Graph, opts: SolveOptions, collect: bool) -> SolveResult:
    _check_preconditions(g, opts)
    n = g.n
    full = g.full_mask
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    strict = opts.mode is Mode.STRICT
    half = n // 2
    examined = 0
    solutions: list[int] = []
    for m in range(1 << (n - 1)):
        a = m << 1 | 1
        b = full ^ a
        if not b:
            continue
        examined += 1
        if opts.budget is not None and examined > opts.budget:
            return SolveResult(Outcome.BUDGET_EXCEEDED, partitions_examined=examined - 1,
                               all_solutions=solutions if collect else None)
        size_a = a.bit_count()
        size_b = n - size_a
        if strict and (size_a < 2 or size_b < 2):
            continue
        if opts.require_balanced and size_a != half:
            continue
        if not _inequalities_hold(adj, deg, a, b, size_a, size_b):
            continue
        if opts.require_connected and not (is_connected(g, a) and is_connected(g, b)):
            continue
        if collect:
            solutions.append(a)
        else:
            return SolveResult(Outcome.FOUND, part_a=a, partitions_examined=examined)
    if collect and solutions:
        return SolveResult(Outcome.FOUND, part_a=solutions[0],
                           partitions_examined=examined, all_solutions=solutions)
    return SolveResult(Outcome.NONE, partitions_examined=examined,
                       all_solutions=solutions if collect else None)


def find_2cs(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """First valid 2-community structure in canonical order, or NONE.

    NONE is only returned after the full canonical scan, so it certifies
    non-existence (for the requested variant).
    """
    return _scan(g, opts, collect=opts.enumerate_all)


def enumerate_2cs(g: Graph, opts: SolveOptions = SolveOptions()) -> list[int]:
    """All valid canonical bipartitions, as A bitmasks in ascending order."""
    return _scan(g, opts, collect=True).all_solutions or []


def tree_connected_2cs(g: Graph) -> SolveResult:
    """Connected 2-community search on a tree by single-edge removal.

    Every edge removal splits a tree into two connected components; some
    such split is a connected 2-community structure whenever one exists.
    """
    if not is_connected(g):
        raise GraphError("tree algorithm requires a connected graph")
    if g.edge_count != g.n - 1:
        raise GraphError("tree algorithm requires a tree (|E| = n - 1)")
    examined = 0
    for u, v in g.edges():
        examined += 1
        side = _component_without_edge(g, u, v)
        a, b = (side, g.full_mask ^ side)
        if not a >> 0 & 1:
            a, b = b, a
        p = Partition(g.n, (a, b))
        if check_partition(g, p, Mode.STRICT, require_connected=True).valid:
            return SolveResult(Outcome.FOUND, part_a=a, partitions_examined=examined)
    return SolveResult(Outcome.NONE, partitions_examined=examined)


def _component_without_edge(g: Graph, u: int, v: int) -> int:
    seen = 1 << u
    frontier = seen
    while frontier:
        grow = 0
        for w in bits(frontier):
            row = g.adj[w]
            if w == u:
                row &= ~(1 << v)
            elif w == v:
                row &= ~(1 << u)
            grow |= row
        frontier = grow & ~seen
        seen |= frontier
    return seen


def greedy_cut_heuristic(g: Graph, seed_a: int,
                         opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Local search moving one vertex at a time across the cut.

    A move is accepted when it strictly reduces the key
    (structural violations, cut size, unsatisfied vertices) lexicographically;
    ties between equally good moves go to the lowest vertex index. Terminates
    at a local minimum. FOUND only if the final partition actually verifies;
    NONE is a heuristic failure, not a proof of absence.
    """
    if g.n < 4:
        raise GraphError("heuristic needs at least 4 vertices")
    full = g.full_mask
    a = seed_a & full
    b = full ^ a
    if not a or not b:
        raise GraphError("seed partition has an empty side")

    def key(a: int, b: int) -> tuple[int, int, int]:
        violations = 0
        if opts.mode is Mode.STRICT and (a.bit_count() < 2 or b.bit_count() < 2):
            violations += 1
        if opts.require_balanced and a.bit_count() != b.bit_count():
            violations += 1
        if opts.require_connected and not (is_connected(g, a) and is_connected(g, b)):
            violations += 1
        cut = sum((g.adj[u] & b).bit_count() for u in bits(a))
        deg = [row.bit_count() for row in g.adj]
        unsat = 0
        sa, sb = a.bit_count(), b.bit_count()
        for u in bits(a):
            da = (g.adj[u] & a).bit_count()
            if sb * da < (sa - 1) * (deg[u] - da):
                unsat += 1
        for u in bits(b):
            db = (g.adj[u] & b).bit_count()
            if sa * db < (sb - 1) * (deg[u] - db):
                unsat += 1
        return violations, cut, unsat

    current = key(a, b)
    examined = 0
    for _ in range(g.n * g.n):  # each accepted move strictly improves; this bounds ties
        best = None
        best_key = current
        for v in range(g.n):
            if a >> v & 1:
                na, nb = a ^ (1 << v), b | (1 << v)
            else:
                na, nb = a | (1 << v), b ^ (1 << v)
            if not na or not nb:
                continue
            examined += 1
            k = key(na, nb)
            if k < best_key:
                best, best_key = (na, nb), k
        if best is None:
            break
        a, b = best
        current = best_key
    if not a >> 0 & 1:
        a, b = b, a
    p = Partition(g.n, (a, b))
    verdict = check_partition(g, p, opts.mode, opts.require_connected)
    if verdict.valid and (not opts.require_balanced or a.bit_count() == b.bit_count()):
        return SolveResult(Outcome.FOUND, part_a=a, partitions_examined=examined)
    return SolveResult(Outcome.NONE, partitions_examined=examined)
