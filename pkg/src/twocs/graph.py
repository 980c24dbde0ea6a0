"""Small simple-graph toolkit: bitmask adjacency, graph6 and edge-list I/O,
structural queries, and isomorphism testing for small graphs.

Vertices are integers 0..n-1. Vertex sets are plain ints used as bitmasks,
which keeps set operations at word level for the exhaustive searches built
on top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class Graph6ParseError(GraphError):
    """Malformed graph6 input; carries the byte offset of the offending data."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedGraphError(GraphError):
    pass


MAX_IO_VERTICES = 62  # single-byte graph6 size encoding
MAX_SOLVER_VERTICES = 32  # bitmask searches stay within one machine word
MAX_ISO_VERTICES = 16


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph must have at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has out-of-range neighbors")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        adj = [0] * self.n
        for u in range(self.n):
            for v in bits(self.adj[u]):
                adj[perm[u]] |= 1 << perm[v]
        return Graph(self.n, tuple(adj), self.name)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def from_edge_list_text(text: str, name: str | None = None) -> Graph:
    """Parse the "u v" per line format; '#' starts a comment.

    A line holding a single integer (conventionally the first) fixes the
    vertex count; otherwise n is one more than the largest endpoint seen.
    """
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            if n is not None:
                raise GraphError("duplicate vertex-count line in edge list")
            n = int(parts[0])
        elif len(parts) == 2:
            edges.append((int(parts[0]), int(parts[1])))
        else:
            raise GraphError(f"cannot parse edge-list line: {raw!r}")
    if n is None:
        if not edges:
            raise GraphError("empty edge list with no vertex count")
        n = max(max(u, v) for u, v in edges) + 1
    return from_edge_list(n, edges, name)


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (single-byte size form, n <= 62)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    data = bytes(ord(c) if ord(c) < 256 else 0 for c in s)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"invalid graph6 character {s[i]!r}", i)
    if data[0] == 126:
        raise UnsupportedGraphError("graph6 multi-byte size encoding (n > 62) not supported")
    n = data[0] - 63
    if n == 0:
        raise Graph6ParseError("graph6 with zero vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6ParseError(
            f"graph6 body has {len(data) - 1} bytes, expected {nbytes} for n={n}",
            len(data),
        )
    adj = [0] * n
    bit = 0
    for byte in data[1:]:
        group = byte - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                break
            if group >> k & 1:
                i, j = _g6_pair(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def _g6_pair(bit: int) -> tuple[int, int]:
    # bit index -> upper-triangle pair in column order (0,1),(0,2),(1,2),(0,3),...
    j = 1
    while bit >= j:
        bit -= j
        j += 1
    return bit, j


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_IO_VERTICES:
        raise UnsupportedGraphError(f"graph6 output limited to n <= {MAX_IO_VERTICES}")
    out = [chr(g.n + 63)]
    group = 0
    count = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            count += 1
            if count == 6:
                out.append(chr(group + 63))
                group = count = 0
    if count:
        out.append(chr((group << (6 - count)) + 63))
    return "".join(out)


def degree_in(g: Graph, u: int, members: int) -> int:
    """Number of neighbors of u inside the vertex set given as a bitmask."""
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return (g.adj[u] & members).bit_count()


def is_connected(g: Graph, members: int | None = None) -> bool:
    """Whether the subgraph induced by the given vertex set is connected.

    members=None means the whole graph. Singletons count as connected.
    """
    if members is None:
        members = g.full_mask
    if members == 0:
        raise GraphError("connectivity of the empty set is undefined")
    start = members & -members
    seen = start
    frontier = start
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v] & members
        frontier = grow & ~seen
        seen |= frontier
    return seen == members


def is_clique(g: Graph, members: int) -> bool:
    for v in bits(members):
        if members & ~g.adj[v] & ~(1 << v):
            return False
    return True


def triangle_counts(g: Graph) -> tuple[int, ...]:
    """Per-vertex triangle counts, sorted (isomorphism invariant)."""
    counts = []
    for v in range(g.n):
        t = 0
        for u in bits(g.adj[v]):
            t += (g.adj[v] & g.adj[u]).bit_count()
        counts.append(t // 2)
    return tuple(sorted(counts))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by invariant screening plus backtracking.

    Meant for small graphs; refuses n > MAX_ISO_VERTICES.
    """
    if g1.n != g2.n:
        return False
    if g1.n > MAX_ISO_VERTICES:
        raise UnsupportedGraphError(f"isomorphism test limited to n <= {MAX_ISO_VERTICES}")
    if g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if triangle_counts(g1) != triangle_counts(g2):
        return False

    n = g1.n
    # Map vertices of g1 in order of ascending candidate-set size (rarest degree first).
    deg2_buckets: dict[int, list[int]] = {}
    for u in range(n):
        deg2_buckets.setdefault(g2.degree(u), []).append(u)
    order = sorted(range(n), key=lambda v: (len(deg2_buckets[g1.degree(v)]), -g1.degree(v)))

    mapping = [-1] * n  # g1 vertex -> g2 vertex
    used = [False] * n

    def backtrack(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for u in deg2_buckets[g1.degree(v)]:
            if used[u]:
                continue
            ok = True
            for i in range(idx):
                w = order[i]
                if (g1.adj[v] >> w & 1) != (g2.adj[u] >> mapping[w] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if backtrack(idx + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return backtrack(0)
