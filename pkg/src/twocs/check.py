"""Exact community-structure predicates.

A partition of a graph's vertices is a community structure when every vertex
has at least as large a proportion of neighbors in its own part as in any
other part. All comparisons are done in cross-multiplied integer form,

    |C_j| * d_{C_i}(u)  >=  (|C_i| - 1) * d_{C_j}(u)

for u in its home part C_i against every other part C_j, so there is no
floating point anywhere. STRICT mode additionally requires every part to
have at least 2 vertices; RELAXED mode permits singleton parts (for which
the right-hand side vanishes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, bits, is_connected


class Mode(enum.Enum):
    STRICT = "strict"
    RELAXED = "relaxed"


class PartitionError(ValueError):
    """A malformed partition (overlap, gap, empty part, fewer than 2 parts).

    Distinct from an *invalid* verdict: this signals a caller bug, not a
    mathematical failure of the partition.
    """


@dataclass(frozen=True)
class Partition:
    """Ordered list of pairwise-disjoint vertex sets (bitmasks) covering 0..n-1."""

    n: int
    parts: tuple[int, ...]

    def validate(self) -> None:
        if len(self.parts) < 2:
            raise PartitionError("a partition needs at least 2 parts")
        full = (1 << self.n) - 1
        seen = 0
        for i, part in enumerate(self.parts):
            if part == 0:
                raise PartitionError(f"part {i} is empty")
            if part & ~full:
                raise PartitionError(f"part {i} has out-of-range vertices")
            if part & seen:
                raise PartitionError(f"part {i} overlaps an earlier part")
            seen |= part
        if seen != full:
            missing = sorted(bits(full & ~seen))
            raise PartitionError(f"vertices {missing} belong to no part")

    def home_of(self, u: int) -> int:
        for i, part in enumerate(self.parts):
            if part >> u & 1:
                return i
        raise PartitionError(f"vertex {u} belongs to no part")

    def relabel(self, perm: list[int]) -> "Partition":
        parts = []
        for part in self.parts:
            m = 0
            for v in bits(part):
                m |= 1 << perm[v]
            parts.append(m)
        return Partition(self.n, tuple(parts))


def bipartition(n: int, a: int) -> Partition:
    """Two-part partition from the bitmask of the first part."""
    return Partition(n, (a, ((1 << n) - 1) & ~a))


def parse_partition(text: str, n: int) -> Partition:
    """Parse the "0,1,2|3,4" syntax used by the CLI."""
    parts = []
    for chunk in text.split("|"):
        m = 0
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok:
                raise PartitionError(f"empty vertex entry in {chunk!r}")
            try:
                v = int(tok)
            except ValueError:
                raise PartitionError(f"not a vertex index: {tok!r}") from None
            if not 0 <= v < n:
                raise PartitionError(f"vertex {v} out of range for n={n}")
            if m >> v & 1:
                raise PartitionError(f"vertex {v} repeated within a part")
            m |= 1 << v
        parts.append(m)
    p = Partition(n, tuple(parts))
    p.validate()
    return p


def format_partition(p: Partition) -> str:
    return "|".join(",".join(str(v) for v in bits(part)) for part in p.parts)


@dataclass(frozen=True)
class Witness:
    """An unsatisfied vertex with the two integer sides of its inequality."""

    vertex: int
    home: int
    other: int
    lhs: int  # |C_other| * d_home(vertex)
    rhs: int  # (|C_home| - 1) * d_other(vertex)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Witness | None = None
    # Structural failures (undersized part in STRICT mode, disconnected part
    # when connectivity is required) carry a reason instead of a witness.
    reason: str | None = None


def vertex_satisfied(g: Graph, p: Partition, u: int, mode: Mode = Mode.RELAXED) -> bool:
    """Whether vertex u meets the proportion inequality against every other part."""
    return _find_violation(g, p, u) is None


def _find_violation(g: Graph, p: Partition, u: int) -> Witness | None:
    if not 0 <= u < g.n:
        raise PartitionError(f"vertex {u} out of range")
    home = p.home_of(u)
    c_home = p.parts[home]
    d_home = (g.adj[u] & c_home).bit_count()
    size_home = c_home.bit_count()
    for j, c_other in enumerate(p.parts):
        if j == home:
            continue
        d_other = (g.adj[u] & c_other).bit_count()
        lhs = c_other.bit_count() * d_home
        rhs = (size_home - 1) * d_other
        if lhs < rhs:
            return Witness(u, home, j, lhs, rhs)
    return None


def check_partition(
    g: Graph,
    p: Partition,
    mode: Mode = Mode.STRICT,
    require_connected: bool = False,
) -> Verdict:
    """Full verdict for a partition into any number of parts.

    The witness is deterministic: lowest unsatisfied vertex index first, then
    lowest violating other-part index.
    """
    p.validate()
    if p.n != g.n:
        raise PartitionError(f"partition is over {p.n} vertices, graph has {g.n}")
    if mode is Mode.STRICT:
        for i, part in enumerate(p.parts):
            if part.bit_count() < 2:
                return Verdict(False, reason=f"part {i} has fewer than 2 vertices")
    if require_connected:
        for i, part in enumerate(p.parts):
            if not is_connected(g, part):
                return Verdict(False, reason=f"part {i} does not induce a connected subgraph")
    for u in range(g.n):
        w = _find_violation(g, p, u)
        if w is not None:
            return Verdict(False, witness=w)
    return Verdict(True)


def unsatisfied_set(g: Graph, p: Partition, mode: Mode = Mode.RELAXED) -> int:
    """Bitmask of the vertices failing their proportion inequality."""
    p.validate()
    out = 0
    for u in range(g.n):
        if _find_violation(g, p, u) is not None:
            out |= 1 << u
    return out
