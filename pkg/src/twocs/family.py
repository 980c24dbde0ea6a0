"""Construction and verification of a parameterized family of graphs that
admit no 2-community structure.

A member consists of two disjoint k-cliques W1 and W2 (k >= 3) with no edges
between them, a vertex w adjacent to everything except a pendant vertex z,
vertices x and y forming a triangle with w and attached symmetrically to both
cliques, and z hanging off y. The attachment degrees and overlaps are
constrained so that a coverage bound holds and suitable vertices alpha
(neighbor of y but not x) and beta (common neighbor of x and y) exist inside
the cliques. Under those constraints no bipartition of the vertices is a
2-community structure, which the exhaustive solver confirms for small k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (Graph, UnsupportedGraphError, are_isomorphic, bits,
                    from_edge_list, is_clique, mask_of)
from .check import Mode, Partition, Verdict, bipartition, check_partition
from .solver import Outcome, SolveOptions, SolveResult, find_2cs


class FamilyParamsError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    """Canonical parameterization: clique size k, attachment degrees of x and y
    into each clique, and the overlap |W_i ∩ N(x) ∩ N(y)| per clique."""

    k: int
    d_x: int
    d_y: int
    o_1: int
    o_2: int

    def violations(self) -> list[str]:
        k, d_x, d_y = self.k, self.d_x, self.d_y
        out = []
        if k < 3:
            out.append("clique size k must be at least 3")
        if not 1 <= d_x <= k - 1:
            out.append("degree of x into each clique must satisfy 1 <= d_x <= k-1")
        if not 2 <= d_y <= k - 1:
            out.append("degree of y into each clique must satisfy 2 <= d_y <= k-1")
        for i, o in ((1, self.o_1), (2, self.o_2)):
            if not max(0, d_x + d_y - k) <= o <= min(d_x, d_y):
                out.append(f"overlap o_{i}={o} outside [max(0, d_x+d_y-k), min(d_x, d_y)]")
                continue
            # |W_i ∩ (N(x) ∪ N(y))| > 3k/(k+3), kept in cross-multiplied form
            if (k + 3) * (d_x + d_y - o) <= 3 * k:
                out.append(f"coverage bound fails for clique {i}: "
                           f"(k+3)*(d_x+d_y-o_{i}) must exceed 3k")
        if self.o_1 < 1 and self.o_2 < 1:
            out.append("no common neighbor of x and y in the cliques (beta missing)")
        if d_y - self.o_1 < 1 and d_y - self.o_2 < 1:
            out.append("no clique vertex adjacent to y but not x (alpha missing)")
        return out

    @property
    def n(self) -> int:
        return 2 * self.k + 4


@dataclass(frozen=True)
class FamilyMember:
    params: FamilyParams
    graph: Graph
    roles: dict[int, str]  # vertex -> one of "W1", "W2", "x", "y", "w", "z"

    def role_vertex(self, role: str) -> int:
        for v, r in self.roles.items():
            if r == role:
                return v
        raise KeyError(role)

    def role_mask(self, role: str) -> int:
        return mask_of(v for v, r in self.roles.items() if r == role)


def build_member(params: FamilyParams) -> FamilyMember:
    """Deterministic labeled construction.

    Layout: W1 = 0..k-1, W2 = k..2k-1, x = 2k, w = 2k+1, y = 2k+2, z = 2k+3.
    In each clique, x's neighbors are the first d_x vertices; y's neighbors
    are the first o_i of those plus the next d_y - o_i vertices after x's
    block. Any other placement is equivalent up to clique automorphisms.
    """
    bad = params.violations()
    if bad:
        raise FamilyParamsError("; ".join(bad))
    k = params.k
    x, w, y, z = 2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3
    edges: list[tuple[int, int]] = []
    for base in (0, k):
        clique = range(base, base + k)
        edges += [(u, v) for u in clique for v in clique if u < v]
        edges += [(w, v) for v in clique]
    edges += [(x, y), (x, w), (y, w), (y, z)]
    for base, o in ((0, params.o_1), (k, params.o_2)):
        edges += [(x, base + i) for i in range(params.d_x)]
        edges += [(y, base + i) for i in range(o)]
        edges += [(y, base + params.d_x + i) for i in range(params.d_y - o)]
    roles = {v: "W1" for v in range(k)}
    roles.update({v: "W2" for v in range(k, 2 * k)})
    roles.update({x: "x", w: "w", y: "y", z: "z"})
    g = from_edge_list(params.n, edges, name=f"family(k={k},dx={params.d_x},"
                       f"dy={params.d_y},o1={params.o_1},o2={params.o_2})")
    return FamilyMember(params, g, roles)


def validate_member(g: Graph, roles: dict[int, str]) -> list[str]:
    """Check each defining condition of the family independently.

    Returns the list of violated conditions (empty for a valid member).
    """
    if sorted(roles) != list(range(g.n)):
        raise FamilyParamsError("role map must assign every vertex exactly once")
    singles = {}
    for name in ("x", "y", "w", "z"):
        vs = [v for v, r in roles.items() if r == name]
        if len(vs) != 1:
            raise FamilyParamsError(f"role map must contain exactly one {name!r}")
        singles[name] = vs[0]
    if any(r not in ("W1", "W2", "x", "y", "w", "z") for r in roles.values()):
        raise FamilyParamsError("unknown role in role map")
    x, y, w, z = singles["x"], singles["y"], singles["w"], singles["z"]
    w1 = mask_of(v for v, r in roles.items() if r == "W1")
    w2 = mask_of(v for v, r in roles.items() if r == "W2")
    k = w1.bit_count()

    out = []
    if k < 3 or w2.bit_count() != k:
        out.append("W1 and W2 must be vertex sets of the same size k >= 3")
    if not (is_clique(g, w1) and is_clique(g, w2)):
        out.append("W1 and W2 must induce cliques")
    xyw = 1 << x | 1 << y | 1 << w
    if not is_clique(g, xyw):
        out.append("x, y, w must form a triangle")
    if g.adj[w] & (w1 | w2) != w1 | w2:
        out.append("w must be adjacent to all vertices of W1 and W2")
    if g.adj[z] != 1 << y:
        out.append("z must be a pendant vertex adjacent only to y")
    dx1 = (g.adj[x] & w1).bit_count()
    dx2 = (g.adj[x] & w2).bit_count()
    dy1 = (g.adj[y] & w1).bit_count()
    dy2 = (g.adj[y] & w2).bit_count()
    if not (dx1 == dx2 and 1 <= dx1 <= k - 1):
        out.append("x must have equal degree into both cliques, between 1 and k-1")
    if not (dy1 == dy2 and 2 <= dy1 <= k - 1):
        out.append("y must have equal degree into both cliques, between 2 and k-1")
    union = g.adj[x] | g.adj[y]
    for i, wi in ((1, w1), (2, w2)):
        if (k + 3) * (wi & union).bit_count() <= 3 * k:
            out.append(f"coverage bound fails for W{i}")
    if not (g.adj[x] & g.adj[y] & (w1 | w2)):
        out.append("no common neighbor of x and y in the cliques (beta missing)")
    if not (g.adj[y] & ~g.adj[x] & (w1 | w2)):
        out.append("no clique vertex adjacent to y but not x (alpha missing)")
    for u in bits(w1):
        if g.adj[u] & w2:
            out.append("there must be no edge between W1 and W2")
            break
    return out


def enumerate_members(k: int, cross_validate: bool = True) -> list[FamilyMember]:
    """All members for a given clique size, up to isomorphism.

    Parameter-level dedup uses the unordered overlap pair {o_1, o_2}: clique
    vertices are interchangeable, so swapping the overlap roles of W1 and W2
    relabels the same graph. With cross_validate the resulting members are
    additionally confirmed pairwise non-isomorphic.
    """
    if k < 3:
        raise FamilyParamsError("clique size k must be at least 3")
    members = []
    for d_x in range(1, k):
        for d_y in range(2, k):
            lo = max(0, d_x + d_y - k)
            hi = min(d_x, d_y)
            for o_1 in range(lo, hi + 1):
                for o_2 in range(lo, o_1 + 1):  # o_1 >= o_2: unordered pair
                    params = FamilyParams(k, d_x, d_y, o_1, o_2)
                    if not params.violations():
                        members.append(build_member(params))
    if cross_validate:
        if 2 * k + 4 > 16:
            raise UnsupportedGraphError(
                "isomorphism cross-validation not available for k > 6")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if are_isomorphic(members[i].graph, members[j].graph):
                    raise AssertionError(
                        f"unexpected isomorphism between {members[i].params} "
                        f"and {members[j].params}")
    return members


@dataclass(frozen=True)
class ProofFixture:
    """One of the named bipartitions from the non-existence argument, with the
    verdict the checker produces for it."""

    label: str
    part_b: int
    verdict: Verdict


@dataclass
class FamilyReport:
    member: FamilyMember
    result: SolveResult
    fixtures: list[ProofFixture]

    @property
    def confirmed(self) -> bool:
        return self.result.outcome is Outcome.NONE


def verify_family_no_2cs(member: FamilyMember) -> FamilyReport:
    """Exhaustively confirm that a member has no 2-community structure.

    Runs the relaxed solver (singleton parts included, connectivity not
    required), which dominates every other variant, and evaluates the four
    named bipartitions whose failures anchor the argument.
    """
    g = member.graph
    if g.n > 32:
        raise UnsupportedGraphError("verification limited to n <= 32 (k <= 14)")
    result = find_2cs(g, SolveOptions(mode=Mode.RELAXED))
    x = 1 << member.role_vertex("x")
    y = 1 << member.role_vertex("y")
    z = 1 << member.role_vertex("z")
    w2 = member.role_mask("W2")
    fixtures = []
    for label, b in (
        ("B={x,y,z}", x | y | z),
        ("B={y,z}", y | z),
        ("B={y,z}+W2", y | z | w2),
        ("B={x,y,z}+W2", x | y | z | w2),
    ):
        p = Partition(g.n, (g.full_mask ^ b, b))
        fixtures.append(ProofFixture(label, b, check_partition(g, p, Mode.STRICT)))
    return FamilyReport(member, result, fixtures)
