"""Shared test utilities: independent oracles and random instance generators.

The oracles here deliberately avoid the pruned/canonicalized code paths they
are used to validate.
"""

import random
from fractions import Fraction
from itertools import permutations

from twocs import Graph, Mode, Partition, check_partition, from_edge_list
from twocs.graph import bits, is_connected


def naive_2cs_exists(g, mode=Mode.STRICT, require_connected=False,
                     require_balanced=False):
    """Unpruned scan of all 2^n vertex assignments (both orders, no vertex
    pinning): the independent existence oracle."""
    full = (1 << g.n) - 1
    for a in range(1, full):
        b = full ^ a
        sa, sb = a.bit_count(), b.bit_count()
        if mode is Mode.STRICT and (sa < 2 or sb < 2):
            continue
        if require_balanced and sa != sb:
            continue
        p = Partition(g.n, (a, b))
        if check_partition(g, p, mode, require_connected).valid:
            return True
    return False


def fraction_verdict(g, p):
    """High-precision rational evaluation of the proportion inequality,
    defined only when every part has >= 2 vertices."""
    for u in range(g.n):
        i = p.home_of(u)
        home = p.parts[i]
        assert home.bit_count() >= 2
        own = Fraction((g.adj[u] & home).bit_count(), home.bit_count() - 1)
        for j, other in enumerate(p.parts):
            if j == i:
                continue
            if own < Fraction((g.adj[u] & other).bit_count(), other.bit_count()):
                return False
    return True


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected_graph(rng, n, p=0.4):
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_partition(rng, n, k, min_part=1):
    """Random partition of 0..n-1 into k parts of size >= min_part."""
    assert k * min_part <= n
    while True:
        labels = [rng.randrange(k) for _ in range(n)]
        parts = [0] * k
        for v, lab in enumerate(labels):
            parts[lab] |= 1 << v
        if all(part.bit_count() >= min_part for part in parts):
            return Partition(n, tuple(parts))


def random_tree(rng, n):
    """Uniform random labeled tree from a random Pruefer sequence."""
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return from_edge_list(n, edges)


def all_trees(n, _cache={1: None}):
    """All trees on n vertices up to isomorphism, by leaf attachment."""
    from twocs import are_isomorphic

    if n == 1:
        return [Graph(1, (0,))]
    out = []
    for t in all_trees(n - 1):
        for v in range(t.n):
            adj = [row | ((1 << (n - 1)) if u == v else 0)
                   for u, row in enumerate(t.adj)]
            adj.append(1 << v)
            g = Graph(n, tuple(adj))
            if not any(are_isomorphic(g, h) for h in out
                       if h.degree_sequence() == g.degree_sequence()):
                out.append(g)
    return out


def brute_canonical_connected(n):
    """Permutation-canonicity generator: keep a labeled graph iff its
    upper-triangle encoding is minimal over all vertex relabelings.
    Exponential; usable only for n <= 5."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    nbits = len(pairs)
    out = []
    for mask in range(1 << nbits):
        adj = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if mask >> idx & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        minimal = True
        for perm in permutations(range(n)):
            pm = 0
            for idx, (i, j) in enumerate(pairs):
                pi, pj = perm[i], perm[j]
                if adj[pi] >> pj & 1:
                    pm |= 1 << idx
            if pm < mask:
                minimal = False
                break
        if not minimal:
            continue
        g = Graph(n, tuple(adj))
        if is_connected(g):
            out.append(g)
    return out
