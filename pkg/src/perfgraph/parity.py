"""Shortest even paths via perfect matchings, and their uses for even pairs and 2-pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .graph import Graph, bits, component_mask, to_mask
from .linegraph import line_graph, root_lehot


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    weight: int


def min_weight_perfect_matching(g: Graph, weights: dict | None = None) -> Matching | None:
    """Minimum-weight perfect matching, or None if ``g`` has no perfect matching.

    ``weights`` maps edges (either orientation) to nonnegative integers; missing
    edges weigh 1.  Reduced to max-cardinality max-weight matching with
    weights ``big - w``: every maximum matching has the same size, so
    maximising the transformed weight minimises the original one.
    """
    if g.n % 2:
        return None
    weights = weights or {}

    def w(u, v):
        x = weights.get((u, v), weights.get((v, u), 1))
        if x < 0 or int(x) != x:
            raise ValueError("weights must be nonnegative integers")
        return int(x)

    big = 1 + max((w(u, v) for u, v in g.edges()), default=0)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v in g.edges():
        h.add_edge(u, v, weight=big - w(u, v))
    mate = nx.max_weight_matching(h, maxcardinality=True)
    if 2 * len(mate) != g.n:
        return None
    pairs = tuple(sorted(tuple(sorted(p)) for p in mate))
    return Matching(pairs, sum(w(u, v) for u, v in pairs))


def shortest_even_path(g: Graph, a: int, b: int, forbidden: Iterable[int] | int = 0) -> list[int] | None:
    """Shortest simple a-b path of even length avoiding ``forbidden``.

    Two copies of the remaining vertices, each vertex tied to its twin by a
    weight-0 edge; original edges weigh 1 in both copies.  ``a`` hangs off
    copy 1 and ``b`` off copy 2.  An alternating a-b path against the twin
    matching switches copy at every inner vertex, so it can only reach copy 2
    after an even number of edges.
    """
    if a == b:
        raise ValueError("endpoints must differ")
    fb = forbidden if isinstance(forbidden, int) else to_mask(forbidden)
    if fb >> a & 1 or fb >> b & 1:
        raise ValueError("endpoints must not be forbidden")
    inner = [v for v in range(g.n) if v not in (a, b) and not fb >> v & 1]
    k = len(inner)
    idx = {v: i for i, v in enumerate(inner)}
    # ids: copy1 = 0..k-1, copy2 = k..2k-1, a = 2k, b = 2k+1
    ia, ib = 2 * k, 2 * k + 1
    edges = []
    weights = {}
    for v in inner:
        i = idx[v]
        edges.append((i, k + i))
        weights[(i, k + i)] = 0
        for u in bits(g.adj[v]):
            j = idx.get(u)
            if j is not None and j > i:
                edges += [(i, j), (k + i, k + j)]
        if g.has_edge(a, v):
            edges.append((ia, i))
        if g.has_edge(b, v):
            edges.append((ib, k + i))
    gadget = Graph.from_edges(2 * k + 2, edges)
    m = min_weight_perfect_matching(gadget, weights)
    if m is None:
        return None
    mate = {}
    for u, v in m.pairs:
        mate[u], mate[v] = v, u
    path = [a]
    cur = mate[ia]
    while True:
        path.append(inner[cur % k])
        twin = cur + k if cur < k else cur - k
        nxt = mate[twin]
        if nxt == ib:
            break
        cur = nxt
    path.append(b)
    return path


def even_pair_in_line_graph(g: Graph, a: int, b: int) -> list[int] | None:
    """Odd induced a-b path of the line graph ``g``, or None when {a, b} is an even pair.

    a and b are edges of the root; for each choice of an endpoint of a and an
    endpoint of b we look for an even simple path in the root that avoids the
    two other endpoints.  Together with a and b it becomes an odd induced path.
    """
    if g.has_edge(a, b) or a == b:
        raise ValueError("a and b must be distinct and nonadjacent")
    res = root_lehot(g)
    if res is None:
        raise ValueError("input is not a line graph")
    r = res.root
    ea, eb = res.edge_map[a], res.edge_map[b]
    if not component_mask(r, ea[0], r.full) >> eb[0] & 1:
        return None
    vertex_of = {e: v for v, e in enumerate(res.edge_map)}
    for i in range(2):
        for j in range(2):
            s, s_other = ea[i], ea[1 - i]
            t, t_other = eb[j], eb[1 - j]
            q = shortest_even_path(r, s, t, 1 << s_other | 1 << t_other)
            if q is None:
                continue
            walk = [s_other] + q + [t_other]
            return [vertex_of[tuple(sorted(e))] for e in zip(walk, walk[1:])]
    return None


def is_two_pair(g: Graph, x: int, y: int) -> bool:
    """Nonadjacent x, y separated by the removal of their common neighbours."""
    if x == y or g.has_edge(x, y):
        return False
    keep = g.full & ~(g.adj[x] & g.adj[y])
    return not component_mask(g, x, keep) >> y & 1


def find_two_pair(g: Graph) -> tuple[int, int] | None:
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if is_two_pair(g, x, y):
                return x, y
    return None


__all__ = ["Matching", "min_weight_perfect_matching", "shortest_even_path",
           "even_pair_in_line_graph", "find_two_pair", "is_two_pair", "line_graph"]
