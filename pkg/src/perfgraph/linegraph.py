"""Line graphs, root reconstruction and the walk/path correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, lowest


@dataclass(frozen=True)
class RootResult:
    root: Graph
    edge_map: tuple[tuple[int, int], ...]  # input vertex -> root edge (u, v), u < v

    def check(self, g: Graph) -> bool:
        lg, emap = line_graph(self.root)
        index = {e: i for i, e in enumerate(emap)}
        perm = [index[e] for e in self.edge_map]
        if len(set(perm)) != g.n or lg.n != g.n:
            return False
        return all(g.has_edge(u, v) == lg.has_edge(perm[u], perm[v])
                   for u, v in combinations(range(g.n), 2))


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Return L(g) and the list mapping each of its vertices to an edge of g."""
    emap = g.edges()
    at: dict[int, int] = {}
    for i, (u, v) in enumerate(emap):
        at[u] = at.get(u, 0) | 1 << i
        at[v] = at.get(v, 0) | 1 << i
    adj = [(at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(emap)]
    return Graph(len(emap), adj), emap


def _root_from_cliques(g: Graph, cliques: list[int]) -> RootResult:
    member: list[list[int]] = [[] for _ in range(g.n)]
    for ci, c in enumerate(cliques):
        for v in bits(c):
            member[v].append(ci)
    nxt = len(cliques)
    edges = []
    for v in range(g.n):
        ends = list(member[v])
        while len(ends) < 2:
            ends.append(nxt)
            nxt += 1
        u, w = sorted(ends)
        edges.append((u, w))
    return RootResult(Graph.from_edges(nxt, edges), tuple(edges))


def krausz_cover(g: Graph) -> list[int] | None:
    """Partition the edges of ``g`` into cliques, each vertex in at most two.

    Backtracking on the lowest uncovered edge xy.  In a line graph the common
    neighbours of xy are the other edges at the shared root vertex plus at
    most one edge closing a triangle, so trying "all of them" and "all but
    one" is exhaustive.
    """
    count = [0] * g.n
    uncovered = [row for row in g.adj]  # uncovered[v]: neighbours via uncovered edges
    cliques: list[int] = []

    def rec() -> bool:
        x = next((v for v in range(g.n) if uncovered[v]), None)
        if x is None:
            return True
        y = lowest(uncovered[x])
        common = uncovered[x] & uncovered[y]
        w = 0
        for z in bits(common):
            if count[z] < 2:
                w |= 1 << z
        options = [w] + [w & ~(1 << t) for t in bits(w)]
        tried = set()
        for extra in options:
            if extra in tried:
                continue
            tried.add(extra)
            c = extra | 1 << x | 1 << y
            if not _clique_of_uncovered(uncovered, c):
                continue
            if any(count[v] >= 2 for v in bits(c)):
                continue
            for v in bits(c):
                count[v] += 1
                uncovered[v] &= ~c
            cliques.append(c)
            if all(not (count[v] == 2 and uncovered[v]) for v in bits(c)) and rec():
                return True
            cliques.pop()
            for v in bits(c):
                count[v] -= 1
                uncovered[v] |= c & ~(1 << v)
        return False

    return list(cliques) if rec() else None


def _clique_of_uncovered(uncovered: list[int], c: int) -> bool:
    for v in bits(c):
        if c & ~(1 << v) & ~uncovered[v]:
            return False
    return True


def root_lehot(g: Graph) -> RootResult | None:
    """A root R with L(R) = g, or None when g is not a line graph.

    The root of a triangle component is the claw.
    """
    cover = krausz_cover(g)
    if cover is None:
        return None
    res = _root_from_cliques(g, cover)
    if not res.check(g):
        return None
    return res


def has_claw(g: Graph) -> bool:
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return True
    return False


def has_diamond(g: Graph) -> bool:
    for x, y in g.edges():
        common = g.adj[x] & g.adj[y]
        for z in bits(common):
            if common & ~g.adj[z] & ~(1 << z):
                return True
    return False


def maximal_cliques(g: Graph) -> list[int]:
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = lowest(p | x)
        for v in bits(p & ~g.adj[pivot]):
            bk(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.full, 0)
    return sorted(out)


def root_triangle_free(g: Graph) -> RootResult | None:
    """Triangle-free root of a claw-free, diamond-free graph; None otherwise.

    Maximal cliques become root vertices, and every vertex lying in a single
    maximal clique gets its own pendant root vertex.
    """
    if has_claw(g) or has_diamond(g):
        return None
    return _root_from_cliques(g, maximal_cliques(g))


def walk_path_transfer(r: Graph, edge_set) -> list[int] | None:
    """Map the edge set of a simple path of ``r`` to an induced path of L(r).

    Returns the L(r) vertex ids in path order (ids as produced by
    ``line_graph(r)``), or None if ``edge_set`` is not a simple path.
    """
    edges = {tuple(sorted(e)) for e in edge_set}
    if not edges or any(not r.has_edge(u, v) for u, v in edges):
        return None
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if max(deg.values()) > 2 or len(deg) != len(edges) + 1:
        return None
    ends = sorted(v for v, d in deg.items() if d == 1)
    if len(ends) != 2:
        return None
    order = [ends[0]]
    left = set(edges)
    while left:
        cur = order[-1]
        nxt = [e for e in left if cur in e]
        if len(nxt) != 1:
            return None
        e = nxt[0]
        left.remove(e)
        order.append(e[0] if e[1] == cur else e[1])
    _, emap = line_graph(r)
    index = {e: i for i, e in enumerate(emap)}
    return [index[tuple(sorted(p))] for p in zip(order, order[1:])]


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_line_graph_of_bipartite(g: Graph) -> bool:
    res = root_lehot(g)
    return res is not None and is_bipartite(res.root)


__all__ = ["RootResult", "line_graph", "root_lehot", "root_triangle_free", "walk_path_transfer",
           "is_line_graph_of_bipartite", "is_bipartite", "has_claw", "has_diamond",
           "maximal_cliques", "krausz_cover"]
