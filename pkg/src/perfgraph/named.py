"""Small named graphs and parametrised families used across tests and the CLI."""

from __future__ import annotations

from .graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else path(n)


def path(n: int) -> Graph:
    """Path on ``n`` vertices (length n-1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def antihole(n: int) -> Graph:
    return cycle(n).complement()


def claw() -> Graph:
    return complete_bipartite(1, 3)


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def bull() -> Graph:
    # triangle 0-1-2 with horns 3 on 1 and 4 on 2
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def house() -> Graph:
    # complement of P5; a C5 with one chord
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism(l1: int, l2: int, l3: int) -> Graph:
    """Triangles {0,1,2} and {3,4,5}; path i joins i to 3+i with length l_i."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1:
        raise ValueError("prism paths have length >= 1")
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    nxt = 6
    for i, ln in enumerate(lengths):
        prev = i
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 3 + i))
    return Graph.from_edges(nxt, edges)


def pyramid(l1: int, l2: int, l3: int) -> Graph:
    """Apex 0, triangle {1,2,3}; path i joins 0 to i with length l_i."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1 or sum(1 for x in lengths if x == 1) > 1:
        raise ValueError("pyramid paths have length >= 1, at most one of length 1")
    edges = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for i, ln in enumerate(lengths):
        prev = 0
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1 + i))
    return Graph.from_edges(nxt, edges)


def quasi_prism(s1: int, s2: int, s3: int, s4: int) -> tuple[Graph, int, int]:
    """Quasi-prism with tail lengths s1, s2 (>= 0) and side lengths s3, s4 (>= 1).

    Returns the graph and its two endpoints.  Tail one runs a..a', tail two
    b..b'; the sides are c..c' and d..d'; triangles {a', c, d}, {b', c', d'}.
    """
    if s1 < 0 or s2 < 0 or s3 < 1 or s4 < 1:
        raise ValueError("bad quasi-prism lengths")
    edges = []
    nxt = 0

    def run(length):
        nonlocal nxt
        vs = list(range(nxt, nxt + length + 1))
        nxt += length + 1
        edges.extend(zip(vs, vs[1:]))
        return vs

    t1, t2, p3, p4 = run(s1), run(s2), run(s3), run(s4)
    a1, b1 = t1[-1], t2[-1]
    c, c1, d, d1 = p3[0], p3[-1], p4[0], p4[-1]
    edges += [(a1, c), (a1, d), (c, d), (b1, c1), (b1, d1), (c1, d1)]
    return Graph.from_edges(nxt, edges), t1[0], t2[0]


def double_diamond() -> Graph:
    """Order a1, b1, a2, b2, c1, c2, d1, d2; both a's see the edge c1c2."""
    a1, b1, a2, b2, c1, c2, d1, d2 = range(8)
    square = [(c1, c2), (c2, d1), (d1, d2), (d2, c1)]
    return Graph.from_edges(8, square + [(a1, b1), (a2, b2),
                                         (a1, c1), (a1, c2), (b1, d1), (b1, d2),
                                         (a2, c1), (a2, c2), (b2, d1), (b2, d2)])


def l_k33_minus_e() -> Graph:
    """Same frame as the double diamond but a2 sees the edge c2d1."""
    a1, b1, a2, b2, c1, c2, d1, d2 = range(8)
    square = [(c1, c2), (c2, d1), (d1, d2), (d2, c1)]
    return Graph.from_edges(8, square + [(a1, b1), (a2, b2),
                                         (a1, c1), (a1, c2), (b1, d1), (b1, d2),
                                         (a2, c2), (a2, d1), (b2, d2), (b2, c1)])


def k4_subdivision(lengths: dict[tuple[int, int], int]) -> Graph:
    """Subdivide the six edges of K4 on {0,1,2,3}; missing keys mean length 1."""
    edges = []
    nxt = 4
    for i in range(4):
        for j in range(i + 1, 4):
            ln = lengths.get((i, j), 1)
            if ln < 1:
                raise ValueError("edge lengths are >= 1")
            prev = i
            for _ in range(ln - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, j))
    return Graph.from_edges(nxt, edges)


def even_prism9() -> Graph:
    return prism(2, 2, 2)
