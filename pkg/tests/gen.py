"""Random graph generators shared by the suites."""

import random
from itertools import combinations

from hypothesis import strategies as st

from perfgraph import named
from perfgraph.graph import Graph
from perfgraph.linegraph import line_graph


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def _structure(rng: random.Random, nmax: int) -> Graph:
    while True:
        k = rng.randrange(5)
        if k == 0:
            ls = [rng.randint(1, 3) for _ in range(3)]
            g = named.prism(*ls)
        elif k == 1:
            ls = [rng.randint(1, 3) for _ in range(3)]
            if sorted(ls)[1] < 2:
                continue
            g = named.pyramid(*ls)
        elif k == 2:
            g = named.even_prism9()
        elif k == 3:
            lengths = {}
            for _ in range(rng.randint(1, 3)):
                e = rng.choice(list(combinations(range(4), 2)))
                lengths[e] = lengths.get(e, 1) + 1
            g = line_graph(named.k4_subdivision(lengths))[0]
        else:
            g = named.cycle(rng.randint(5, nmax))
        if g.n <= nmax:
            return g


def planted(rng: random.Random, nmax: int = 9) -> Graph:
    """A prism, pyramid, LGS or hole plus random extra vertices, maybe one edge flipped."""
    g = _structure(rng, nmax)
    n = g.n + rng.randint(0, nmax - g.n)
    edges = set(g.edges())
    for v in range(g.n, n):
        edges |= {(u, v) for u in range(v) if rng.random() < 0.35}
    if rng.random() < 0.3:
        u, v = sorted(rng.sample(range(n), 2))
        edges ^= {(u, v)}
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, sorted(edges)).relabel(perm)


def mixed(rng: random.Random, nmax: int = 9) -> Graph:
    if rng.random() < 0.6:
        return planted(rng, nmax)
    return gnp(rng.randint(4, nmax), rng.choice([0.2, 0.3, 0.4, 0.5, 0.6, 0.7]), rng)


def cograph(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1)
    k = rng.randint(1, n - 1)
    g = cograph(k, rng).disjoint_union(cograph(n - k, rng))
    if rng.random() < 0.5:
        g = g.add_edges([(i, j) for i in range(k) for j in range(k, n)])
    return g


def artemis_candidate(n: int, rng: random.Random) -> Graph:
    """Bipartite graphs and cographs are Artemis; dense or sparse G(n,p) sometimes is."""
    r = rng.random()
    if r < 0.25:
        half = rng.randint(1, n - 1)
        return Graph.from_edges(n, [(u, v) for u in range(half) for v in range(half, n)
                                    if rng.random() < 0.4])
    if r < 0.45:
        return cograph(n, rng)
    return gnp(n, rng.choice([0.15, 0.25, 0.4, 0.6, 0.75]), rng)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
