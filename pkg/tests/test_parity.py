import random
from itertools import combinations

import pytest
from hypothesis import given

from gen import graphs
from perfgraph import named
from perfgraph.graph import Graph, is_induced_path, is_simple_path
from perfgraph.linegraph import line_graph
from perfgraph.oracles import induced_paths, is_even_pair_bf
from perfgraph.parity import (even_pair_in_line_graph, find_two_pair, is_two_pair,
                              min_weight_perfect_matching, shortest_even_path)


def test_matching_examples():
    assert min_weight_perfect_matching(named.cycle(4)).weight == 2
    assert min_weight_perfect_matching(named.path(3)) is None
    k4 = named.complete(4)
    w = {(0, 1): 1, (2, 3): 1, (0, 2): 5, (0, 3): 5, (1, 2): 5, (1, 3): 5}
    m = min_weight_perfect_matching(k4, w)
    assert m.weight == 2 and m.pairs == ((0, 1), (2, 3))
    assert min_weight_perfect_matching(named.path(4).disjoint_union(Graph(2))) is None


def _brute_matching(g, w):
    best = None

    def rec(left, acc):
        nonlocal best
        if not left:
            best = acc if best is None else min(best, acc)
            return
        u = left[0]
        for v in left[1:]:
            if g.has_edge(u, v):
                rec([x for x in left if x not in (u, v)], acc + w[(min(u, v), max(u, v))])

    rec(list(range(g.n)), 0)
    return best


@given(graphs(min_n=2, max_n=8))
def test_matching_against_enumeration(g):
    w = {e: (e[0] * 7 + e[1] * 3) % 5 for e in g.edges()}
    m = min_weight_perfect_matching(g, w)
    ref = _brute_matching(g, w) if g.n % 2 == 0 else None
    assert (m.weight if m else None) == ref


def brute_even_path(g, a, b, forbidden):
    """Shortest even simple path by exhaustive search."""
    bad = set(forbidden)
    best = None

    def rec(p, seen):
        nonlocal best
        v = p[-1]
        if v == b:
            if (len(p) - 1) % 2 == 0 and (best is None or len(p) < len(best)):
                best = list(p)
            return
        for u in g.neighbors(v):
            if u not in seen and u not in bad:
                rec(p + [u], seen | {u})

    rec([a], {a})
    return best


def test_even_path_examples():
    assert len(shortest_even_path(named.path(3), 0, 2)) == 3
    assert shortest_even_path(named.cycle(6), 0, 3) is None
    p = shortest_even_path(named.complete(4), 0, 1)
    assert len(p) == 3 and is_simple_path(named.complete(4), p)


@given(graphs(min_n=2, max_n=9))
def test_even_path_against_brute_force(g):
    rng = random.Random(g.m * 31 + g.n)
    for a, b in combinations(range(g.n), 2):
        forbidden = [v for v in range(g.n) if v not in (a, b) and rng.random() < 0.2]
        p = shortest_even_path(g, a, b, forbidden)
        ref = brute_even_path(g, a, b, forbidden)
        if ref is None:
            assert p is None
        else:
            assert p is not None and len(p) == len(ref)
            assert p[0] == a and p[-1] == b and is_simple_path(g, p)
            assert not set(p) & set(forbidden)


def test_even_pair_in_line_graph_examples():
    c6 = named.cycle(6)
    p = even_pair_in_line_graph(c6, 0, 3)
    assert p is not None and (len(p) - 1) % 2 == 1 and is_induced_path(c6, p)
    assert even_pair_in_line_graph(c6, 0, 2) is None
    lk4 = line_graph(named.complete(4))[0]
    for a, b in combinations(range(6), 2):
        if not lk4.has_edge(a, b):
            # opposite edges of K4: every induced path has length 2
            assert even_pair_in_line_graph(lk4, a, b) is None
            assert is_even_pair_bf(lk4, a, b)
    with pytest.raises(ValueError):
        even_pair_in_line_graph(named.claw().add_edges([]), 1, 2)


def test_two_pair_examples():
    c4 = named.cycle(4)
    assert is_two_pair(c4, 0, 2) and find_two_pair(c4) == (0, 2)
    assert find_two_pair(named.cycle(5)) is None
    assert find_two_pair(named.cycle(6)) is None


@given(graphs(min_n=2, max_n=8))
def test_two_pair_against_paths(g):
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        lengths = {len(p) - 1 for p in induced_paths(g, x, y)}
        assert is_two_pair(g, x, y) == (lengths == {2} or not lengths)
    pair = find_two_pair(g)
    if pair is not None:
        assert is_even_pair_bf(g, *pair)
