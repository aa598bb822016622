import networkx as nx
import pytest
from hypothesis import given

from gen import graphs
from perfgraph import named
from perfgraph.canon import is_isomorphic
from perfgraph.graph import (Graph, components, enumerate_triangles, is_induced_path,
                             parse_edgelist, parse_graph6, serialize_edgelist, serialize_graph6,
                             shortest_path_avoiding, to_mask)


@pytest.mark.parametrize("text, n, edges", [
    ("@", 1, []),
    ("A_", 2, [(0, 1)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
])
def test_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n and g.edges() == edges
    assert serialize_graph6(g).decode() == text


def test_graph6_header_and_errors():
    assert parse_graph6(">>graph6<<Bg") == parse_graph6("Bg")
    with pytest.raises(ValueError):
        parse_graph6("B")  # body too short
    with pytest.raises(ValueError):
        parse_graph6("A`")  # padding bit set
    with pytest.raises(ValueError):
        parse_graph6("A ")


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert nx.to_graph6_bytes(h, header=False).strip() == serialize_graph6(g)
    assert parse_graph6(serialize_graph6(g)) == g


def test_graph6_long_header():
    g = named.cycle(70)
    assert parse_graph6(serialize_graph6(g)) == g


@given(graphs(max_n=10))
def test_edgelist_round_trip(g):
    assert parse_edgelist(serialize_edgelist(g)) == g


def test_edgelist_comments_and_order():
    g = parse_edgelist("# comment\n5\n0 1\n\n1 2  # trailing\n")
    assert g.n == 5 and g.m == 2
    with pytest.raises(ValueError):
        parse_edgelist("2\n0 3\n")


def test_complement_examples():
    assert is_isomorphic(named.cycle(5).complement(), named.cycle(5))
    assert named.complete(3).complement().m == 0
    assert is_isomorphic(named.bull().complement(), named.bull())


@given(graphs(max_n=10))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2


def test_shortest_path_examples():
    assert len(shortest_path_avoiding(named.cycle(5), 0, 1)) == 2
    assert len(shortest_path_avoiding(named.cycle(6), 0, 3)) == 4
    p = shortest_path_avoiding(named.cycle(5), 0, 2, [1])
    assert p == [0, 4, 3, 2]
    assert shortest_path_avoiding(named.path(3), 0, 2, [1]) is None
    with pytest.raises(ValueError):
        shortest_path_avoiding(named.cycle(5), 0, 7)


@given(graphs(min_n=2, max_n=9))
def test_shortest_path_is_bfs_and_induced(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    forbidden = [v for v in range(2, g.n) if v % 3 == 0]
    sub = h.subgraph(set(range(g.n)) - set(forbidden))
    p = shortest_path_avoiding(g, 0, 1, forbidden)
    if p is None:
        assert not nx.has_path(sub, 0, 1)
    else:
        assert len(p) - 1 == nx.shortest_path_length(sub, 0, 1)
        assert not set(p) & set(forbidden)
        assert is_induced_path(g, p)


def test_components_examples():
    k3k3 = named.complete(3).disjoint_union(named.complete(3))
    assert len(components(k3k3)) == 2
    c5 = named.cycle(5)
    assert len(components(c5)) == 1 and len(components(c5.complement())) == 1
    assert components(named.path(3), [0, 2]) == [[0], [2]]


@given(graphs(max_n=10))
def test_components_partition(g):
    within = [v for v in range(g.n) if v % 4 != 1]
    blocks = components(g, within)
    flat = sorted(v for b in blocks for v in b)
    assert flat == within
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            assert not any(g.has_edge(u, v) for u in a for v in b)


def test_triangle_examples():
    assert len(enumerate_triangles(named.complete(4))) == 4
    assert enumerate_triangles(named.cycle(5)) == []
    assert len(enumerate_triangles(named.prism(1, 1, 1))) == 2


@given(graphs(max_n=9))
def test_triangles_match_brute_force(g):
    from itertools import combinations
    expect = [t for t in combinations(range(g.n), 3) if g.is_clique(to_mask(t))]
    assert enumerate_triangles(g) == expect


def test_graph_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
