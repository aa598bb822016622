import pytest

from perfgraph import named
from perfgraph.canon import is_isomorphic
from perfgraph.graph import Graph, popcount
from perfgraph.oracles import (chromatic_number_bf, clique_number_bf, enumerate_nonisomorphic,
                               is_berge_bf, is_perfect_bf, partitionable_check)
from perfgraph.structure import (ContractionTrace, clique_join, contract_even_pair, enemy_status,
                                 nontrivial_enemy_pairs, rr_classify, rr_instances)


def test_rr_odd_odd_triangle():
    g = named.complete(3)  # x=0, y=1, t=2
    out = rr_classify(g, [2], [0, 1])
    assert out.tag == "odd-odd" and out.certificate["t_edges"] == 1


def test_rr_leap():
    x, x1, y1, y, u, v = range(6)
    g = Graph.from_edges(6, [(x, x1), (x1, y1), (y1, y), (u, x), (u, x1), (u, y),
                             (v, x), (v, y1), (v, y)])
    assert is_berge_bf(g)
    out = rr_classify(g, [u, v], [x, x1, y1, y])
    assert out.tag == "leap"
    assert out.certificate["N(u)"] == [x, x1, y] and out.certificate["N(v)"] == [x, y1, y]


def test_rr_violation_exists_off_berge():
    found = None
    for n in range(4, 7):
        for g in enumerate_nonisomorphic(n):
            if is_berge_bf(g):
                continue
            for t, p in rr_instances(g):
                if rr_classify(g, t, p).tag == "violation":
                    found = (g, t, p)
                    break
            if found:
                break
        if found:
            break
    assert found is not None


def test_rr_preconditions():
    g = named.cycle(6)
    with pytest.raises(ValueError):
        rr_classify(g, [0], [0, 1])  # T meets P
    with pytest.raises(ValueError):
        rr_classify(g, [0], [2, 3])  # endpoints not T-complete
    with pytest.raises(ValueError):
        rr_classify(g, [0, 1], [3, 4])  # G[T] is an edge, not anticonnected


def test_contract_examples():
    p4 = named.path(4)
    h, step = contract_even_pair(p4, 0, 3)
    assert is_isomorphic(h, named.complete(3))
    assert chromatic_number_bf(p4) == 2 and chromatic_number_bf(h) == 3
    c6 = named.cycle(6)
    h, _ = contract_even_pair(c6, 0, 2)
    assert chromatic_number_bf(h) == 2
    h, _ = contract_even_pair(Graph(2), 0, 1)
    assert h.n == 1
    with pytest.raises(ValueError):
        contract_even_pair(c6, 0, 1)


def test_trace_representatives():
    g = named.cycle(6)
    trace = ContractionTrace(6)
    h, s = contract_even_pair(g, 1, 3)
    trace.steps.append(s)
    h, s = contract_even_pair(h, 0, 3)
    trace.steps.append(s)
    rep = trace.representative()
    assert len(rep) == 6 and all(0 <= r < h.n for r in rep)
    assert rep[1] == rep[3]


def test_enemy_examples():
    k5 = named.complete(5)
    assert enemy_status(k5, [0, 1], [2, 3]) == "enemy"
    ep = named.even_prism9()
    assert enemy_status(ep, [0, 1, 2], [3, 4, 5]) == "friend"
    c6b = named.prism(1, 1, 1)
    assert enemy_status(c6b, [0, 1, 2], [3, 4, 5]) == "enemy"
    assert enemy_status(k5, [0, 1], [1, 2]) != "enemy"
    with pytest.raises(ValueError):
        enemy_status(named.cycle(5), [0, 2], [1])


def test_clique_join_examples():
    c6b = named.prism(1, 1, 1)
    joined = clique_join(c6b, [0, 1, 2], [3, 4, 5])
    assert is_perfect_bf(joined)
    k5 = named.complete(5)
    assert clique_join(k5, [0, 1], [2, 3]) == k5
    k2k2 = named.complete(2).disjoint_union(named.complete(2))
    assert is_isomorphic(clique_join(k2k2, [0, 1], [2, 3]), named.complete(4))
    with pytest.raises(ValueError):
        clique_join(named.even_prism9(), [0, 1, 2], [3, 4, 5])


def _web(n, k):
    return Graph.from_edges(n, [(i, (i + d) % n) for i in range(n) for d in range(1, k + 1)])


@pytest.mark.parametrize("g", [named.cycle(5), named.cycle(7), named.cycle(9), named.antihole(7),
                               named.antihole(9), _web(10, 2)],
                         ids=["C5", "C7", "C9", "co-C7", "co-C9", "web10"])
def test_nontrivial_enemies_in_partitionable_graphs(g):
    assert partitionable_check(g) is not None
    omega = clique_number_bf(g)
    for a, b in nontrivial_enemy_pairs(g):
        assert popcount(a) + popcount(b) != omega
