import random

import pytest

from perfgraph import named
from perfgraph.oracles import (GuardExceeded, class_membership_bf, enumerate_nonisomorphic,
                               is_perfect_bf)
from perfgraph.recognizers import (census, even_artemis_color_experimental, recognize,
                                   recognize_artemis, recognize_bipartisan,
                                   recognize_even_artemis, recognize_weakly_triangulated,
                                   two_pair_closure)
from perfgraph.witness import validate_witness

from gen import gnp, mixed

C6_BAR = named.cycle(6).complement()


def _check(verdict, g, member, kind=None):
    assert verdict.member is member
    if member is False:
        host = g.complement() if verdict.in_complement else g
        assert validate_witness(host, verdict.witness)
        if kind is not None:
            assert verdict.witness.kind == kind


def test_artemis_examples():
    _check(recognize_artemis(named.cycle(6)), named.cycle(6), True)
    _check(recognize_artemis(C6_BAR), C6_BAR, False, "prism")
    _check(recognize_artemis(named.cycle(5)), named.cycle(5), False, "odd-hole")


def test_even_artemis_examples():
    g = named.even_prism9()
    _check(recognize_even_artemis(g), g, True)
    assert not recognize_artemis(g).member
    _check(recognize_even_artemis(C6_BAR), C6_BAR, False, "odd-prism")
    _check(recognize_even_artemis(named.cycle(7)), named.cycle(7), False, "odd-hole")


def test_bipartisan_examples():
    dd = named.double_diamond()
    _check(recognize_bipartisan(dd), dd, False)
    lp = named.prism(2, 1, 1)
    assert lp.n == 7
    _check(recognize_bipartisan(lp), lp, False)
    _check(recognize_bipartisan(named.cycle(6)), named.cycle(6), True)
    assert class_membership_bf(named.cycle(6), "bipartisan")


def test_weakly_triangulated_examples():
    assert recognize_weakly_triangulated(named.cycle(4)).member
    _check(recognize_weakly_triangulated(named.cycle(5)), named.cycle(5), False)
    # C6 is a long hole of the complement, so the prism is not weakly triangulated
    assert not class_membership_bf(C6_BAR, "weakly-triangulated")
    _check(recognize_weakly_triangulated(C6_BAR), C6_BAR, False, "long-antihole")
    assert two_pair_closure(named.cycle(4)) and not two_pair_closure(C6_BAR)


def test_dispatch_and_unknown_class():
    assert recognize("artemis", named.cycle(6)).status == "yes"
    with pytest.raises(ValueError):
        recognize("chordal", named.cycle(6))


def test_undecided_above_guard():
    v = recognize_artemis(named.path(20))
    assert v.member is None and v.status == "undecided"
    assert recognize_artemis(named.path(20), guard=30).member is True


@pytest.mark.parametrize("cls", ["artemis", "even-artemis", "bipartisan", "weakly-triangulated"])
def test_agrees_with_oracle_on_small_census(cls):
    for n in range(1, 7):
        for g in enumerate_nonisomorphic(n):
            v = recognize(cls, g)
            _check(v, g, class_membership_bf(g, cls))


def test_random_artemis_agreement():
    rng = random.Random(11)
    for _ in range(300):
        g = mixed(rng, 9) if rng.random() < 0.5 else gnp(rng.randint(5, 9), rng.random(), rng)
        v = recognize_artemis(g)
        _check(v, g, class_membership_bf(g, "artemis"))


def test_inclusions_on_census():
    for n in range(1, 7):
        for g in enumerate_nonisomorphic(n):
            if class_membership_bf(g, "artemis"):
                assert recognize_even_artemis(g).member
                assert is_perfect_bf(g)


def test_census_examples():
    t = census(6, n_min=5)
    assert t.column(6)["berge"] == 148
    assert t.column(6)["meyniel"] == 130
    assert t.column(5)["weakly-triangulated"] == 33
    assert t.to_csv().splitlines()[0] == "class,5,6"


def test_census_rows_are_monotone():
    t = census(6)
    chain = ["berge", "quasi-parity", "strict-quasi-parity", "perfectly-contractile"]
    for n in t.orders:
        col = t.column(n)
        assert all(col[a] >= col[b] for a, b in zip(chain, chain[1:]))


def test_census_worker_pool_gives_same_totals():
    assert census(5, workers=2).counts == census(5).counts


def test_census_guard():
    with pytest.raises(GuardExceeded):
        census(8)


def test_even_artemis_coloring_experimental():
    for g in (named.even_prism9(), named.cycle(6), named.complete(3)):
        res = even_artemis_color_experimental(g)
        assert all(res.colors[u] != res.colors[v] for u, v in g.edges())
        assert res.optimal_certified == (res.palette == len(res.clique))
    with pytest.raises(GuardExceeded):
        even_artemis_color_experimental(named.path(20))
