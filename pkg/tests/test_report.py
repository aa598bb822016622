import random

import networkx as nx

from perfgraph.recognizers import census
from perfgraph.report import census_figure, complexity_smoke, random_bipartite, smoke_figure


def test_random_bipartite():
    g = random_bipartite(30, 0.3, random.Random(0))
    assert g.n == 30 and nx.is_bipartite(nx.Graph(g.edges()))


def test_smoke_rows():
    rows = complexity_smoke((20, 40), repeats=1)
    assert [r["n"] for r in rows] == [20, 40]
    assert all(r["certified"] for r in rows)
    assert rows[0]["growth"] == 1.0


def test_figures(tmp_path):
    census_figure(census(4), tmp_path / "c.png")
    smoke_figure(complexity_smoke((20, 40), repeats=1), tmp_path / "s.png")
    assert (tmp_path / "c.png").read_bytes()[:4] == b"\x89PNG"
    assert (tmp_path / "s.png").read_bytes()[:4] == b"\x89PNG"
