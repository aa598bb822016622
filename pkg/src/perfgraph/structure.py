"""Roussel-Rubio outcome classifier, even-pair contraction and enemy cliques."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph, bits, contract, is_connected, is_induced_path, to_mask
from .oracles import GuardExceeded, induced_paths


# -- Roussel-Rubio -----------------------------------------------------------------

RR_TAGS = ("even-even", "odd-odd", "leap", "hop", "violation")


@dataclass(frozen=True)
class RROutcome:
    tag: str
    certificate: dict = field(default_factory=dict, compare=False)


def t_complete(g: Graph, t: int) -> int:
    return g.common(t) if t else g.full


def is_anticonnected(g: Graph, t: int) -> bool:
    return bool(t) and is_connected(g.complement(), t)


def count_t_edges(g: Graph, t: int, p: list[int]) -> int:
    comp = t_complete(g, t)
    return sum(1 for u, v in zip(p, p[1:]) if comp >> u & 1 and comp >> v & 1)


def rr_classify(g: Graph, t: Iterable[int] | int, p: list[int], check_anticonnected: bool = True) -> RROutcome:
    """First holding outcome among even-even, odd-odd, leap, hop; else violation.

    ``check_anticonnected=False`` skips the G[T] test, for the Meyniel variant
    where T is arbitrary.
    """
    tm = t if isinstance(t, int) else to_mask(t)
    if not tm:
        raise ValueError("T must be nonempty")
    if check_anticonnected and not is_anticonnected(g, tm):
        raise ValueError("G[T] must be anticonnected")
    if tm & to_mask(p):
        raise ValueError("T must be disjoint from P")
    if not is_induced_path(g, p):
        raise ValueError("P must be an induced path")
    comp = t_complete(g, tm)
    if not (comp >> p[0] & 1 and comp >> p[-1] & 1):
        raise ValueError("endpoints of P must be T-complete")
    length = len(p) - 1
    k = count_t_edges(g, tm, p)
    if length % 2 == 0 and k % 2 == 0:
        return RROutcome("even-even", {"t_edges": k})
    if length % 2 == 1 and k % 2 == 1:
        return RROutcome("odd-odd", {"t_edges": k})
    pm = to_mask(p)
    if length % 2 == 1 and length >= 3:
        x, x1, y1, y = p[0], p[1], p[-2], p[-1]
        want_u = to_mask((x, x1, y))
        want_v = to_mask((x, y1, y))
        us = [u for u in bits(tm) if g.adj[u] & pm == want_u]
        vs = [v for v in bits(tm) if g.adj[v] & pm == want_v]
        for u in us:
            for v in vs:
                if u != v and not g.has_edge(u, v):
                    return RROutcome("leap", {"u": u, "v": v,
                                              "N(u)": sorted(bits(want_u)), "N(v)": sorted(bits(want_v))})
    if length == 3:
        gc = g.complement()
        for q in induced_paths(gc, p[1], p[2], tm):
            if (len(q) - 1) % 2 == 1:
                return RROutcome("hop", {"antipath": q})
    return RROutcome("violation", {"t_edges": k})


def anticonnected_subsets(g: Graph, pool: int | None = None) -> Iterator[int]:
    gc = g.complement()
    pool = g.full if pool is None else pool
    verts = list(bits(pool))
    for r in range(1, len(verts) + 1):
        for combo in combinations(verts, r):
            m = to_mask(combo)
            if is_connected(gc, m):
                yield m


def rr_instances(g: Graph, anticonnected: bool = True, min_length: int = 1) -> Iterator[tuple[int, list[int]]]:
    """All (T, P) meeting the lemma's hypotheses, P of length >= ``min_length``."""
    subsets = anticonnected_subsets(g) if anticonnected else (
        m for m in range(1, 1 << g.n))
    for tm in subsets:
        comp = g.common(tm)
        ends = list(bits(comp))
        allowed = g.full & ~tm
        for x, y in combinations(ends, 2):
            for p in induced_paths(g, x, y, allowed):
                if len(p) - 1 >= min_length:
                    yield tm, p


# -- contraction ---------------------------------------------------------------

@dataclass(frozen=True)
class ContractionStep:
    x: int
    y: int
    rep: int
    n_before: int

    def forward(self, v: int) -> int:
        drop = max(self.x, self.y)
        if v == drop:
            return self.rep
        return v - 1 if v > drop else v


@dataclass
class ContractionTrace:
    n: int
    steps: list[ContractionStep] = field(default_factory=list)

    def representative(self) -> list[int]:
        """Original vertex -> vertex id in the final graph."""
        rep = list(range(self.n))
        for s in self.steps:
            rep = [s.forward(v) for v in rep]
        return rep

    def lift(self, final_colors: list[int]) -> list[int]:
        return [final_colors[r] for r in self.representative()]

    def to_list(self) -> list[dict]:
        return [{"x": s.x, "y": s.y, "rep": s.rep} for s in self.steps]


def contract_even_pair(g: Graph, x: int, y: int) -> tuple[Graph, ContractionStep]:
    """G/xy: the merged vertex keeps id min(x, y).  Parity is not checked here."""
    if x == y or g.has_edge(x, y):
        raise ValueError("cannot contract an adjacent pair")
    return contract(g, x, y), ContractionStep(x, y, min(x, y), g.n)


# -- enemy cliques --------------------------------------------------------------

def exiting_path_lengths(g: Graph, k1: int, k2: int, induced: bool = True) -> set[int]:
    lengths = set()
    if k1 & k2:
        lengths.add(0)
    inner = g.full & ~(k1 | k2)
    for x in bits(k1 & ~k2):
        for y in bits(k2 & ~k1):
            if induced:
                for p in induced_paths(g, x, y, inner):
                    lengths.add(len(p) - 1)
            else:
                lengths |= _simple_path_lengths(g, x, y, inner)
    return lengths


def _simple_path_lengths(g: Graph, x: int, y: int, inner: int) -> set[int]:
    out = set()

    def rec(v, seen, depth):
        if g.adj[v] >> y & 1:
            out.add(depth + 1)
        for w in bits(g.adj[v] & inner & ~seen):
            rec(w, seen | 1 << w, depth + 1)

    rec(x, 1 << x, 0)
    return out


def enemy_status(g: Graph, k1: Iterable[int] | int, k2: Iterable[int] | int,
                 induced: bool = True, guard: int = 14) -> str:
    """'enemy' if every exiting path is odd, 'friend' if every one is even, else 'mixed'.

    With no exiting path at all the pair counts as enemy.
    """
    m1 = k1 if isinstance(k1, int) else to_mask(k1)
    m2 = k2 if isinstance(k2, int) else to_mask(k2)
    if g.n > guard:
        raise GuardExceeded(f"n={g.n} exceeds guard {guard}")
    if not (g.is_clique(m1) and g.is_clique(m2)) or not m1 or not m2:
        raise ValueError("inputs must be nonempty cliques")
    lengths = exiting_path_lengths(g, m1, m2, induced)
    if all(x % 2 for x in lengths):
        return "enemy"
    if all(x % 2 == 0 for x in lengths):
        return "friend"
    return "mixed"


def trivially_enemy(g: Graph, k1: int, k2: int) -> bool:
    return not k1 & k2 and g.is_clique(k1 | k2)


def clique_join(g: Graph, k1: Iterable[int] | int, k2: Iterable[int] | int) -> Graph:
    m1 = k1 if isinstance(k1, int) else to_mask(k1)
    m2 = k2 if isinstance(k2, int) else to_mask(k2)
    if enemy_status(g, m1, m2, guard=max(14, g.n)) != "enemy":
        raise ValueError("clique join needs enemy cliques")
    new = [(u, v) for u in bits(m1) for v in bits(m2) if u != v and not g.has_edge(u, v)]
    return g.add_edges(new) if new else g


def all_cliques(g: Graph) -> list[int]:
    out = []

    def rec(cur, cand):
        out.append(cur)
        for v in bits(cand):
            rec(cur | 1 << v, cand & g.adj[v] & ~((2 << v) - 1))

    rec(0, g.full)
    return [c for c in out if c]


def nontrivial_enemy_pairs(g: Graph) -> list[tuple[int, int]]:
    """Disjoint cliques that are enemy but not trivially so."""
    cl = all_cliques(g)
    out = []
    for i, a in enumerate(cl):
        for b in cl[i + 1:]:
            if a & b or trivially_enemy(g, a, b):
                continue
            if enemy_status(g, a, b, guard=g.n) == "enemy":
                out.append((a, b))
    return out
