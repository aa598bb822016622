"""Coloring Artemis graphs by repeatedly contracting special even pairs.

The pipeline: grow a maximal interesting set T, look for an outgoing path
of its common neighbourhood C(T), and either recurse into G[C(T)] or read a
special pair off a shortest outgoing path.  Contract, repeat until a clique
is left, then push colors back and rebuild a maximum clique.

Nothing here checks that the input is Artemis.  On other graphs the result
is still a proper coloring, and ``optimal_certified`` tells whether it is
provably optimal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, bits, component_mask, lowest, path_within, popcount, to_mask
from .oracles import default_guard, is_even_pair_bf
from .structure import ContractionTrace, contract_even_pair


@dataclass(frozen=True)
class InterestingSetResult:
    variant: str  # "interesting-set", "special-even-pair" or "clique"
    t: int = 0
    pair: tuple[int, int] | None = None

    @property
    def members(self) -> list[int]:
        return list(bits(self.t))


def common_neighbours(g: Graph, t: int) -> int:
    return g.common(t) & ~t


def find_interesting_set(g: Graph) -> InterestingSetResult:
    if g.n == 0:
        return InterestingSetResult("clique")
    comp = component_mask(g, 0, g.full)
    if comp != g.full:
        other = lowest(g.full & ~comp)
        return InterestingSetResult("special-even-pair", pair=(0, other))
    u = next((v for v in range(g.n) if popcount(g.adj[v]) < g.n - 1), None)
    if u is None:
        return InterestingSetResult("clique")
    marked = g.adj[u] | 1 << u
    t = next(v for v in bits(g.adj[u]) if g.adj[v] & ~marked)

    # marks: T, C(T) (the common neighbourhood), "clique", or unmarked
    tset = 1 << t
    ct = g.adj[t]
    clique_marked = 0
    unmarked_once = 0
    todo = g.full & ~tset & ~ct
    while todo:
        v = lowest(todo)
        todo &= ~(1 << v)
        if g.is_clique(g.adj[v] & ct):
            clique_marked |= 1 << v
            continue
        tset |= 1 << v
        dropped = ct & ~g.adj[v]
        ct &= g.adj[v]
        if dropped & unmarked_once:
            raise AssertionError("a vertex lost its C(T) mark twice")
        unmarked_once |= dropped
        todo |= dropped
    return InterestingSetResult("interesting-set", t=tset)


def has_outgoing_path(g: Graph, t: int) -> bool:
    ct = common_neighbours(g, t)
    outside = g.full & ~t & ~ct
    seen = 0
    for u in bits(outside):
        if seen >> u & 1:
            continue
        comp = component_mask(g, u, outside)
        seen |= comp
        reach = 0
        for v in bits(comp):
            reach |= g.adj[v]
        if not g.is_clique(reach & ct):
            return True
    return False


def shortest_outgoing_path(g: Graph, t: int) -> list[int]:
    """Minimum outgoing path, endpoints in C(T) included.

    Ties go to the lexicographically least (start, end) pair.
    """
    ct = common_neighbours(g, t)
    best = None
    for u in bits(ct):
        allowed = g.full & ~t & ~(g.adj[u] & ct)
        layers = [1 << u]
        seen = 1 << u
        hit = 0
        while layers[-1] and not hit:
            nxt = 0
            for v in bits(layers[-1]):
                nxt |= g.adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            layers.append(nxt)
            hit = nxt & ct
        if not hit:
            continue
        v = lowest(hit)
        # interior must avoid C(T), which the layer-by-layer stop guarantees
        p = path_within(g, u, v, seen & ~ct)
        key = (len(p), u, v)
        if best is None or key < best[0]:
            best = (key, p)
    if best is None:
        raise ValueError("no outgoing path")
    return best[1]


def special_even_pair_from_z(g: Graph, t: int, z: list[int], robust: bool = True) -> tuple[int, int]:
    """Pick a maximal a in A and a maximal b in B.

    ``z`` is a shortest outgoing path with its two C(T) endpoints; A is the
    part of C(T) whose only neighbour on the interior is its first vertex,
    B the same for the last vertex.
    """
    ct = common_neighbours(g, t)
    inner = z[1:-1]
    zmask = to_mask(inner)
    z1, zk = 1 << inner[0], 1 << inner[-1]
    a_set = to_mask(v for v in bits(ct) if g.adj[v] & zmask == z1)
    b_set = to_mask(v for v in bits(ct) if g.adj[v] & zmask == zk)
    if not a_set or not b_set:
        if robust:
            return tuple(sorted((z[0], z[-1])))
        raise ValueError("empty A or B: input is not Artemis")

    def maximal(x: int, own: int, target: int) -> bool:
        allowed = g.full & ~t & ~(g.adj[x] & ~own)
        return not component_mask(g, x, allowed) & target & ~(1 << x)

    a = next((x for x in bits(a_set) if maximal(x, a_set, b_set)), None)
    b = next((y for y in bits(b_set) if maximal(y, b_set, a_set)), None)
    if a is None or b is None:
        if not robust:
            raise ValueError("no maximal element: input is not Artemis")
        a = lowest(a_set) if a is None else a
        b = lowest(b_set) if b is None else b
    return (a, b) if a < b else (b, a)


def special_even_pair(g: Graph, robust: bool = True) -> tuple[int, int] | None:
    """A special even pair of ``g``, or None when ``g`` is a clique."""
    ids = list(range(g.n))
    h = g
    while True:
        res = find_interesting_set(h)
        if res.variant == "clique":
            return None
        if res.variant == "special-even-pair":
            x, y = res.pair
            return tuple(sorted((ids[x], ids[y])))
        t = res.t
        if has_outgoing_path(h, t):
            z = shortest_outgoing_path(h, t)
            x, y = special_even_pair_from_z(h, t, z, robust)
            return tuple(sorted((ids[x], ids[y])))
        keep = sorted(bits(common_neighbours(h, t)))
        ids = [ids[v] for v in keep]
        h = h.induced(keep)


@dataclass
class ColorResult:
    colors: list[int]
    clique: list[int]
    optimal_certified: bool
    trace: ContractionTrace
    notes: list[str] = field(default_factory=list)

    @property
    def palette(self) -> int:
        return len(set(self.colors))

    def to_dict(self) -> dict:
        return {"colors": self.colors, "clique": self.clique,
                "certified": self.optimal_certified, "trace": self.trace.to_list(),
                "notes": self.notes}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _proper(g: Graph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


def artemis_color(g: Graph, verify_pairs: bool = True, guard: int | None = None) -> ColorResult:
    """Color by contracting special even pairs until a clique remains.

    With ``verify_pairs`` every contracted pair is checked to be even by
    exhaustive search, as long as the current graph is within ``guard``.
    Certification itself only needs the final palette to match the
    recovered clique.
    """
    return color_by_contraction(g, special_even_pair, verify_pairs, guard)


def color_by_contraction(g: Graph, choose, verify_pairs: bool = True,
                         guard: int | None = None) -> ColorResult:
    """Contract the pairs picked by ``choose`` until it returns None."""
    cap = default_guard(12) if guard is None else guard
    trace = ContractionTrace(g.n)
    notes = []
    graphs = [g]
    h = g
    while True:
        pair = choose(h)
        if pair is None:
            break
        x, y = pair
        if h.has_edge(x, y):
            notes.append(f"step {len(trace.steps)}: adjacent pair {x},{y}; stopped")
            break
        if verify_pairs and h.n <= cap and not is_even_pair_bf(h, x, y, guard=cap):
            notes.append(f"step {len(trace.steps)}: {x},{y} is not an even pair")
        h, step = contract_even_pair(h, x, y)
        trace.steps.append(step)
        graphs.append(h)

    if h.is_clique(h.full):
        colors = trace.lift(list(range(h.n)))
        marked = h.full
    else:
        # stopped before reaching a clique: finish greedily, no certificate
        notes.append("no contractible pair left before reaching a clique")
        colors = trace.lift(_greedy(h))
        marked = 1 if h.n else 0

    for step, before in zip(reversed(trace.steps), reversed(graphs[:-1])):
        marked = _decontract(before, step, marked)

    clique = sorted(bits(marked))
    certified = (_proper(g, colors) and g.is_clique(marked)
                 and len(set(colors)) == len(clique) and not notes)
    return ColorResult(colors, clique, certified, trace, notes)


def _decontract(before: Graph, step, marked: int) -> int:
    """Pull the marked set back through one contraction."""
    drop = max(step.x, step.y)
    back = 0
    for v in bits(marked):
        if v == step.rep:
            continue
        back |= 1 << (v + 1 if v >= drop else v)
    if not marked >> step.rep & 1:
        return back
    for cand in (step.x, step.y):
        if before.adj[cand] & back == back:
            return back | 1 << cand
    return back | 1 << step.rep


def _greedy(g: Graph) -> list[int]:
    colors = [-1] * g.n
    for v in range(g.n):
        used = {colors[u] for u in bits(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


__all__ = ["InterestingSetResult", "ColorResult", "find_interesting_set", "has_outgoing_path",
           "shortest_outgoing_path", "special_even_pair_from_z", "special_even_pair",
           "artemis_color", "color_by_contraction", "common_neighbours"]
