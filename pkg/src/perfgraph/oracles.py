"""Exponential-time ground truth.

Everything here favours obviously-correct exhaustive search over speed.  The
fast algorithms elsewhere in the package are tested against these functions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, asdict
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .canon import canonical_form, canonical_graph, canonical_order
from .graph import Graph, bits, component_mask, contract, lowest, path_within, popcount, to_mask
from .witness import (LETTERS, LGS_PAIRS, Witness, cycle_order, edges_in, hole_witness, lgs_witness,
                      prism_witness, recognise_prism, recognise_pyramid, validate_witness)


class GuardExceeded(ValueError):
    """Raised when an exhaustive search is asked to run above its size cap."""


def default_guard(fallback: int) -> int:
    env = os.environ.get("PERFGRAPH_GUARD")
    return int(env) if env else fallback


def _check_guard(g: Graph, guard: int | None, fallback: int) -> None:
    cap = default_guard(fallback) if guard is None else guard
    if g.n > cap:
        raise GuardExceeded(f"n={g.n} exceeds oracle guard {cap}")


# -- templates (matched through canonical forms) -------------------------------

def _build(paths: list[list[int]], extra: list[tuple[int, int]]) -> Graph:
    n = 1 + max(v for p in paths for v in p)
    edges = list(extra)
    for p in paths:
        edges += list(zip(p, p[1:]))
    return Graph.from_edges(n, edges)


def _lgs_template(lengths: dict[str, int]):
    """Line graph of the K4 subdivision whose edge xy carries lengths[xy] root edges."""
    nxt = 0
    paths = {}
    for p in LGS_PAIRS:
        paths[p] = list(range(nxt, nxt + lengths[p]))
        nxt += lengths[p]
    corner = {}
    for p, path in paths.items():
        corner[p] = path[0]
        corner[p[::-1]] = path[-1]
    extra = []
    for x in LETTERS:
        t = [corner[x + y] for y in LETTERS if y != x]
        extra += list(combinations(t, 2))
    return _build(list(paths.values()), extra), {f"P_{p}": paths[p] for p in LGS_PAIRS}


def _qp_template(s: tuple[int, int, int, int]):
    nxt = 0
    runs = []
    for ln in s:
        runs.append(list(range(nxt, nxt + ln + 1)))
        nxt += ln + 1
    s1, s2, s3, s4 = runs
    a1, b1, c, c1, d, d1 = s1[-1], s2[-1], s3[0], s3[-1], s4[0], s4[-1]
    extra = [(a1, c), (a1, d), (c, d), (b1, c1), (b1, d1), (c1, d1)]
    return _build(runs, extra), {"S1": s1, "S2": s2, "S3": s3, "S4": s4}


@lru_cache(maxsize=None)
def _templates(kind: str, k: int) -> dict:
    """Canonical code -> (template graph, roles, template canonical order)."""
    from . import named
    cands = []
    if kind in ("lgs-ntk4", "lgsb-k4") and k >= 7:
        for vec in product(range(1, k - 4), repeat=6):
            if sum(vec) != k:
                continue
            lengths = dict(zip(LGS_PAIRS, vec))
            if kind == "lgsb-k4" and any(
                    (lengths[x + y] + lengths[y + z] + lengths[x + z]) % 2
                    for x, y, z in combinations(LETTERS, 3)):
                continue
            cands.append(_lgs_template(lengths))
    elif kind == "quasi-prism":
        for s in product(range(0, k), range(0, k), range(1, k), range(1, k)):
            if sum(s) + 4 == k:
                cands.append(_qp_template(s))
    elif kind == "double-diamond" and k == 8:
        cands.append((named.double_diamond(), {}))
    elif kind == "l-k33-minus-e" and k == 8:
        cands.append((named.l_k33_minus_e(), {}))
    elif kind == "claw" and k == 4:
        cands.append((named.claw(), {}))
    elif kind == "diamond" and k == 4:
        cands.append((named.diamond(), {}))
    out = {}
    for h, roles in cands:
        code, order = canonical_order(h)
        out.setdefault(code, (h, roles, order))
    return out


def _match_template(g: Graph, mask: int, kind: str) -> Witness | None:
    vs = list(bits(mask))
    temps = _templates(kind, len(vs))
    if not temps:
        return None
    h = g.induced(vs)
    code, order = canonical_order(h)
    hit = temps.get(code)
    if hit is None:
        return None
    _, roles, torder = hit
    to_host = {}
    for i, tv in enumerate(torder):
        to_host[tv] = vs[order[i]]
    mapped = {name: [to_host[v] for v in lst] for name, lst in roles.items()}
    if kind in ("lgs-ntk4", "lgsb-k4"):
        return lgs_witness(kind, {p: mapped[f"P_{p}"] for p in LGS_PAIRS})
    return Witness(kind, tuple(vs), mapped)


_MIN_SIZE = {"odd-hole": 5, "long-hole": 5, "hole": 4, "even-hole": 4, "long-antihole": 5,
             "odd-antihole": 5, "prism": 6, "long-prism": 7, "even-prism": 9, "odd-prism": 6,
             "pyramid": 6, "lgs-ntk4": 7, "lgsb-k4": 8, "double-diamond": 8,
             "l-k33-minus-e": 8, "claw": 4, "diamond": 4, "quasi-prism": 6}


def _recognise(g: Graph, gc: Graph | None, mask: int, kind: str) -> Witness | None:
    k = popcount(mask)
    if kind in ("odd-hole", "long-hole", "hole", "even-hole"):
        if kind == "odd-hole" and k % 2 == 0 or kind == "even-hole" and k % 2:
            return None
        if edges_in(g, mask) != k:
            return None
        cyc = cycle_order(g, mask)
        return hole_witness(kind, cyc) if cyc else None
    if kind in ("long-antihole", "odd-antihole"):
        if kind == "odd-antihole" and k % 2 == 0:
            return None
        cyc = cycle_order(gc, mask)
        return hole_witness(kind, cyc) if cyc else None
    if kind in ("prism", "long-prism", "even-prism", "odd-prism"):
        w = recognise_prism(g, mask)
        if w is None:
            return None
        w = w.with_kind(kind)
        return w if validate_witness(g, w) else None
    if kind == "pyramid":
        return recognise_pyramid(g, mask)
    return _match_template(g, mask, kind)


def iter_structures_bf(g: Graph, kind: str, guard: int | None = None,
                       within: int | None = None) -> Iterator[Witness]:
    """Every induced copy of ``kind``, by increasing size then lexicographically."""
    _check_guard(g, guard, 16)
    if kind not in _MIN_SIZE:
        raise ValueError(f"unknown structure kind {kind!r}")
    pool = list(bits(g.full if within is None else within))
    gc = g.complement() if kind.endswith("antihole") else None
    for k in range(_MIN_SIZE[kind], len(pool) + 1):
        for combo in combinations(pool, k):
            w = _recognise(g, gc, to_mask(combo), kind)
            if w is not None:
                yield w


def find_structure_bf(g: Graph, kind: str, guard: int | None = None) -> Witness | None:
    """Smallest induced copy of ``kind`` (lexicographically first among ties)."""
    return next(iter_structures_bf(g, kind, guard), None)


def min_structure_size_bf(g: Graph, kind: str, guard: int | None = None) -> int | None:
    w = find_structure_bf(g, kind, guard)
    return None if w is None else w.size


# -- induced paths and even pairs ---------------------------------------------

def induced_paths(g: Graph, x: int, y: int, allowed: int | None = None) -> Iterator[list[int]]:
    """All induced x-y paths whose interior lies in ``allowed``.

    DFS where ``blocked`` holds the closed neighbourhoods of every path vertex
    except the last one, so each extension keeps the path chordless.
    """
    allowed = g.full if allowed is None else allowed

    def rec(path, blocked):
        v = path[-1]
        cand = g.adj[v] & ~blocked
        if cand >> y & 1:
            yield path + [y]
            return
        nb = blocked | g.adj[v]
        if nb >> y & 1:
            return
        for w in bits(cand & allowed):
            yield from rec(path + [w], nb | 1 << w)

    if x == y:
        yield [x]
        return
    yield from rec([x], 1 << x)


def is_even_pair_bf(g: Graph, x: int, y: int, guard: int | None = None) -> bool:
    _check_guard(g, guard, 16)
    if x == y:
        raise ValueError("an even pair needs two distinct vertices")
    if g.has_edge(x, y):
        raise ValueError("adjacent vertices never form an even pair")
    return all(len(p) % 2 == 1 for p in induced_paths(g, x, y))


def even_pairs_bf(g: Graph) -> list[tuple[int, int]]:
    return [(x, y) for x, y in combinations(range(g.n), 2)
            if not g.has_edge(x, y) and all(len(p) % 2 == 1 for p in induced_paths(g, x, y))]


def has_even_pair(g: Graph) -> bool:
    for x, y in combinations(range(g.n), 2):
        if not g.has_edge(x, y) and all(len(p) % 2 == 1 for p in induced_paths(g, x, y)):
            return True
    return False


def is_two_pair_bf(g: Graph, x: int, y: int) -> bool:
    if x == y or g.has_edge(x, y):
        return False
    return all(len(p) == 3 for p in induced_paths(g, x, y))


def strict_quasi_prisms_bf(g: Graph, a: int, b: int, guard: int | None = 14) -> Iterator[Witness]:
    """Strict quasi-prisms whose tails start at ``a`` and ``b``.

    The endpoints of a quasi-prism are determined by its vertex set (degree-one
    tail ends, or the degree-two apex of a triangle), so one template match per
    vertex set is enough.
    """
    _check_guard(g, guard, 14)
    rest = [v for v in range(g.n) if v not in (a, b)]
    for k in range(4, len(rest) + 1):
        for combo in combinations(rest, k):
            mask = to_mask(combo) | 1 << a | 1 << b
            if edges_in(g, mask) != k + 4:
                continue
            w = _match_template(g, mask, "quasi-prism")
            if w is None:
                continue
            s1, s2 = w.roles["S1"], w.roles["S2"]
            if {s1[0], s2[0]} == {a, b} and (len(s1) > 1 or len(s2) > 1):
                yield w


def is_special_even_pair_bf(g: Graph, x: int, y: int) -> bool:
    if not is_even_pair_bf(g, x, y):
        return False
    return next(strict_quasi_prisms_bf(g, x, y), None) is None


# -- numbers -------------------------------------------------------------------

def clique_number_bf(g: Graph, guard: int | None = None, within: int | None = None) -> int:
    _check_guard(g, guard, 16)

    def rec(cand, size):
        if not cand:
            return size
        best = size
        while cand:
            if size + popcount(cand) <= best:
                break
            v = lowest(cand)
            best = max(best, rec(cand & g.adj[v], size + 1))
            cand &= ~(1 << v)
        return best

    return rec(g.full if within is None else within, 0)


def max_cliques_bf(g: Graph, within: int | None = None) -> list[int]:
    """Bron-Kerbosch with pivoting; masks of all maximal cliques."""
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

    bk(0, g.full if within is None else within, 0)
    return sorted(out)


def chromatic_number_bf(g: Graph, guard: int | None = None) -> int:
    _check_guard(g, guard, 16)
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    lo = clique_number_bf(g, guard=g.n)
    for k in range(lo, g.n + 1):
        if k_colorable(g, k, order) is not None:
            return k
    return g.n


def k_colorable(g: Graph, k: int, order: list[int] | None = None) -> list[int] | None:
    order = order or list(range(g.n))
    color = [-1] * g.n

    def rec(i, used):
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return list(color) if rec(0, 0) else None


def stability_number_bf(g: Graph, guard: int | None = None) -> int:
    return clique_number_bf(g.complement(), guard)


def _omega_table(g: Graph) -> list[int]:
    size = 1 << g.n
    om = [0] * size
    for s in range(1, size):
        v = lowest(s)
        rest = s & ~(1 << v)
        om[s] = max(om[rest], 1 + om[rest & g.adj[v]])
    return om


def _chi_table(g: Graph) -> list[int]:
    """chi of every induced subgraph via DP over stable sets holding the low vertex."""
    size = 1 << g.n
    chi = [0] * size
    for s in range(1, size):
        v = lowest(s)
        best = g.n
        # enumerate stable sets I of G[s] containing v
        stack = [(1 << v, s & ~g.adj[v] & ~(1 << v))]
        while stack:
            inc, cand = stack.pop()
            c = chi[s & ~inc]
            if c + 1 < best:
                best = c + 1
            while cand:
                u = lowest(cand)
                cand &= ~(1 << u)
                stack.append((inc | 1 << u, cand & ~g.adj[u]))
        chi[s] = best
    return chi


def is_perfect_bf(g: Graph, guard: int | None = None) -> bool:
    """chi equals omega on every induced subgraph."""
    _check_guard(g, guard, 10)
    return _chi_table(g) == _omega_table(g)


# -- class membership --------------------------------------------------------------

CLASSES = ("berge", "perfect", "meyniel", "weakly-triangulated", "quasi-parity",
           "strict-quasi-parity", "perfectly-contractile", "artemis", "even-artemis",
           "bipartisan")


def _has_cycle_subset(g: Graph, min_size: int, odd_only: bool) -> bool:
    for mask in range(1, 1 << g.n):
        k = popcount(mask)
        if k < min_size or odd_only and k % 2 == 0:
            continue
        if edges_in(g, mask) == k and cycle_order(g, mask):
            return True
    return False


def has_odd_hole_bf(g: Graph) -> bool:
    return _has_cycle_subset(g, 5, True)


def has_long_hole_bf(g: Graph) -> bool:
    return _has_cycle_subset(g, 5, False)


def is_berge_bf(g: Graph) -> bool:
    return not has_odd_hole_bf(g) and not has_odd_hole_bf(g.complement())


def _hamiltonian(g: Graph, mask: int) -> bool:
    k = popcount(mask)
    start = lowest(mask)

    def rec(v, seen, depth):
        if depth == k:
            return g.adj[v] >> start & 1
        for u in bits(g.adj[v] & mask & ~seen):
            if rec(u, seen | 1 << u, depth + 1):
                return True
        return False

    return bool(rec(start, 1 << start, 1))


def is_meyniel_bf(g: Graph) -> bool:
    """No odd cycle of length >= 5 with fewer than two chords.

    Such a cycle exists iff some vertex set of odd size k >= 5 induces at
    most k + 1 edges and has a Hamiltonian cycle.
    """
    for mask in range(1, 1 << g.n):
        k = popcount(mask)
        if k < 5 or k % 2 == 0:
            continue
        if edges_in(g, mask) <= k + 1 and all(popcount(g.adj[v] & mask) >= 2 for v in bits(mask)):
            if _hamiltonian(g, mask):
                return False
    return True


def is_weakly_triangulated_bf(g: Graph) -> bool:
    return not has_long_hole_bf(g) and not has_long_hole_bf(g.complement())


def _hereditary(local, memo):
    def check(g: Graph) -> bool:
        key = canonical_form(g)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ok = local(g) and all(check(g.induced([u for u in range(g.n) if u != v]))
                              for v in range(g.n))
        memo[key] = ok
        return ok
    return check


def _qp_local(g: Graph) -> bool:
    return g.n < 2 or has_even_pair(g) or has_even_pair(g.complement())


def _sqp_local(g: Graph) -> bool:
    return g.is_clique(g.full) or has_even_pair(g)


_contractile_memo: dict = {}


def is_contractile_bf(g: Graph) -> bool:
    """Some sequence of even-pair contractions reaches a clique."""
    if g.is_clique(g.full):
        return True
    key = canonical_form(g)
    hit = _contractile_memo.get(key)
    if hit is not None:
        return hit
    ok = any(is_contractile_bf(contract(g, x, y)) for x, y in even_pairs_bf(g))
    _contractile_memo[key] = ok
    return ok


_is_qp = _hereditary(_qp_local, {})
_is_sqp = _hereditary(_sqp_local, {})
_is_pc = _hereditary(is_contractile_bf, {})


def is_artemis_bf(g: Graph) -> bool:
    return (not has_odd_hole_bf(g) and not has_long_hole_bf(g.complement())
            and find_structure_bf(g, "prism", guard=g.n) is None)


def is_even_artemis_bf(g: Graph) -> bool:
    return (not has_odd_hole_bf(g) and not has_long_hole_bf(g.complement())
            and find_structure_bf(g, "odd-prism", guard=g.n) is None)


def is_bipartisan_bf(g: Graph) -> bool:
    if not is_berge_bf(g):
        return False
    gc = g.complement()
    for h, kind in ((g, "long-prism"), (gc, "long-prism"), (g, "double-diamond"),
                    (g, "l-k33-minus-e")):
        if find_structure_bf(h, kind, guard=g.n) is not None:
            return False
    return True


_MEMBERSHIP = {
    "berge": is_berge_bf,
    "perfect": lambda g: is_perfect_bf(g, guard=g.n),
    "meyniel": is_meyniel_bf,
    "weakly-triangulated": is_weakly_triangulated_bf,
    "quasi-parity": lambda g: _is_qp(g),
    "strict-quasi-parity": lambda g: _is_sqp(g),
    "perfectly-contractile": lambda g: _is_pc(g),
    "artemis": is_artemis_bf,
    "even-artemis": is_even_artemis_bf,
    "bipartisan": is_bipartisan_bf,
}


def class_membership_bf(g: Graph, cls: str, guard: int | None = None) -> bool:
    _check_guard(g, guard, 10)
    try:
        fn = _MEMBERSHIP[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(CLASSES)}") from None
    return fn(g)


@dataclass(frozen=True)
class ClassReport:
    berge: bool
    perfect: bool
    meyniel: bool
    weakly_triangulated: bool
    quasi_parity: bool
    strict_quasi_parity: bool
    perfectly_contractile: bool
    artemis: bool
    even_artemis: bool
    bipartisan: bool
    chi: int
    omega: int
    alpha: int

    def to_dict(self) -> dict:
        return asdict(self)


def class_report(g: Graph, guard: int | None = None) -> ClassReport:
    _check_guard(g, guard, 10)
    flags = {c.replace("-", "_"): class_membership_bf(g, c, guard=g.n) for c in CLASSES}
    return ClassReport(**flags, chi=chromatic_number_bf(g, guard=g.n),
                       omega=clique_number_bf(g, guard=g.n),
                       alpha=stability_number_bf(g, guard=g.n))


# -- enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _graphs_of_order(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen = {}
    for h in _graphs_of_order(n - 1):
        base = list(h.adj)
        for nb in range(1 << (n - 1)):
            adj = [row | (1 << (n - 1) if nb >> v & 1 else 0) for v, row in enumerate(base)]
            adj.append(nb)
            g = Graph(n, adj)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(canonical_graph(seen[k]) for k in sorted(seen))


def enumerate_nonisomorphic(n: int, guard: int = 7) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n < 0:
        raise ValueError("negative order")
    if n > guard:
        raise GuardExceeded(f"enumeration of order {n} exceeds guard {guard}")
    yield from _graphs_of_order(n)


# -- partitionable graphs ------------------------------------------------------

def _all_max_sets(g: Graph, size: int, clique: bool) -> list[int]:
    out = []
    for combo in combinations(range(g.n), size):
        m = to_mask(combo)
        if (g.is_clique(m) if clique else g.is_stable(m)):
            out.append(m)
    return out


def _exact_covers(universe: int, blocks: list[int], limit: int) -> int:
    """Count (up to ``limit``) partitions of ``universe`` into the given blocks."""
    count = 0

    def rec(rest):
        nonlocal count
        if count >= limit:
            return
        if not rest:
            count += 1
            return
        v = lowest(rest)
        for b in blocks:
            if b >> v & 1 and b & rest == b:
                rec(rest & ~b)

    rec(universe)
    return count


def _count_colorings(g: Graph, mask: int, k: int, limit: int) -> int:
    """Partitions of G[mask] into exactly k nonempty stable sets (up to limit)."""
    count = 0

    def rec(rest, parts):
        nonlocal count
        if count >= limit:
            return
        if not rest:
            if parts == k:
                count += 1
            return
        if parts == k:
            return
        v = lowest(rest)
        # stable sets containing v inside rest
        stack = [(1 << v, rest & ~g.adj[v] & ~(1 << v))]
        while stack:
            inc, cand = stack.pop()
            rec(rest & ~inc, parts + 1)
            while cand:
                u = lowest(cand)
                cand &= ~(1 << u)
                stack.append((inc | 1 << u, cand & ~g.adj[u]))

    rec(mask, 0)
    return count


@dataclass
class PartitionReport:
    alpha: int
    omega: int
    n: int
    cliques: list[int]
    stables: list[int]
    conclusions: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.conclusions.values())


def partitionable_check(g: Graph, guard: int | None = None) -> PartitionReport | None:
    """Return a report if ``g`` is (alpha, omega)-partitionable, else None."""
    _check_guard(g, guard, 14)
    if g.n < 2:
        return None
    om = clique_number_bf(g, guard=g.n)
    al = stability_number_bf(g, guard=g.n)
    cliques = _all_max_sets(g, om, True)
    stables = _all_max_sets(g, al, False)
    for v in range(g.n):
        rest = g.full & ~(1 << v)
        if not _exact_covers(rest, [c for c in cliques if not c >> v & 1], 1):
            return None
        if not _exact_covers(rest, [s for s in stables if not s >> v & 1], 1):
            return None
    n = g.n
    concl = {
        "order_is_alpha_omega_plus_one": n == al * om + 1,
        "n_omega_cliques": len(cliques) == n,
        "n_alpha_stables": len(stables) == n,
        "vertex_in_omega_cliques": all(sum(c >> v & 1 for c in cliques) == om for v in range(n)),
        "vertex_in_alpha_stables": all(sum(s >> v & 1 for s in stables) == al for v in range(n)),
        "clique_misses_one_stable": all(sum(1 for s in stables if not c & s) == 1 for c in cliques),
        "stable_misses_one_clique": all(sum(1 for c in cliques if not c & s) == 1 for s in stables),
        "unique_coloring_minus_v": all(
            _count_colorings(g, g.full & ~(1 << v), om, 2) == 1 for v in range(n)),
    }
    return PartitionReport(al, om, n, cliques, stables, concl)


# -- large sparse instances (gadget outputs) -----------------------------------

def hole_through_bf(g: Graph, a: int, b: int) -> list[int] | None:
    """An induced cycle of length >= 4 through ``a`` and ``b`` (a of degree 2)."""
    nbs = list(bits(g.adj[a]))
    if len(nbs) != 2 or g.has_edge(*nbs):
        return None
    p, q = nbs
    for path in induced_paths(g, p, q, g.full & ~(1 << a)):
        if b in path and len(path) >= 3:
            return [a] + path
    return None


def _pruned_induced_paths(g: Graph, x: int, y: int, allowed: int, later) -> Iterator[list[int]]:
    """Induced x-y paths inside ``allowed``; a branch dies as soon as y, or
    one of the ``later`` endpoint pairs, gets cut off."""
    def alive(blocked_closed: int, reach_from: int) -> bool:
        room = allowed & ~blocked_closed
        if not component_mask(g, reach_from, room | 1 << reach_from | 1 << y) >> y & 1:
            return False
        return True

    def rec(path, blocked):
        v = path[-1]
        if g.adj[v] >> y & 1:
            yield path + [y]
            return
        nb = blocked | g.adj[v]
        for w in bits(g.adj[v] & allowed & ~blocked):
            if not alive(nb, w):
                continue
            closed = nb | 1 << w
            if later and not later(closed | g.adj[w]):
                continue
            yield from rec(path + [w], closed)

    yield from rec([x], 1 << x)


def _induced_path_systems(g, ends, blocked0, shortest_last=True):
    """Yield lists of paths (one per (s, t) in ends) that are mutually induced.

    Paths may only touch each other at endpoints, and interior vertices must
    avoid ``blocked0`` neighbourhoods; adjacency among endpoints is the
    caller's concern.  With ``shortest_last`` the last path is taken as a
    shortest one: any path through the leftover room can be shortened to an
    induced one, so this loses nothing when only existence matters (but it
    does when path parities matter).
    """
    endmask = 0
    for s, t in ends:
        endmask |= 1 << s | 1 << t

    def room_for(i: int, used: int) -> int:
        s, t = ends[i]
        others = endmask & ~(1 << s | 1 << t)
        return g.full & ~endmask & ~used & ~blocked0 & ~g.neighborhood(others)

    def feasible(start: int, used: int) -> bool:
        for j in range(start, len(ends)):
            s, t = ends[j]
            if s != t and path_within(g, s, t, room_for(j, used)) is None:
                return False
        return True

    def rec(i, used, chosen):
        if i == len(ends):
            yield list(chosen)
            return
        s, t = ends[i]
        if s == t:
            paths = [[s]]
        elif i == len(ends) - 1 and shortest_last:
            p = path_within(g, s, t, room_for(i, used))
            paths = [p] if p is not None else []
        else:
            paths = _pruned_induced_paths(g, s, t, room_for(i, used),
                                          lambda c: feasible(i + 1, used | c))
        for path in paths:
            closed = 0
            for v in path[1:-1]:
                closed |= g.adj[v] | 1 << v
            if i < len(ends) - 1 and not feasible(i + 1, used | closed):
                continue
            chosen.append(path)
            yield from rec(i + 1, used | closed, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def prisms_on_triangles_bf(g: Graph, a: tuple, b: tuple, any_parity: bool = False) -> Iterator[Witness]:
    """Prisms of ``g`` whose base triangles are ``a`` and ``b``.

    With ``any_parity`` one prism per way of pairing the corners is enough,
    which is much cheaper; otherwise every prism is produced.
    """
    from itertools import permutations
    for perm in permutations(b):
        ends = list(zip(a, perm))
        if any(g.has_edge(x, y) for i, (x, _) in enumerate(ends)
               for j, (_, y) in enumerate(ends) if i != j):
            continue
        for paths in _induced_path_systems(g, ends, 0, shortest_last=any_parity):
            w = prism_witness("prism", paths)
            if validate_witness(g, w):
                yield w


def lgs_on_triangles_bf(g: Graph, tris: list[tuple], bipartite: bool = False) -> Iterator[Witness]:
    """Nontrivial LGS-K4 whose base triangles are exactly ``tris``.

    Without ``bipartite`` only one is produced per corner assignment, which
    is enough to decide existence.
    """
    from itertools import permutations
    kind = "lgsb-k4" if bipartite else "lgs-ntk4"
    for order in permutations(tris):
        if order[0] != tris[0]:
            continue  # fix the label of the first triangle up to symmetry
        for assign in product(*(permutations(t) for t in order)):
            corner = {}
            for x, trip in zip(LETTERS, assign):
                others = [y for y in LETTERS if y != x]
                for y, v in zip(others, trip):
                    corner[x + y] = v
            ends = [(corner[p], corner[p[::-1]]) for p in LGS_PAIRS]
            for paths in _induced_path_systems(g, ends, 0, shortest_last=not bipartite):
                w = lgs_witness(kind, dict(zip(LGS_PAIRS, paths)))
                if validate_witness(g, w):
                    yield w


def find_anchored_structure_bf(g: Graph, kind: str) -> Witness | None:
    """Exhaustive search anchored on the triangles of ``g``.

    Meant for large sparse graphs with few triangles, where subset search is
    hopeless.  Only triangles from one connected component are combined.
    Returns the first structure found, not a minimum one.
    """
    from .graph import enumerate_triangles
    tris = enumerate_triangles(g)
    comp_of = {}
    for t in tris:
        comp_of[t] = component_mask(g, t[0], g.full)
    if kind in ("prism", "odd-prism", "even-prism", "long-prism"):
        for t1, t2 in combinations(tris, 2):
            if comp_of[t1] != comp_of[t2] or set(t1) & set(t2):
                continue
            for w in prisms_on_triangles_bf(g, t1, t2, any_parity=kind == "prism"):
                w = w.with_kind(kind)
                if validate_witness(g, w):
                    return w
        return None
    if kind in ("lgs-ntk4", "lgsb-k4"):
        for quad in combinations(tris, 4):
            if len({comp_of[t] for t in quad}) != 1:
                continue
            if any(len(set(x) & set(y)) > 1 for x, y in combinations(quad, 2)):
                continue
            for w in lgs_on_triangles_bf(g, list(quad), bipartite=kind == "lgsb-k4"):
                return w
        return None
    raise ValueError(f"no anchored search for {kind!r}")
