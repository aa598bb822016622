"""Polynomial detectors: guess a few anchor vertices, rebuild the rest by shortest paths.

Every detector returns a ``Detection``.  It is truthy when something was
found, carries the witness, and lists the hypotheses the caller promised
(pyramid-free, odd-hole-free).  Those hypotheses are never checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, bits, component_masks, enumerate_triangles, path_within, to_mask
from .witness import (LETTERS, LGS_PAIRS, Witness, hole_witness, lgs_witness, prism_witness,
                      recognise_prism, recognise_pyramid, validate_witness)


@dataclass(frozen=True)
class Detection:
    witness: Witness | None
    assumed_preconditions: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {"present": self.witness is not None,
                "witness": None if self.witness is None else self.witness.to_dict(),
                "assumed_preconditions": list(self.assumed_preconditions)}


def _key(w: Witness) -> tuple:
    return (w.size, w.vertices)


def _better(best: Witness | None, w: Witness | None) -> Witness | None:
    if w is None:
        return best
    if best is None or _key(w) < _key(best):
        return w
    return best


def _missing(g: Graph, vs) -> int:
    """Vertices neither in ``vs`` nor adjacent to any of them."""
    m = g.full
    for v in vs:
        m &= ~(g.adj[v] | 1 << v)
    return m


# -- long holes -------------------------------------------------------------------

def detect_min_long_hole(g: Graph) -> Detection:
    best = None
    for u in range(g.n):
        nb = list(bits(g.adj[u]))
        closed_u = g.adj[u] | 1 << u
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if g.has_edge(a, b):
                    continue
                allowed = g.full & ~closed_u & ~(g.adj[a] & g.adj[b])
                p = path_within(g, a, b, allowed)
                if p is None:
                    continue
                w = hole_witness("long-hole", [u] + p)
                if best is None or _key(w) < _key(best):
                    best = w
    return Detection(best)


# -- prisms and pyramids -------------------------------------------------------------

def _quadruple_scan(g: Graph, keep) -> Witness | None:
    best = None
    for tri in enumerate_triangles(g):
        tmask = to_mask(tri)
        # interior of the path to b_i has to miss the two other corners
        avoid = [_missing(g, [tri[(i + 1) % 3], tri[(i + 2) % 3]]) for i in range(3)]
        for a in range(g.n):
            if tmask >> a & 1:
                continue
            paths = []
            for i in range(3):
                p = path_within(g, a, tri[i], avoid[i])
                if p is None:
                    break
                paths.append(p)
            else:
                mask = to_mask(v for p in paths for v in p)
                w = recognise_prism(g, mask) or recognise_pyramid(g, mask)
                if w is not None and keep(w):
                    best = _better(best, w)
    return best


def detect_prism_or_pyramid(g: Graph) -> Detection:
    """Smallest prism or pyramid, scanning (apex, triangle) pairs."""
    return Detection(_quadruple_scan(g, lambda w: True))


def detect_long_prism(g: Graph) -> Detection:
    w = _quadruple_scan(g, lambda w: w.kind == "prism" and w.size >= 7)
    return Detection(w.with_kind("long-prism") if w else None, ("pyramid-free",))


def detect_prism_or_pyramid_fast(g: Graph) -> bool:
    """Yes/no answer by marking, one triangle at a time."""
    for tri in enumerate_triangles(g):
        tmask = to_mask(tri)
        xs = []
        for i in range(3):
            sees = g.adj[tri[i]]
            miss = ~(g.adj[tri[(i + 1) % 3]] | g.adj[tri[(i + 2) % 3]])
            xs.append(sees & miss & g.full & ~tmask)
        rest = g.full & ~tmask
        for b in tri:
            rest &= ~g.adj[b]
        seen_by = [0, 0, 0]  # seen_by[i]: vertices with a neighbour in X_i
        for i in range(3):
            for x in bits(xs[i]):
                seen_by[i] |= g.adj[x]
        for i in range(3):
            for x in bits(xs[i]):
                if g.adj[x] & xs[(i + 1) % 3] and g.adj[x] & xs[(i + 2) % 3]:
                    return True
        comps = component_masks(g, rest)
        comp_marks = []
        for c in comps:
            marks = {i for i in range(3) if c & seen_by[i]}
            if len(marks) == 3:
                return True
            comp_marks.append(marks)
        for i in range(3):
            for x in bits(xs[i]):
                got = set()
                for c, marks in zip(comps, comp_marks):
                    if i in marks and len(marks) == 2 and g.adj[x] & c:
                        got |= marks - {i}
                for j in range(3):
                    if j != i and g.adj[x] & xs[j]:
                        got.add(j)
                if len(got) >= 2:
                    return True
    return False


# -- even prisms ------------------------------------------------------------------------

def _prism_corners(g: Graph):
    """(A sorted, B in every order) for vertex-disjoint triangles with no A-B edge."""
    tris = enumerate_triangles(g)
    for ta in tris:
        reach = 0
        for v in ta:
            reach |= g.adj[v] | 1 << v
        for tb in tris:
            if to_mask(tb) & reach:
                continue
            for pb in permutations(tb):
                yield ta, pb


def detect_even_prism(g: Graph) -> Detection:
    best = None
    for a, b in _prism_corners(g):
        corners = a + b
        cmask = to_mask(corners)
        cands = []
        for i in range(3):
            others = [a[j] for j in range(3) if j != i] + [b[j] for j in range(3) if j != i]
            cands.append(list(bits(_missing(g, others) & ~cmask)))
        for m1 in cands[0]:
            for m2 in cands[1]:
                if m2 == m1 or g.has_edge(m1, m2):
                    continue
                for m3 in cands[2]:
                    if m3 in (m1, m2) or g.has_edge(m1, m3) or g.has_edge(m2, m3):
                        continue
                    w = _even_prism_from(g, a, b, (m1, m2, m3))
                    best = _better(best, w)
    return Detection(best, ("odd-hole-free",))


def _half(g: Graph, s: int, t: int, trame: tuple) -> list[int] | None:
    rest = {v for v in trame if v != s and v != t}
    return path_within(g, s, t, _missing(g, rest))


def _even_prism_from(g: Graph, a, b, m) -> Witness | None:
    trame = tuple(a) + tuple(b) + tuple(m)
    paths = []
    for i in range(3):
        r = _half(g, a[i], m[i], trame)
        s = _half(g, m[i], b[i], trame)
        if r is None or s is None:
            return None
        paths.append(r + s[1:])
    w = prism_witness("even-prism", paths)
    return w if validate_witness(g, w) else None


# -- line graphs of K4 subdivisions -------------------------------------------------------

def _lgs_corners(g: Graph):
    """Assignments of the twelve corners v_xy, pair by pair.

    Two distinct corners must be adjacent exactly when they share a base
    triangle, except for the two ends of one path, which are unconstrained.
    The ends of a path may also coincide (a path with one vertex).
    """
    corner: dict[str, int] = {}
    labels: dict[int, list[str]] = {}

    def place(v: int, labs: list[str]) -> bool:
        # check every label of v against all placed vertices (v itself not yet placed)
        for w, wl in labels.items():
            if w == v:
                return False
            share = any(x[0] == y[0] for x in wl for y in labs)
            if share:
                if not g.has_edge(v, w):
                    return False
            elif any(x == y[::-1] for x in wl for y in labs):
                continue
            elif g.has_edge(v, w):
                return False
        return True

    def rec(k: int):
        if k == len(LGS_PAIRS):
            yield dict(corner)
            return
        p = LGS_PAIRS[k]
        q = p[::-1]
        for u in range(g.n):
            if u in labels:
                continue
            if place(u, [p, q]):
                labels[u] = [p, q]
                corner[p] = corner[q] = u
                yield from rec(k + 1)
                del labels[u], corner[p], corner[q]
            if not place(u, [p]):
                continue
            labels[u] = [p]
            corner[p] = u
            for v in range(g.n):
                if v in labels or not place(v, [q]):
                    continue
                labels[v] = [q]
                corner[q] = v
                yield from rec(k + 1)
                del labels[v], corner[q]
            del labels[u], corner[p]

    yield from rec(0)


def _lgs_midpoints(g: Graph, corner: dict[str, int]):
    cset = set(corner.values())
    options = []
    for p in LGS_PAIRS:
        u, v = corner[p], corner[p[::-1]]
        if u == v:
            options.append([u])
        elif g.has_edge(u, v):
            options.append([u, v])
        else:
            others = [c for c in cset if c not in (u, v)]
            options.append([x for x in bits(_missing(g, others)) if x not in cset])
    inner = [not (corner[p] == corner[p[::-1]] or g.has_edge(corner[p], corner[p[::-1]]))
             for p in LGS_PAIRS]
    chosen: list[int] = []

    def rec(k: int):
        if k == len(LGS_PAIRS):
            yield list(chosen)
            return
        for x in options[k]:
            if inner[k] and any(inner[j] and (x == chosen[j] or g.has_edge(x, chosen[j]))
                                for j in range(k)):
                continue
            chosen.append(x)
            yield from rec(k + 1)
            chosen.pop()

    yield from rec(0)


def _lgs_from(g: Graph, corner: dict[str, int], mids: list[int]) -> Witness | None:
    trame = tuple(corner.values()) + tuple(mids)
    paths = {}
    for p, m in zip(LGS_PAIRS, mids):
        h1 = _half(g, corner[p], m, trame)
        h2 = _half(g, m, corner[p[::-1]], trame)
        if h1 is None or h2 is None:
            return None
        paths[p] = h1 + h2[1:]
    w = lgs_witness("lgs-ntk4", paths)
    return w if validate_witness(g, w) else None


def _scan_lgs(g: Graph) -> Witness | None:
    if len(enumerate_triangles(g)) < 4:
        return None
    best = None
    for corner in _lgs_corners(g):
        for mids in _lgs_midpoints(g, corner):
            best = _better(best, _lgs_from(g, corner, mids))
    return best


def detect_lgs_ntk4(g: Graph) -> Detection:
    """Line graph of a subdivision of K4 other than K4 itself."""
    return Detection(_scan_lgs(g), ("pyramid-free",))


def detect_lgsb_k4(g: Graph) -> Detection:
    """Line graph of a bipartite subdivision of K4.

    Without odd holes every nontrivial subdivision found is bipartite.
    """
    w = _scan_lgs(g)
    return Detection(w.with_kind("lgsb-k4") if w else None, ("odd-hole-free",))


# -- odd prisms ---------------------------------------------------------------------

def _odd_prism_in_lgs(g: Graph, w: Witness) -> Witness | None:
    """Drop one path of the LGS and read off a prism on two of its triangles."""
    corner = {}
    for p in LGS_PAIRS:
        corner[p] = w.roles[f"v_{p}"][0]
        corner[p[::-1]] = w.roles[f"v_{p[::-1]}"][0]
    path = {}
    for p in LGS_PAIRS:
        path[p] = list(w.roles[f"P_{p}"])
        path[p[::-1]] = path[p][::-1]
    best = None
    for x, y in LGS_PAIRS:
        k, l = [z for z in LETTERS if z not in (x, y)]
        routes = [path[x + y]] + [path[x + z] + path[z + y] for z in (k, l)]
        cand = prism_witness("odd-prism", routes)
        if validate_witness(g, cand):
            best = _better(best, cand)
    return best


def detect_odd_prism(g: Graph) -> Detection:
    pre = ("odd-hole-free",)
    lgs = _scan_lgs(g)
    if lgs is not None:
        return Detection(_odd_prism_in_lgs(g, lgs) or lgs, pre)
    best = None
    tris = enumerate_triangles(g)
    for a in tris:
        for tb in tris:
            if set(a) & set(tb):
                continue
            for b in permutations(tb):
                if any(g.has_edge(a[i], b[j]) for i in range(3) for j in range(3) if i != j):
                    continue
                paths = []
                for i in range(3):
                    j, k = (i + 1) % 3, (i + 2) % 3
                    p = path_within(g, a[i], b[i], _missing(g, [a[j], a[k], b[j], b[k]]))
                    if p is None:
                        break
                    paths.append(p)
                else:
                    cand = prism_witness("odd-prism", paths)
                    if validate_witness(g, cand):
                        best = _better(best, cand)
    return Detection(best, pre)


__all__ = ["Detection", "detect_min_long_hole", "detect_prism_or_pyramid",
           "detect_prism_or_pyramid_fast", "detect_long_prism", "detect_even_prism",
           "detect_lgs_ntk4", "detect_lgsb_k4", "detect_odd_prism"]
