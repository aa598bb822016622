"""Certificates for induced substructures and their structural validators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .canon import is_isomorphic
from .graph import Graph, bits, is_hole, lowest, popcount, to_mask

PRISM_KINDS = ("prism", "long-prism", "even-prism", "odd-prism")
LGS_KINDS = ("lgs-ntk4", "lgsb-k4")
HOLE_KINDS = ("odd-hole", "long-hole", "hole", "even-hole")
KINDS = HOLE_KINDS + ("long-antihole", "odd-antihole") + PRISM_KINDS + (
    "pyramid", "quasi-prism") + LGS_KINDS + ("double-diamond", "l-k33-minus-e", "claw", "diamond")

LETTERS = "abcd"
LGS_PAIRS = [x + y for x, y in combinations(LETTERS, 2)]  # ab ac ad bc bd cd


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: tuple[int, ...]
    roles: dict[str, list[int]] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices),
                "roles": {k: list(v) for k, v in sorted(self.roles.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def with_kind(self, kind: str) -> "Witness":
        return Witness(kind, self.vertices, dict(self.roles))


def _edge_set(g: Graph, vs) -> set[frozenset]:
    mask = to_mask(vs)
    return {frozenset((u, v)) for u in vs for v in bits(g.adj[u] & mask) if u < v}


def _path_edges(p) -> set[frozenset]:
    return {frozenset(e) for e in zip(p, p[1:])}


def _tri_edges(t) -> set[frozenset]:
    return {frozenset(e) for e in combinations(t, 2)}


def _disjoint(paths) -> bool:
    seen: set[int] = set()
    for p in paths:
        if len(set(p)) != len(p) or seen & set(p):
            return False
        seen |= set(p)
    return True


def prism_lengths(w: Witness) -> list[int]:
    return [len(w.roles[f"P{i}"]) - 1 for i in (1, 2, 3)]


def _check_prism(g: Graph, w: Witness) -> bool:
    a, b = w.roles.get("a"), w.roles.get("b")
    ps = [w.roles.get(f"P{i}") for i in (1, 2, 3)]
    if a is None or b is None or any(p is None for p in ps):
        return False
    if not _disjoint(ps):
        return False
    for i in range(3):
        if len(ps[i]) < 2 or ps[i][0] != a[i] or ps[i][-1] != b[i]:
            return False
    vs = [v for p in ps for v in p]
    if sorted(vs) != list(w.vertices):
        return False
    want = _tri_edges(a) | _tri_edges(b)
    for p in ps:
        want |= _path_edges(p)
    if _edge_set(g, vs) != want:
        return False
    lens = prism_lengths(w)
    if w.kind == "long-prism":
        return len(vs) >= 7
    if w.kind == "even-prism":
        return all(x % 2 == 0 for x in lens)
    if w.kind == "odd-prism":
        return all(x % 2 == 1 for x in lens)
    return True


def _check_pyramid(g: Graph, w: Witness) -> bool:
    apex, b = w.roles.get("apex"), w.roles.get("b")
    ps = [w.roles.get(f"P{i}") for i in (1, 2, 3)]
    if apex is None or b is None or any(p is None for p in ps):
        return False
    (x,) = apex
    for i in range(3):
        if len(ps[i]) < 2 or ps[i][0] != x or ps[i][-1] != b[i]:
            return False
    if sum(1 for p in ps if len(p) == 2) > 1:
        return False
    if not _disjoint([ps[0]] + [p[1:] for p in ps[1:]]):
        return False
    vs = sorted({v for p in ps for v in p})
    if vs != list(w.vertices):
        return False
    want = _tri_edges(b)
    for p in ps:
        want |= _path_edges(p)
    return _edge_set(g, vs) == want


def _check_quasi_prism(g: Graph, w: Witness) -> bool:
    ps = [w.roles.get(f"S{i}") for i in (1, 2, 3, 4)]
    if any(p is None or not p for p in ps):
        return False
    s1, s2, s3, s4 = ps
    if len(s3) < 2 or len(s4) < 2 or not _disjoint(ps):
        return False
    vs = sorted(v for p in ps for v in p)
    if vs != list(w.vertices):
        return False
    a1, b1 = s1[-1], s2[-1]
    c, c1, d, d1 = s3[0], s3[-1], s4[0], s4[-1]
    want = set().union(*(_path_edges(p) for p in ps))
    want |= _tri_edges((a1, c, d)) | _tri_edges((b1, c1, d1))
    return _edge_set(g, vs) == want


def lgs_path_lengths(w: Witness) -> dict[str, int]:
    """Number of root edges on each subdivided K4 edge (= path vertex count)."""
    return {p: len(w.roles[f"P_{p}"]) for p in LGS_PAIRS}


def _check_lgs(g: Graph, w: Witness) -> bool:
    try:
        ps = {p: w.roles[f"P_{p}"] for p in LGS_PAIRS}
    except KeyError:
        return False
    if any(len(p) == 0 for p in ps.values()) or not _disjoint(ps.values()):
        return False
    corner = {}
    for p, path in ps.items():
        corner[p] = path[0]
        corner[p[::-1]] = path[-1]
    tris = []
    for x in LETTERS:
        tris.append([corner[x + y] for y in LETTERS if y != x])
    vs = sorted(v for p in ps.values() for v in p)
    if vs != list(w.vertices):
        return False
    want = set()
    for t in tris:
        if len(set(t)) != 3:
            return False
        want |= _tri_edges(t)
    for p in ps.values():
        want |= _path_edges(p)
    if _edge_set(g, vs) != want:
        return False
    if len(vs) <= 6:
        return False
    if w.kind == "lgsb-k4":
        ln = lgs_path_lengths(w)
        for x, y, z in combinations(LETTERS, 3):
            if (ln[x + y] + ln[y + z] + ln[x + z]) % 2:
                return False
    return True


def _template(kind: str) -> Graph:
    from . import named
    return {"double-diamond": named.double_diamond, "l-k33-minus-e": named.l_k33_minus_e,
            "claw": named.claw, "diamond": named.diamond}[kind]()


def validate_witness(g: Graph, w: Witness) -> bool:
    """Check that ``w`` really is an induced copy of its claimed structure in ``g``."""
    if any(not 0 <= v < g.n for v in w.vertices) or len(set(w.vertices)) != len(w.vertices):
        return False
    k = w.kind
    if k in HOLE_KINDS or k in ("long-antihole", "odd-antihole"):
        cyc = w.roles.get("cycle")
        if cyc is None or sorted(cyc) != list(w.vertices):
            return False
        host = g.complement() if k.endswith("antihole") else g
        if not is_hole(host, cyc):
            return False
        if k.startswith("odd"):
            return len(cyc) % 2 == 1 and len(cyc) >= 5
        if k.startswith("long"):
            return len(cyc) >= 5
        if k == "even-hole":
            return len(cyc) % 2 == 0
        return True
    if k in PRISM_KINDS:
        return _check_prism(g, w)
    if k == "pyramid":
        return _check_pyramid(g, w)
    if k == "quasi-prism":
        return _check_quasi_prism(g, w)
    if k in LGS_KINDS:
        return _check_lgs(g, w)
    return is_isomorphic(g.induced(w.vertices), _template(k))


def hole_witness(kind: str, cycle: list[int]) -> Witness:
    return Witness(kind, tuple(cycle), {"cycle": list(cycle)})


def prism_witness(kind: str, paths: list[list[int]]) -> Witness:
    a = [p[0] for p in paths]
    b = [p[-1] for p in paths]
    roles = {"a": a, "b": b}
    for i, p in enumerate(paths, 1):
        roles[f"P{i}"] = list(p)
    return Witness(kind, tuple(v for p in paths for v in p), roles)


def pyramid_witness(paths: list[list[int]]) -> Witness:
    roles = {"apex": [paths[0][0]], "b": [p[-1] for p in paths]}
    for i, p in enumerate(paths, 1):
        roles[f"P{i}"] = list(p)
    return Witness("pyramid", tuple({v for p in paths for v in p}), roles)


def lgs_witness(kind: str, paths: dict[str, list[int]]) -> Witness:
    roles = {f"P_{p}": list(paths[p]) for p in LGS_PAIRS}
    for p in LGS_PAIRS:
        roles[f"v_{p}"] = [paths[p][0]]
        roles[f"v_{p[::-1]}"] = [paths[p][-1]]
    return Witness(kind, tuple(v for p in paths.values() for v in p), roles)


# -- recognising a whole vertex set -------------------------------------------

def edges_in(g: Graph, mask: int) -> int:
    return sum(popcount(g.adj[v] & mask) for v in bits(mask)) // 2


def cycle_order(g: Graph, mask: int) -> list[int] | None:
    """If ``mask`` induces a single cycle, return it in traversal order."""
    for v in bits(mask):
        if popcount(g.adj[v] & mask) != 2:
            return None
    start = lowest(mask)
    order = [start]
    cur = lowest(g.adj[start] & mask)
    while cur != start:
        order.append(cur)
        nb = g.adj[cur] & mask & ~(1 << order[-2])
        cur = lowest(nb)
    return order if len(order) == popcount(mask) else None


def triangles_in(g: Graph, mask: int) -> list[tuple[int, int, int]]:
    out = []
    for u in bits(mask):
        hi = g.adj[u] & mask & ~((2 << u) - 1)
        for v in bits(hi):
            for w in bits(hi & g.adj[v] & ~((2 << v) - 1)):
                out.append((u, v, w))
    return out


def _walk(g: Graph, mask: int, start: int, first: int, stop: int) -> list[int] | None:
    """Follow degree-2 vertices from ``start`` via ``first`` until hitting ``stop``."""
    path = [start, first]
    while not stop >> path[-1] & 1:
        cur = path[-1]
        nb = g.adj[cur] & mask & ~(1 << path[-2])
        if popcount(g.adj[cur] & mask) != 2 or not nb:
            return None
        path.append(lowest(nb))
        if len(path) > popcount(mask):
            return None
    return path


def recognise_prism(g: Graph, mask: int) -> Witness | None:
    k = popcount(mask)
    if edges_in(g, mask) != k + 3:
        return None
    tris = triangles_in(g, mask)
    if len(tris) != 2 or set(tris[0]) & set(tris[1]):
        return None
    a, b = tris
    bmask = to_mask(b)
    paths = []
    for x in a:
        out = g.adj[x] & mask & ~to_mask(a)
        if popcount(out) != 1:
            return None
        p = _walk(g, mask, x, lowest(out), bmask)
        if p is None:
            return None
        paths.append(p)
    if len({p[-1] for p in paths}) != 3:
        return None
    w = prism_witness("prism", paths)
    return w if w.vertices == tuple(bits(mask)) and validate_witness(g, w) else None


def recognise_pyramid(g: Graph, mask: int) -> Witness | None:
    k = popcount(mask)
    if edges_in(g, mask) != k + 2:
        return None
    tris = triangles_in(g, mask)
    if len(tris) != 1:
        return None
    b = tris[0]
    bmask = to_mask(b)
    apexes = [v for v in bits(mask & ~bmask) if popcount(g.adj[v] & mask) == 3]
    if len(apexes) != 1:
        return None
    x = apexes[0]
    paths = []
    for y in bits(g.adj[x] & mask):
        p = [x, y] if bmask >> y & 1 else _walk(g, mask, x, y, bmask)
        if p is None:
            return None
        paths.append(p)
    paths.sort(key=lambda p: b.index(p[-1]) if p[-1] in b else 9)
    if [p[-1] for p in paths] != list(b):
        return None
    w = pyramid_witness(paths)
    return w if w.vertices == tuple(bits(mask)) and validate_witness(g, w) else None
