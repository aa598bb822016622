"""Canonical labelling by individualisation-refinement.

The search branches on the first non-singleton cell of an equitable partition.
Inside a cell only one vertex per twin class is tried: swapping twins is an
automorphism, so the pruned subtrees would produce the same leaf codes.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, popcount


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(g.adj[v] & smask), []).append(v)
                if len(groups) > 1:
                    split = True
                    for k in sorted(groups):
                        out.append(groups[k])
                else:
                    out.append(cell)
            if split:
                cells = out
                changed = True
                break
    return cells


def _code(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(g.adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _twins(g: Graph, u: int, v: int) -> bool:
    mask = ~(1 << u | 1 << v)
    return g.adj[u] & mask == g.adj[v] & mask


def canonical_order(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return (code, order) where ``order[i]`` is the vertex placed at i."""
    best: list = [None, None]

    def search(cells):
        cells = _refine(g, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[idx]
        reps: list[int] = []
        for v in cell:
            if any(_twins(g, v, r) for r in reps):
                continue
            reps.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if g.n == 0:
        return (), []
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degree(v), []).append(v)
    search([by_deg[d] for d in sorted(by_deg)])
    return best[0], best[1]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete (equal iff isomorphic)."""
    return g.n, canonical_order(g)[0]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)[1]
    return g.induced(order)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)
