"""Immutable simple graphs over dense vertex ids, stored as bitmask rows."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Undirected loop-free simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``.  Instances are
    treated as immutable; every operation returns a new graph.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("negative order")
        if adj is None:
            adj = [0] * n
        if len(adj) != n:
            raise ValueError("adjacency length does not match order")
        full = (1 << n) - 1
        rows = tuple(int(a) for a in adj)
        for v, row in enumerate(rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows
        self._m = sum(popcount(r) for r in rows) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def common(self, mask: int) -> int:
        """Vertices adjacent to every vertex of ``mask``."""
        out = self.full
        for v in bits(mask):
            out &= self.adj[v]
        return out

    def neighborhood(self, mask: int) -> int:
        """Vertices outside ``mask`` with a neighbour in ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, [(full ^ row) & ~(1 << v) for v, row in enumerate(self.adj)])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(vs), adj)

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(bits(mask))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph where old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, adj)

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph(k + other.n, list(self.adj) + [row << k for row in other.adj])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + list(edges))

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- traversal ---------------------------------------------------------------

def bfs_layers(g: Graph, s: int, allowed: int) -> list[int]:
    """BFS layers from ``s`` inside ``allowed`` (which should contain ``s``)."""
    layers = [1 << s]
    seen = 1 << s
    frontier = 1 << s
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return layers


def path_within(g: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    """Shortest s-t path using only vertices in ``allowed`` (plus s and t).

    Backtracking always takes the lowest-id predecessor so results are
    deterministic.
    """
    if s == t:
        return [s]
    allowed |= 1 << s | 1 << t
    seen = 1 << s
    layers = [1 << s]
    frontier = 1 << s
    while frontier and not seen >> t & 1:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    if not seen >> t & 1:
        return None
    path = [t]
    cur = t
    for layer in reversed(layers[:-1]):
        cur = lowest(g.adj[cur] & layer)
        path.append(cur)
    path.reverse()
    return path


def shortest_path_avoiding(g: Graph, s: int, t: int, forbidden: Iterable[int] | int = 0) -> list[int] | None:
    """BFS-shortest path from ``s`` to ``t`` in ``g`` minus ``forbidden``."""
    for v in (s, t):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    fb = forbidden if isinstance(forbidden, int) else to_mask(forbidden)
    if fb >> s & 1 or fb >> t & 1:
        raise ValueError("endpoints must not be forbidden")
    return path_within(g, s, t, g.full & ~fb)


def distance_within(g: Graph, s: int, t: int, allowed: int) -> int | None:
    p = path_within(g, s, t, allowed)
    return None if p is None else len(p) - 1


def components(g: Graph, within: Iterable[int] | int | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced on ``within``."""
    if within is None:
        rest = g.full
    elif isinstance(within, int):
        rest = within
    else:
        rest = to_mask(within)
    out = []
    while rest:
        comp = component_mask(g, lowest(rest), rest)
        out.append(list(bits(comp)))
        rest &= ~comp
    return out


def component_mask(g: Graph, s: int, allowed: int) -> int:
    seen = frontier = 1 << s
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def component_masks(g: Graph, allowed: int) -> list[int]:
    out = []
    while allowed:
        c = component_mask(g, lowest(allowed), allowed)
        out.append(c)
        allowed &= ~c
    return out


def is_connected(g: Graph, mask: int | None = None) -> bool:
    mask = g.full if mask is None else mask
    if not mask:
        return True
    return component_mask(g, lowest(mask), mask) == mask


def anticomponents(g: Graph, within: Iterable[int] | int | None = None) -> list[list[int]]:
    return components(g.complement(), within)


def enumerate_triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        hi = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(hi):
            for w in bits(hi & g.adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    pos = {v: i for i, v in enumerate(path)}
    for i, v in enumerate(path):
        for u in bits(g.adj[v]):
            j = pos.get(u)
            if j is not None and abs(i - j) != 1:
                return False
        if i and not g.has_edge(path[i - 1], v):
            return False
    return True


def is_simple_path(g: Graph, path: Sequence[int]) -> bool:
    return len(set(path)) == len(path) and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """True when ``cycle`` (in order) is an induced cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    mask = to_mask(cycle)
    for i, v in enumerate(cycle):
        want = 1 << cycle[i - 1] | 1 << cycle[(i + 1) % k]
        if g.adj[v] & mask != want:
            return False
    return True


# -- file formats --------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _g6_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    return text


def parse_graph6(text: bytes | str) -> Graph:
    data = _g6_bytes(text)
    if not data:
        raise ValueError("empty graph6 record")
    for c in data:
        if not 63 <= c <= 126:
            raise ValueError(f"graph6 character {c!r} out of range 63..126")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        body = vals[8:]
    else:
        raise ValueError("malformed graph6 length header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise ValueError("graph6 padding bits are nonzero")
    return Graph(n, adj)


def serialize_graph6(g: Graph, header: bool = False) -> bytes:
    n = g.n
    if n <= 62:
        out = [n]
    elif n <= 258047:
        out = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        out = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc)
                acc = nacc = 0
    if nacc:
        out.append(acc << (6 - nacc))
    body = bytes(x + 63 for x in out)
    return _G6_HEADER + body if header else body


def parse_edgelist(text: str) -> Graph:
    """One ``u v`` pair per line; blank and ``#`` lines ignored.

    A line holding a single integer sets the order explicitly (needed for
    isolated vertices); otherwise the order is one more than the largest id.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v'")
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise ValueError(f"declared order {n} is smaller than max id + 1 = {top}")
    return Graph.from_edges(n, edges)


def serialize_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str, fmt: str | None = None) -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt is None:
        fmt = "g6" if path.endswith((".g6", ".graph6")) else "edgelist"
    if fmt == "g6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ValueError(f"expected exactly one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edgelist(data.decode())
    raise ValueError(f"unknown format {fmt!r}")


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)


def contract(g: Graph, x: int, y: int) -> Graph:
    """Merge nonadjacent ``x`` and ``y`` into ``min(x, y)``; higher ids shift down."""
    if x == y or g.has_edge(x, y):
        raise ValueError("contraction needs two distinct nonadjacent vertices")
    keep, drop = min(x, y), max(x, y)
    merged = (g.adj[x] | g.adj[y]) & ~(1 << x | 1 << y)
    rows = list(g.adj)
    rows[keep] = merged
    for u in bits(merged):
        rows[u] = (rows[u] & ~(1 << drop)) | 1 << keep
    low = (1 << drop) - 1
    out = []
    for v, row in enumerate(rows):
        if v == drop:
            continue
        out.append((row & low) | (row >> (drop + 1) << drop))
    return Graph(g.n - 1, out)
