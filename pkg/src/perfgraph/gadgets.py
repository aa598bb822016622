"""3-SAT to "hole through a and b", and from there to prism and K4-subdivision detection."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .graph import Graph, bits, enumerate_triangles


@dataclass(frozen=True)
class CnfFormula:
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]  # signed 1-based literals

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError("need at least one variable")
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise ValueError(f"literal {lit} out of range")
        if not self.clauses:
            raise ValueError("need at least one clause")

    def evaluate(self, assignment) -> bool:
        return all(any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in c)
                   for c in self.clauses)

    def satisfying_assignment(self) -> tuple[int, ...] | None:
        for xs in product((0, 1), repeat=self.n_vars):
            if self.evaluate(xs):
                return xs
        return None

    def is_satisfiable(self) -> bool:
        return self.satisfying_assignment() is not None

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    n_vars = None
    lits: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            n_vars = int(parts[2])
            continue
        lits += [int(x) for x in line.split()]
    if n_vars is None:
        raise ValueError("missing 'p cnf' line")
    clauses, cur = [], []
    for x in lits:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        clauses.append(tuple(cur))
    return CnfFormula(n_vars, tuple(clauses))


# -- the instance -------------------------------------------------------------------

@dataclass(frozen=True)
class PiInstance:
    graph: Graph
    a: int
    b: int
    names: tuple[str, ...]

    def check(self) -> None:
        g = self.graph
        if enumerate_triangles(g):
            raise ValueError("instance graph has a triangle")
        if g.has_edge(self.a, self.b) or g.degree(self.a) != 2 or g.degree(self.b) != 2:
            raise ValueError("a and b must be nonadjacent and of degree 2")

    def sidecar(self) -> dict:
        return {"a": self.a, "b": self.b, "names": list(self.names)}


VAR_ROLES = ("a", "b", "t", "f", "a'", "b'", "t'", "f'")
CLAUSE_ROLES = ("c", "d", "v1", "v2", "v3")


def build_pi_instance(f: CnfFormula) -> PiInstance:
    n, m = f.n_vars, len(f.clauses)
    names = []
    for i in range(1, n + 1):
        names += [f"{r}{i}" if "'" not in r else f"{r[0]}{i}'" for r in VAR_ROLES]
    for j in range(1, m + 1):
        names += [f"c{j}", f"d{j}"] + [f"v{j}^{p}" for p in (1, 2, 3)]
    names += ["a", "b"]
    idx = {s: k for k, s in enumerate(names)}

    def var(role: str, i: int) -> int:
        return idx[f"{role[0]}{i}'" if role.endswith("'") else f"{role}{i}"]

    edges = set()

    def add(u: int, v: int):
        edges.add((min(u, v), max(u, v)))

    for i in range(1, n + 1):
        for x, y in (("a", "t"), ("a", "f"), ("b", "t"), ("b", "f"), ("a'", "t'"), ("a'", "f'"),
                     ("b'", "t'"), ("b'", "f'"), ("t", "f'"), ("t'", "f")):
            add(var(x, i), var(y, i))
    for j, clause in enumerate(f.clauses, 1):
        for p, lit in enumerate(clause, 1):
            v = idx[f"v{j}^{p}"]
            add(idx[f"c{j}"], v)
            add(idx[f"d{j}"], v)
            i = abs(lit)
            if lit > 0:
                add(v, var("f", i))
                add(v, var("f'", i))
            else:
                add(v, var("t", i))
                add(v, var("t'", i))
    for i in range(1, n):
        add(var("b", i), var("a", i + 1))
        add(var("b'", i), var("a'", i + 1))
    add(var("b'", n), idx["c1"])
    for j in range(1, m):
        add(idx[f"d{j}"], idx[f"c{j + 1}"])
    add(idx["a"], var("a", 1))
    add(idx["a"], var("a'", 1))
    add(idx["b"], idx[f"d{m}"])
    add(idx["b"], var("b", n))
    inst = PiInstance(Graph.from_edges(len(names), sorted(edges)), idx["a"], idx["b"], tuple(names))
    inst.check()
    return inst


# -- reductions ---------------------------------------------------------------------

REDUCTIONS = ("prism", "odd-prism", "even-prism", "lgs-k4", "lgsb-k4")


@dataclass(frozen=True)
class Reduction:
    kind: str
    graph: Graph
    names: tuple[str, ...]
    parts: tuple[tuple[int, ...], ...]  # vertex ids of each variant

    def sidecar(self) -> dict:
        return {"kind": self.kind, "names": list(self.names), "parts": [list(p) for p in self.parts]}


class _Builder:
    """Grow a graph by name; keeps insertion order so output is reproducible."""

    def __init__(self):
        self.names: list[str] = []
        self.idx: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def vertex(self, name: str) -> int:
        if name not in self.idx:
            self.idx[name] = len(self.names)
            self.names.append(name)
        return self.idx[name]

    def edge(self, x: str, y: str):
        u, v = self.vertex(x), self.vertex(y)
        self.edges.add((min(u, v), max(u, v)))

    def path(self, x: str, y: str, subdivide: bool, mid: str):
        if subdivide:
            self.edge(x, mid)
            self.edge(mid, y)
        else:
            self.edge(x, y)

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.names), sorted(self.edges))


def _copy_body(bld: _Builder, inst: PiInstance, tag: str):
    g = inst.graph
    keep = [v for v in range(g.n) if v not in (inst.a, inst.b)]
    for v in keep:
        bld.vertex(inst.names[v] + tag)
    for u, v in g.edges():
        if u in (inst.a, inst.b) or v in (inst.a, inst.b):
            continue
        bld.edge(inst.names[u] + tag, inst.names[v] + tag)
    na = [inst.names[v] + tag for v in sorted(bits(g.adj[inst.a]))]
    nb = [inst.names[v] + tag for v in sorted(bits(g.adj[inst.b]))]
    return na, nb


def _two_triangles(bld: _Builder, inst: PiInstance, tag: str, sub=(0, 0, 0)):
    na, nb = _copy_body(bld, inst, tag)
    for side, nbrs in (("A", na), ("B", nb)):
        s = [f"{side}{k}{tag}" for k in range(1, 6)]
        bld.edge(s[0], s[1])
        bld.edge(s[0], s[2])
        bld.edge(s[1], s[2])
        if side == "A":
            bld.path(s[1], s[3], sub[0], f"A24{tag}")
            bld.path(s[2], s[4], sub[1], f"A35{tag}")
        else:
            bld.edge(s[1], s[3])
            bld.edge(s[2], s[4])
        bld.edge(s[3], nbrs[0])
        bld.edge(s[4], nbrs[1])
    bld.path(f"A1{tag}", f"B1{tag}", sub[2], f"AB{tag}")


def _k4_corners(bld: _Builder, inst: PiInstance, tag: str, sub=(0, 0)):
    na, nb = _copy_body(bld, inst, tag)
    v = {}
    for x in "abcd":
        for y in "abcd":
            if x != y:
                v[x + y] = f"v_{x}{y}{tag}"
                bld.vertex(v[x + y])
    for x in "abcd":
        tri = [v[x + y] for y in "abcd" if y != x]
        bld.edge(tri[0], tri[1])
        bld.edge(tri[0], tri[2])
        bld.edge(tri[1], tri[2])
    for p in ("ab", "dc", "bd", "bc"):
        bld.edge(v[p], v[p[::-1]])
    bld.path(v["ad"], na[0], sub[0], f"s_ad{tag}")
    bld.path(v["ac"], na[1], sub[1], f"s_ac{tag}")
    bld.edge(v["da"], nb[0])
    bld.edge(v["ca"], nb[1])


def reduce_pi(kind: str, inst: PiInstance) -> Reduction:
    """Turn a hole-through-(a, b) question into a detection question.

    ``prism`` and ``lgs-k4`` give one graph.  The parity versions give the
    disjoint union of every way of subdividing the gadget edges once.
    """
    bld = _Builder()
    parts = []

    def part(build, *args):
        start = len(bld.names)
        build(bld, inst, *args)
        parts.append(tuple(range(start, len(bld.names))))

    if kind == "prism":
        part(_two_triangles, "")
    elif kind in ("odd-prism", "even-prism"):
        for ijk in product((0, 1), repeat=3):
            part(_two_triangles, "@" + "".join(map(str, ijk)), ijk)
    elif kind == "lgs-k4":
        part(_k4_corners, "")
    elif kind == "lgsb-k4":
        for ij in product((0, 1), repeat=2):
            part(_k4_corners, "@" + "".join(map(str, ij)), ij)
    else:
        raise ValueError(f"unknown reduction {kind!r}; choose from {', '.join(REDUCTIONS)}")
    return Reduction(kind, bld.graph(), tuple(bld.names), tuple(parts))


def sidecar_json(obj) -> str:
    return json.dumps(obj.sidecar(), sort_keys=True)


__all__ = ["CnfFormula", "parse_dimacs", "PiInstance", "build_pi_instance", "Reduction",
           "reduce_pi", "REDUCTIONS", "sidecar_json"]
