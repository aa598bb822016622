"""Class recognition built from the detectors, plus the small-graph census."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .artemis import ColorResult, color_by_contraction
from .detectors import (detect_long_prism, detect_min_long_hole,
                        detect_odd_prism, detect_prism_or_pyramid)
from .graph import Graph, contract, to_mask
from .oracles import (GuardExceeded, class_membership_bf, default_guard, enumerate_nonisomorphic,
                      find_structure_bf, is_even_pair_bf)
from .parity import find_two_pair
from .witness import Witness, edges_in, hole_witness, validate_witness


@dataclass(frozen=True)
class Verdict:
    """Outcome of a recognizer: ``member`` is None when undecided."""

    cls: str
    member: bool | None
    witness: Witness | None = None
    in_complement: bool = False
    notes: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return {True: "yes", False: "no", None: "undecided"}[self.member]

    def to_dict(self) -> dict:
        return {"class": self.cls, "verdict": self.status,
                "witness": None if self.witness is None else self.witness.to_dict(),
                "witness_in_complement": self.in_complement, "notes": list(self.notes)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


BERGE_NOTE = "Berge test by exhaustive search"


def _odd_hole_bf(g: Graph) -> Witness | None:
    return find_structure_bf(g, "odd-hole", guard=g.n)


def _berge_step(g: Graph, cls: str, guard: int | None, notes: list[str]):
    """Exhaustive Berge check; returns a failing Verdict, or None to go on."""
    cap = default_guard(16) if guard is None else guard
    if g.n > cap:
        notes.append(f"n={g.n} above guard {cap}")
        return Verdict(cls, None, notes=tuple(notes))
    notes.append(BERGE_NOTE)
    w = _odd_hole_bf(g)
    if w is not None:
        return Verdict(cls, False, w, notes=tuple(notes))
    w = _odd_hole_bf(g.complement())
    if w is not None:
        return Verdict(cls, False, hole_witness("odd-antihole", w.roles["cycle"]), notes=tuple(notes))
    return None


def _long_antihole(g: Graph, skip_prism: bool = False) -> Witness | None:
    d = detect_min_long_hole(g.complement())
    if not d:
        return None
    cyc = d.witness.roles["cycle"]
    if skip_prism and len(cyc) == 6:
        # the 6-antihole is the triangular prism; the prism detectors name it
        return None
    if len(cyc) == 5:
        # the antihole on five vertices is a C5 of g; report it as the odd hole it is
        return hole_witness("odd-hole", cyc[::2] + cyc[1::2])
    return hole_witness("long-antihole", cyc)


def recognize_artemis(g: Graph, guard: int | None = None) -> Verdict:
    notes: list[str] = []
    w = _long_antihole(g, skip_prism=True)
    if w is not None:
        return Verdict("artemis", False, w)
    fail = _berge_step(g, "artemis", guard, notes)
    if fail is not None:
        return fail
    d = detect_prism_or_pyramid(g)
    if d:
        return Verdict("artemis", False, d.witness, notes=tuple(notes))
    return Verdict("artemis", True, notes=tuple(notes))


def recognize_even_artemis(g: Graph, guard: int | None = None) -> Verdict:
    """No odd hole, no long antihole, no odd prism."""
    notes: list[str] = []
    w = _long_antihole(g, skip_prism=True)
    if w is not None:
        return Verdict("even-artemis", False, w)
    fail = _berge_step(g, "even-artemis", guard, notes)
    if fail is not None:
        return fail
    d = detect_odd_prism(g)
    if d:
        return Verdict("even-artemis", False, d.witness, notes=tuple(notes))
    return Verdict("even-artemis", True, notes=tuple(notes))


def _eight_vertex_templates(g: Graph) -> Witness | None:
    """Double diamond or L(K3,3 minus an edge) among all 8-subsets."""
    if g.n < 8:
        return None
    for combo in combinations(range(g.n), 8):
        # both templates have 14 edges
        if edges_in(g, to_mask(combo)) != 14:
            continue
        for kind in ("double-diamond", "l-k33-minus-e"):
            w = Witness(kind, combo)
            if validate_witness(g, w):
                return w
    return None


def recognize_bipartisan(g: Graph, guard: int | None = None) -> Verdict:
    notes: list[str] = []
    fail = _berge_step(g, "bipartisan", guard, notes)
    if fail is not None:
        return fail
    gc = g.complement()
    for h, comp in ((g, False), (gc, True)):
        d = detect_long_prism(h)
        if d:
            return Verdict("bipartisan", False, d.witness, comp, tuple(notes))
    for h, comp in ((g, False), (gc, True)):
        w = _eight_vertex_templates(h)
        if w is not None:
            return Verdict("bipartisan", False, w, comp, tuple(notes))
    return Verdict("bipartisan", True, notes=tuple(notes))


def two_pair_closure(g: Graph) -> bool:
    """Keep joining 2-pairs; weakly triangulated iff this ends in a clique."""
    h = g
    while not h.is_clique(h.full):
        pair = find_two_pair(h)
        if pair is None:
            return False
        h = h.add_edges([pair])
    return True


def recognize_weakly_triangulated(g: Graph, cross_check: bool = True) -> Verdict:
    d = detect_min_long_hole(g)
    verdict = None
    if d:
        verdict = Verdict("weakly-triangulated", False, d.witness)
    else:
        w = _long_antihole(g)
        verdict = Verdict("weakly-triangulated", w is None, w)
    if cross_check and two_pair_closure(g) != verdict.member:
        raise AssertionError("long-hole search and 2-pair closure disagree")
    return verdict


RECOGNIZERS = {
    "artemis": recognize_artemis,
    "even-artemis": recognize_even_artemis,
    "bipartisan": recognize_bipartisan,
    "weakly-triangulated": lambda g, guard=None: recognize_weakly_triangulated(g),
}


def recognize(cls: str, g: Graph, guard: int | None = None) -> Verdict:
    try:
        fn = RECOGNIZERS[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(RECOGNIZERS)}") from None
    return fn(g, guard=guard)


# -- even-Artemis coloring --------------------------------------------------------

def even_artemis_color_experimental(g: Graph, guard: int | None = None) -> ColorResult:
    """Contract even pairs whose contraction stays even-Artemis.

    Only certified when the palette matches the recovered clique; whether
    this always happens on even-Artemis graphs is an open conjecture.
    Pairs are tested exhaustively, so the graph must stay within ``guard``.
    """
    cap = default_guard(12) if guard is None else guard
    if g.n > cap:
        raise GuardExceeded(f"n={g.n} exceeds guard {cap}")

    def choose(h: Graph):
        if h.is_clique(h.full):
            return None
        for x, y in combinations(range(h.n), 2):
            if h.has_edge(x, y) or not is_even_pair_bf(h, x, y, guard=cap):
                continue
            if recognize_even_artemis(contract(h, x, y), guard=cap).member:
                return x, y
        return None

    return color_by_contraction(g, choose, verify_pairs=False, guard=cap)


# -- census -------------------------------------------------------------------------

CENSUS_CLASSES = ("all", "berge", "quasi-parity", "strict-quasi-parity", "perfectly-contractile",
                  "weakly-triangulated", "meyniel")
EXTRA_CLASSES = ("perfect", "artemis", "even-artemis", "bipartisan")


@dataclass
class CensusTable:
    orders: list[int]
    classes: list[str]
    counts: dict[str, dict[int, int]] = field(default_factory=dict)

    def row(self, cls: str) -> list[int]:
        return [self.counts[cls][n] for n in self.orders]

    def column(self, n: int) -> dict[str, int]:
        return {c: self.counts[c][n] for c in self.classes}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + [str(n) for n in self.orders])
        for c in self.classes:
            w.writerow([c] + self.row(c))
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"orders": self.orders,
                "counts": {c: {str(n): self.counts[c][n] for n in self.orders} for c in self.classes}}


def _count(task: tuple[int, str]) -> tuple[int, str, int]:
    n, cls = task
    graphs = list(enumerate_nonisomorphic(n))
    if cls == "all":
        return n, cls, len(graphs)
    return n, cls, sum(class_membership_bf(g, cls, guard=max(n, 1)) for g in graphs)


def census(n_max: int, classes=CENSUS_CLASSES, n_min: int = 1, workers: int = 1) -> CensusTable:
    if n_max > 7:
        raise GuardExceeded(f"census above n=7 is out of reach (asked {n_max})")
    orders = list(range(n_min, n_max + 1))
    tasks = [(n, c) for n in orders for c in classes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_count, tasks))
    else:
        results = [_count(t) for t in tasks]
    table = CensusTable(orders, list(classes), {c: {} for c in classes})
    for n, c, k in results:
        table.counts[c][n] = k
    return table


__all__ = ["Verdict", "recognize", "recognize_artemis", "recognize_even_artemis",
           "recognize_bipartisan", "recognize_weakly_triangulated", "two_pair_closure",
           "even_artemis_color_experimental", "census", "CensusTable", "CENSUS_CLASSES",
           "EXTRA_CLASSES", "RECOGNIZERS"]
