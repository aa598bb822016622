"""Figures for the CLI report paths: census counts and the complexity smoke run."""

from __future__ import annotations

import random
import time

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .artemis import artemis_color  # noqa: E402
from .graph import Graph  # noqa: E402


def census_figure(table, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for cls in table.classes:
        ax.plot(table.orders, table.row(cls), marker="o", label=cls)
    ax.set_yscale("log")
    ax.set_xlabel("order n")
    ax.set_ylabel("non-isomorphic graphs")
    ax.set_xticks(table.orders)
    ax.legend(fontsize=7)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    """Random bipartite graph on two halves; always Artemis."""
    half = n // 2
    return Graph.from_edges(n, [(u, v) for u in range(half) for v in range(half, n)
                                if rng.random() < p])


def complexity_smoke(sizes=(50, 100, 200), degree: float = 6.0, seed: int = 0,
                     repeats: int = 3) -> list[dict]:
    """Time ``artemis_color`` on growing bipartite graphs.

    ``ratio`` is seconds / (n^2 m); ``growth`` compares it with the previous size.
    """
    rows = []
    for n in sizes:
        g = random_bipartite(n, min(1.0, 2 * degree / n), random.Random(seed * 1000 + n))
        best = float("inf")
        certified = True
        for _ in range(repeats):
            t0 = time.perf_counter()
            res = artemis_color(g, verify_pairs=False)
            best = min(best, time.perf_counter() - t0)
            certified &= res.optimal_certified
        ratio = best / (n * n * max(g.m, 1))
        growth = ratio / rows[-1]["ratio"] if rows else 1.0
        rows.append({"n": n, "m": g.m, "seconds": best, "ratio": ratio, "growth": growth,
                     "certified": certified})
    return rows


def smoke_figure(rows: list[dict], path: str) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ns = [r["n"] for r in rows]
    ax.loglog(ns, [r["seconds"] for r in rows], marker="o", label="measured")
    first = rows[0]
    scale = first["seconds"] / (first["n"] ** 2 * max(first["m"], 1))
    ax.loglog(ns, [scale * r["n"] ** 2 * max(r["m"], 1) for r in rows], ls="--",
              label="n²m, anchored at first size")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


__all__ = ["census_figure", "complexity_smoke", "smoke_figure", "random_bipartite"]
