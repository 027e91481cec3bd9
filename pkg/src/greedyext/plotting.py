"""Figure rendering for reports: Hasse diagrams, balance bar charts, and
sweep histograms.  Floats appear only in plot geometry; every label stays
an exact fraction string."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .greedy import BalanceReport
from .poset import Poset


def _heights(p: Poset) -> list[int]:
    height = [0] * p.n
    for _ in range(p.n):
        for (a, b) in p.covers:
            height[b] = max(height[b], height[a] + 1)
    return height


def draw_hasse(p: Poset, path: str) -> None:
    """Layered Hasse diagram saved to a file."""
    height = _heights(p)
    slots: dict[int, int] = {}
    xs = [0.0] * p.n
    for v in sorted(range(p.n), key=lambda v: (height[v], v)):
        k = slots.get(height[v], 0)
        slots[height[v]] = k + 1
        xs[v] = float(k)
    fig, ax = plt.subplots(figsize=(4, 3))
    for (a, b) in p.covers:
        ax.plot([xs[a], xs[b]], [height[a], height[b]], color="gray", zorder=1)
    ax.scatter(xs, height, s=160, color="white", edgecolors="black", zorder=2)
    for v in range(p.n):
        ax.annotate(p.label(v), (xs[v], height[v]), ha="center", va="center", zorder=3)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_balance(report: BalanceReport, p: Poset, path: str) -> None:
    """Bar chart of per-pair greedy ratios with 1/3, 1/2, 2/3 guide lines."""
    labels = [f"{p.label(x)}<{p.label(y)}" for (x, y, *_rest) in report.pairs]
    values = [before / total for (_x, _y, before, total, _r) in report.pairs]
    texts = [str(r) for (_x, _y, _b, _t, r) in report.pairs]
    fig, ax = plt.subplots(figsize=(max(4, 0.7 * len(labels) + 2), 3.2))
    bars = ax.bar(range(len(values)), values, color="#5b8db8")
    for bar, text in zip(bars, texts):
        ax.annotate(
            text,
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    for y, style in ((1 / 3, ":"), (0.5, "--"), (2 / 3, ":")):
        ax.axhline(y, color="black", linestyle=style, linewidth=0.8)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylim(0, 1.1)
    ax.set_ylabel("greedy before-ratio")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_level_histogram(levels, path: str) -> None:
    """Histogram of best balance levels from a sweep."""
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.hist([float(v) for v in levels], bins=24, range=(0, 0.5), color="#5b8db8")
    ax.axvline(1 / 3, color="black", linestyle=":", linewidth=0.8)
    ax.set_xlabel("best balance level")
    ax.set_ylabel("instances")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
