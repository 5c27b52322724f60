"""Figures written next to campaign reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _finish(fig, ax, path: str | Path, title: str) -> Path:
    ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_populations(report: dict, path: str | Path) -> Path:
    """Per-order bars: graphs scanned, graphs meeting the filters, failures."""
    rows = report.get("populations", {})
    orders = sorted(rows, key=int)
    series = [("scanned", "scanned"), ("passed_filters", "passed filters"), ("counterexamples", "counterexamples")]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        width = 0.27
        for k, (key, label) in enumerate(series):
            xs = [i + (k - 1) * width for i in range(len(orders))]
            ax.bar(xs, [rows[o][key] for o in orders], width, label=label)
        ax.set_xticks(range(len(orders)), orders)
        ax.set_xlabel("order n")
        ax.set_ylabel("graphs")
        if any(rows[o]["scanned"] > 0 for o in orders):
            ax.set_yscale("symlog", linthresh=1)
        return _finish(fig, ax, path, f"{report.get('kind', 'campaign')}: {report.get('status', '')}")


def plot_audit(report: dict, path: str | Path) -> Path:
    """Graphs checked against graphs skipped, per lemma."""
    lemmas = report.get("lemmas", {})
    names = list(lemmas)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        xs = range(len(names))
        ax.bar([x - 0.2 for x in xs], [lemmas[n]["graphs_checked"] for n in names], 0.4, label="checked")
        ax.bar([x + 0.2 for x in xs], [lemmas[n]["graphs_skipped"] for n in names], 0.4, label="skipped")
        ax.set_xticks(list(xs), names)
        ax.set_ylabel("graphs")
        return _finish(fig, ax, path, f"lemma audit: {report.get('status', '')}")


def plot_counts(counts: dict[int, int], path: str | Path, title: str = "isomorphism classes") -> Path:
    orders = sorted(counts)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 3.2))
        ax.semilogy(orders, [max(counts[n], 1) for n in orders], "o-", label="classes")
        ax.set_xlabel("order n")
        ax.set_ylabel("count")
        return _finish(fig, ax, path, title)


def render(report: dict, path: str | Path) -> Path | None:
    if report.get("kind") == "audit":
        return plot_audit(report, path)
    if report.get("populations"):
        return plot_populations(report, path)
    return None
