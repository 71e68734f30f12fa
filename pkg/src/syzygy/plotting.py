"""Report figures (Agg backend): Betti tables, vanishing scans and battery timings."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.linewidth": 1.0,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 120,
    "savefig.bbox": "tight",
}


def _save(fig, path) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def betti_heatmap(rows, path, title="graded Betti numbers") -> str:
    """``rows[r][i] = beta_{i, i + r}`` drawn as an annotated grid."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(1 + 0.6 * max(len(rows[0]) if rows else 1, 1), 1 + 0.5 * max(len(rows), 1)))
        if rows:
            ax.imshow(rows, cmap="Blues", aspect="auto")
            for r, row in enumerate(rows):
                for i, v in enumerate(row):
                    if v:
                        ax.text(i, r, str(v), ha="center", va="center", fontsize=8)
            ax.set_xticks(range(len(rows[0])))
            ax.set_yticks(range(len(rows)))
        ax.set_xlabel("homological degree i")
        ax.set_ylabel("row j - i")
        ax.set_title(title)
        return _save(fig, path)


def scan_plot(report, path, title=None) -> str:
    """Dimensions of ``Tor_i``/``Ext^i``; vanishing indices get red markers."""
    xs = sorted(report.table)
    ys = [report.table[i] if isinstance(report.table[i], int) else float("nan") for i in xs]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 3))
        ax.bar(xs, ys, color="tab:blue")
        zeros = [x for x, y in zip(xs, ys) if y == 0]
        ax.plot(zeros, [0] * len(zeros), "v", color="tab:red", clip_on=False, label="vanishes")
        if zeros:
            ax.legend(frameon=False)
        ax.set_xlabel("i")
        ax.set_ylabel("dim_k")
        ax.set_xticks(xs)
        ax.set_title(title or f"{report.functor} dimensions ({report.violations} monitor violations)")
        return _save(fig, path)


def battery_timings(result, path) -> str:
    ids = [c.id for c in result.checks]
    ms = [c.elapsed_ms for c in result.checks]
    colors = ["tab:green" if c.status == "pass" else "tab:red" for c in result.checks]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 0.35 * len(ids) + 1))
        ax.barh(ids, ms, color=colors)
        ax.invert_yaxis()
        ax.set_xlabel("elapsed ms")
        ax.set_title("battery timings")
        return _save(fig, path)
