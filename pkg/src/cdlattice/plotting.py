"""Figures for CD-lattice reports."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import groups  # noqa: E402
from .cd import CdLatticeReport  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}

MEMBER_COLOR = "#c0392b"
OTHER_COLOR = "#7f8c8d"


def _hasse_positions(report: CdLatticeReport) -> dict[int, tuple[float, float]]:
    levels = defaultdict(list)
    for H in report.members:
        levels[len(H)].append(H)
    heights = {size: rank for rank, size in enumerate(sorted(levels))}
    pos = {}
    for size, row in levels.items():
        for j, H in enumerate(row):
            pos[H.mask] = (j - (len(row) - 1) / 2, heights[size])
    return pos


def plot_report(report: CdLatticeReport, path: str | Path) -> Path:
    """Two panels: the CD Hasse diagram, and measure against order for every subgroup."""
    G = report.group
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, (ax_h, ax_m) = plt.subplots(1, 2, figsize=(9, 4))

        pos = _hasse_positions(report)
        for lo, hi in report.hasse_edges:
            (x0, y0), (x1, y1) = pos[lo.mask], pos[hi.mask]
            ax_h.plot([x0, x1], [y0, y1], color="black", lw=0.8, zorder=1)
        for H in report.members:
            x, y = pos[H.mask]
            ax_h.text(x, y, f"{groups.subgroup_label(G, H)}\n|H|={len(H)}", ha="center", va="center",
                      fontsize=7, zorder=2,
                      bbox={"boxstyle": "round", "fc": "white", "ec": MEMBER_COLOR})
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        ax_h.set_xlim(min(xs) - 1, max(xs) + 1)
        ax_h.set_ylim(min(ys) - 0.7, max(ys) + 0.7)
        ax_h.set_axis_off()
        ax_h.set_title(f"CD lattice of {G.descriptor}  (m(G) = {report.max_measure})")

        member_masks = {H.mask for H in report.members}
        pts = [(len(H), report.measures[H], H.mask in member_masks) for H in report.subgroups]
        ax_m.scatter([p[0] for p in pts if not p[2]], [p[1] for p in pts if not p[2]],
                     s=14, color=OTHER_COLOR, label="subgroup")
        ax_m.scatter([p[0] for p in pts if p[2]], [p[1] for p in pts if p[2]],
                     s=30, color=MEMBER_COLOR, marker="D", label="CD member")
        ax_m.axhline(report.max_measure, color=MEMBER_COLOR, lw=0.6, ls="--")
        ax_m.set_xscale("log", base=2)
        ax_m.set_xlabel("|H|")
        ax_m.set_ylabel("|H| |C(H)|")
        ax_m.legend(frameon=False, loc="lower right")

        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path)
        plt.close(fig)
    return path
