"""Figure rendering for staircase sweeps."""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .rational import Rat  # noqa: E402


def render_staircase(
    rows: list[tuple[Rat, Rat, Rat]], path: str | Path
) -> None:
    """Plot bracketed staircase values c(a) against the volume bound.

    ``rows`` holds (a, lo, hi) triples; the bracket midpoint is drawn
    since the bracket width is below plotting resolution.
    """
    xs = [float(a) for a, _, _ in rows]
    mids = [(float(lo) + float(hi)) / 2 for _, lo, hi in rows]
    bound = [math.sqrt(x) for x in xs]

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(xs, mids, lw=1.6, color="tab:blue", label="optimal ball capacity c(a)")
    ax.plot(xs, bound, "--", lw=1.1, color="tab:gray", label="volume bound $\\sqrt{a}$")
    ax.set_xlabel("ellipsoid aspect a")
    ax.set_ylabel("ball capacity")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    ax.legend(frameon=False, loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
