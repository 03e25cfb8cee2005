"""Blood curve: current relative drawdown over time, filled below zero."""

from __future__ import annotations

import sys

from .csvio import read_columns, run_script


def render(input, title=""):
    """Fill the ``dd`` column under its zero line."""
    import matplotlib.pyplot as plt

    columns = read_columns(input, required=("t", "dd"))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.fill_between(columns["t"], columns["dd"], 0.0, color="firebrick", alpha=0.85)
    ax.plot(columns["t"], columns["dd"], color="darkred", linewidth=0.4)
    ax.set_xlabel("t")
    ax.set_ylabel("current relative drawdown")
    ax.set_ylim(-1.0, 0.02)
    ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    return run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
