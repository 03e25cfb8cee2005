"""Drawdown distribution: bar chart of the binned blood-curve frequencies."""

from __future__ import annotations

import sys

from .csvio import read_columns, run_script


def render(input, title=""):
    """Bars at each bin's left edge with the CSV's frequencies."""
    import matplotlib.pyplot as plt

    columns = read_columns(input, required=("bin", "frequency"))
    bins = columns["bin"]
    width = (bins[1] - bins[0]) if len(bins) > 1 else 0.01

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(
        bins,
        columns["frequency"],
        width=width,
        align="edge",
        color="firebrick",
        edgecolor="none",
    )
    ax.set_xlabel("current relative drawdown")
    ax.set_ylabel("relative frequency")
    ax.set_title(title)
    ax.grid(alpha=0.3, axis="y")
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    return run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
