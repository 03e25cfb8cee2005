"""Equity curve over time (log scale column straight from the CSV)."""

from __future__ import annotations

import sys

from .csvio import read_columns, run_script


def render(input, title="", column="log_equity"):
    """Plot one capital-trajectory column against ``t``."""
    import matplotlib.pyplot as plt

    columns = read_columns(input, required=("t", column))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(columns["t"], columns[column], color="black", linewidth=0.8)
    ax.set_xlabel("t")
    ax.set_ylabel(column)
    ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    extra = ((("--column",), dict(default="log_equity", help="y column name")),)
    return run_script(render, argv, extra)


if __name__ == "__main__":
    sys.exit(main())
