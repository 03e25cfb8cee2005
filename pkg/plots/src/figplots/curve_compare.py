"""Overlay expectation curves with their linearized approximations.

Input: any CSV whose first column is the fraction grid (``f``); every
other column becomes one line.  Columns named ``*_approx`` draw dashed so
exact and approximation pairs are visually distinguishable.
"""

from __future__ import annotations

import sys

from .csvio import read_columns, run_script


def render(input, title=""):
    """Line chart of all CSV columns against the first one."""
    import matplotlib.pyplot as plt

    columns = read_columns(input)
    names = list(columns)
    x_name, y_names = names[0], names[1:]
    x = columns[x_name]

    fig, ax = plt.subplots(figsize=(8, 5))
    for name in y_names:
        style = "--" if name.endswith("_approx") else "-"
        ax.plot(x, columns[name], style, label=name, linewidth=1.6)
    ax.set_xlabel(x_name)
    ax.axhline(0.0, color="black", linewidth=0.6)
    ax.legend(loc="best", fontsize=9)
    ax.set_title(title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    return run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
