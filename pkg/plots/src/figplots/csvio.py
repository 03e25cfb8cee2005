"""CSV loading shared by the figure scripts: header checks, no math."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")


class InputError(ValueError):
    """Missing file, wrong header, or no data rows."""


def read_columns(path: str | Path, required: tuple[str, ...] = ()) -> dict[str, list[float]]:
    """Read a CSV into per-column float lists, validating the header.

    Raises :class:`InputError` before any figure is touched, so a bad
    input never produces a half-written image.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"no such CSV file: {path}")
    with open(path, newline="") as stream:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty file") from None
        header = [name.strip() for name in header]
        missing = [name for name in required if name not in header]
        if missing:
            raise InputError(
                f"{path}: header {header} is missing column(s) {missing}"
            )
        columns: dict[str, list[float]] = {name: [] for name in header}
        for row in reader:
            if not row or all(cell.strip() == "" for cell in row):
                continue
            for name, cell in zip(header, row):
                columns[name].append(float(cell))
    if not columns or not next(iter(columns.values())):
        raise InputError(f"{path}: no data rows")
    return columns


def run_script(render, argv, extra_args=()) -> int:
    """Shared argparse wrapper: ``--in/--out/--title`` plus extras.

    The render callable gets every parsed option except ``--out`` and must
    return a matplotlib figure; saving happens here, only after rendering
    succeeded.
    """
    import argparse
    import sys

    parser = argparse.ArgumentParser(description=render.__doc__)
    parser.add_argument("--in", dest="input", required=True, help="input CSV")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--title", default="", help="figure title")
    for flags, kwargs in extra_args:
        parser.add_argument(*flags, **kwargs)
    args = parser.parse_args(argv)
    kwargs = {k: v for k, v in vars(args).items() if k != "out"}
    try:
        fig = render(**kwargs)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    fig.savefig(args.out, dpi=120)
    print(f"wrote {args.out}")
    return 0
