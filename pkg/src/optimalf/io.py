"""Trade-distribution file ingestion and CSV emission.

Accepted inputs:

* CSV with header ``trade,prob`` -- probabilities as reals or exact
  rationals written like ``1/2``;
* CSV with header ``trade,count`` -- positive integer occurrence counts,
  normalized to exact rational probabilities;
* JSON object ``{"trades": [...], "probs": [...]}`` (or ``"counts"``),
  with rational strings allowed in either list.

Numbers written as integers stay integers and strings with a slash become
``Fraction``, so files round-trip into exact mode whenever they can.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .model import TradeDistribution

__all__ = ["load_distribution", "parse_number", "format_number", "write_csv"]


def parse_number(text):
    """Parse ``"3"`` -> int, ``"1/2"`` -> Fraction, ``"0.5"`` -> float."""
    if isinstance(text, (int, float, Fraction)):
        return text
    s = str(text).strip()
    if "/" in s:
        return Fraction(s)
    try:
        return int(s)
    except ValueError:
        return float(s)


def _from_rows(trades: list, probs: list | None, counts: list | None) -> TradeDistribution:
    if counts is not None:
        return TradeDistribution.from_counts(trades, counts)
    return TradeDistribution(tuple(trades), tuple(probs))


def _load_csv(text: str) -> TradeDistribution:
    reader = csv.DictReader(io.StringIO(text))
    fields = [name.strip() for name in (reader.fieldnames or [])]
    if "trade" not in fields or not ("prob" in fields or "count" in fields):
        raise ValueError(
            f"expected CSV header 'trade,prob' or 'trade,count', got {fields}"
        )
    use_counts = "count" in fields
    trades, weights = [], []
    for row in reader:
        if row["trade"] is None or str(row["trade"]).strip() == "":
            continue
        trades.append(parse_number(row["trade"]))
        weights.append(
            int(str(row["count"]).strip()) if use_counts else parse_number(row["prob"])
        )
    if not trades:
        raise ValueError("no data rows in distribution file")
    if use_counts:
        return _from_rows(trades, None, weights)
    return _from_rows(trades, weights, None)


def _load_json(text: str) -> TradeDistribution:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "trades" not in obj:
        raise ValueError('expected a JSON object with a "trades" list')
    trades = [parse_number(t) for t in obj["trades"]]
    if "probs" in obj:
        return _from_rows(trades, [parse_number(p) for p in obj["probs"]], None)
    if "counts" in obj:
        return _from_rows(trades, None, [int(c) for c in obj["counts"]])
    raise ValueError('JSON distribution needs a "probs" or "counts" list')


def load_distribution(path: str | Path) -> TradeDistribution:
    """Load a trade distribution from a CSV or JSON file."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return _load_json(text)
    return _load_csv(text)


def format_number(value, digits: int = 12) -> str:
    """Locale-independent numeric cell: dot decimal, fixed significant digits."""
    if isinstance(value, int):
        return str(value)
    return format(float(value), f".{digits}g")


def write_csv(
    target, header: Sequence[str], rows: Iterable[Sequence], digits: int = 12
) -> None:
    """Write rows with uniformly formatted numbers.

    ``target`` may be a path or an open text stream.  Output is plain
    comma-separated with a header row and ``\n`` line endings, so repeated
    runs with identical inputs produce byte-identical files.
    """
    def emit(stream) -> None:
        stream.write(",".join(header) + "\n")
        for row in rows:
            stream.write(
                ",".join(
                    cell if isinstance(cell, str) else format_number(cell, digits)
                    for cell in row
                )
                + "\n"
            )

    if hasattr(target, "write"):
        emit(target)
    else:
        with open(target, "w", newline="") as stream:
            emit(stream)
