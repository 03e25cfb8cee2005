"""Exact evaluation over the full space of draw sequences.

For ``M`` i.i.d. draws there are ``N**M`` sequences.  Each sequence's
log wealth relative ``z`` splits two ways:

* ``up + down = z`` -- positive part vs negative part of ``z``;
* ``runup + drawdown = z`` -- log rise to the running peak of the equity
  curve vs log decline from that peak to the end.

``peak_index`` locates the peak: the earliest time the running wealth
relative attains its maximum, provided that maximum exceeds 1 (otherwise
0, meaning the curve never rose above its start).  Probability-weighted
sums of these per-path quantities are the exact expectations that the
fast small-f coefficient formulas are validated against.

Enumeration cost is ``O(N**M * M)``; the cap keeps it to roughly ten
seconds of vectorized work.  Chunks of the odometer are evaluated with
numpy (pairwise summation) and combined with compensated summation, so
results do not depend on the chunk split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceededError
from .model import TradeDistribution, check_fraction

__all__ = [
    "PathDecomposition",
    "ExactExpectations",
    "peak_index",
    "decompose",
    "exact_expectations",
    "exact_expectation_curve",
]

# Two running maxima closer than this are a tie; the earlier index wins.
TIE_EPS = 1e-14

DEFAULT_ENUMERATION_CAP = 20_000_000
DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class PathDecomposition:
    """Per-path log series at a fixed fraction.

    ``log_twr`` is the full-path log wealth relative; ``up``/``down`` its
    positive/negative parts; ``runup`` the log rise to the peak at
    position ``peak`` (0 if the path never exceeds its start); ``drawdown``
    the log of the remaining decline, always <= ``down`` <= 0.
    """

    path: tuple[int, ...]
    fraction: float
    peak: int
    log_twr: float
    up: float
    down: float
    drawdown: float
    runup: float


@dataclass(frozen=True)
class ExactExpectations:
    """Probability-weighted means of the per-path log series."""

    log_twr: float
    up: float
    down: float
    drawdown: float
    runup: float


def _running_log(dist: TradeDistribution, f: float, path: Sequence[int]) -> list[float]:
    a = dist.normalized_trades()
    out = []
    s = 0.0
    for idx in path:
        s += math.log1p(f * a[idx])
        out.append(s)
    return out


def _peak_from_running(running: Sequence[float]) -> int:
    if not running:
        return 0
    top = max(running)
    if top <= 0.0:
        return 0
    for pos, value in enumerate(running):
        if value >= top - TIE_EPS:
            return pos + 1
    return len(running)  # unreachable


def peak_index(dist: TradeDistribution, f: float, path: Sequence[int]) -> int:
    """Earliest 1-based position of the running-wealth maximum, if > 1.

    Returns 0 when the running wealth relative never exceeds 1.  Running
    maxima within ``1e-14`` of each other count as equal and the earliest
    position wins, so float noise cannot push the peak later.
    """
    check_fraction(f)
    return _peak_from_running(_running_log(dist, f, path))


def decompose(dist: TradeDistribution, f: float, path: Sequence[int]) -> PathDecomposition:
    """Split one path's log wealth relative into its four log series."""
    check_fraction(f)
    running = _running_log(dist, f, path)
    peak = _peak_from_running(running)
    z = running[-1] if running else 0.0
    runup = running[peak - 1] if peak >= 1 else 0.0
    return PathDecomposition(
        path=tuple(path),
        fraction=f,
        peak=peak,
        log_twr=z,
        up=max(z, 0.0),
        down=min(z, 0.0),
        drawdown=z - runup,
        runup=runup,
    )


def _check_cap(n_trades: int, m_draws: int, cap: int) -> int:
    total = n_trades**m_draws
    if total > cap:
        raise CapExceededError(
            f"{n_trades}**{m_draws} = {total} paths exceeds the enumeration cap "
            f"({cap}); use the coefficient dynamic program or Monte Carlo instead"
        )
    return total


def _iter_digit_chunks(
    n_trades: int, m_draws: int, chunk: int
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (digits, probability-slot) arrays for odometer index ranges.

    ``digits`` has shape (chunk, m_draws) with the first draw in column 0
    (most significant digit), matching ``model.outcomes`` order.
    """
    total = n_trades**m_draws
    place = n_trades ** np.arange(m_draws - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        lin = np.arange(start, stop, dtype=np.int64)
        digits = (lin[:, None] // place[None, :]) % n_trades
        yield digits, lin


def _chunk_stats(
    digits: np.ndarray, log_hpr: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-path (z, up, down, drawdown, runup) for one digit chunk."""
    steps = log_hpr[digits]
    running = np.cumsum(steps, axis=1)
    z = running[:, -1]
    top = running.max(axis=1)
    has_peak = top > 0.0
    first = (running >= (top[:, None] - TIE_EPS)).argmax(axis=1)
    runup = np.where(has_peak, running[np.arange(len(z)), first], 0.0)
    drawdown = z - runup
    return z, np.maximum(z, 0.0), np.minimum(z, 0.0), drawdown, runup


def exact_expectation_curve(
    dist: TradeDistribution,
    m_draws: int,
    f_values: Sequence[float],
    cap: int = DEFAULT_ENUMERATION_CAP,
    chunk: int = DEFAULT_CHUNK,
) -> list[ExactExpectations]:
    """Exact expectations at each fraction, sharing one enumeration pass.

    The outer loop walks odometer chunks once; path probabilities and
    digit decoding are reused across all fractions.
    """
    if m_draws < 1:
        raise ValueError("need at least one draw")
    f_list = [check_fraction(f) for f in f_values]
    _check_cap(dist.n_trades, m_draws, cap)

    a = np.array(dist.normalized_trades())
    p = np.array(dist.prob_floats())
    log_hpr_by_f = [np.log1p(f * a) for f in f_list]

    partials: list[list[list[float]]] = [[[] for _ in range(5)] for _ in f_list]
    for digits, _ in _iter_digit_chunks(dist.n_trades, m_draws, chunk):
        prob = np.prod(p[digits], axis=1)
        for fi, log_hpr in enumerate(log_hpr_by_f):
            for slot, field in enumerate(_chunk_stats(digits, log_hpr)):
                partials[fi][slot].append(float(prob @ field))

    return [
        ExactExpectations(
            log_twr=math.fsum(parts[0]),
            up=math.fsum(parts[1]),
            down=math.fsum(parts[2]),
            drawdown=math.fsum(parts[3]),
            runup=math.fsum(parts[4]),
        )
        for parts in partials
    ]


def exact_expectations(
    dist: TradeDistribution,
    f: float,
    m_draws: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
    chunk: int = DEFAULT_CHUNK,
) -> ExactExpectations:
    """Exact expectations of the four log series plus the total."""
    return exact_expectation_curve(dist, m_draws, [f], cap=cap, chunk=chunk)[0]
