"""Monte Carlo equity simulation under fixed-fraction sizing.

Draws trades i.i.d. from a distribution and compounds capital by the
holding-period return of each draw.  Capital is tracked in log space:
at aggressive fractions ten thousand multiplicative steps span hundreds
of orders of magnitude, far beyond float range.

Randomness comes from numpy's PCG64 via ``default_rng([seed, run])``:
the run index is mixed into the seed material, so every run is its own
reproducible stream and concurrent execution cannot perturb any path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .model import TradeDistribution, check_fraction

__all__ = [
    "SimulationConfig",
    "EquityPath",
    "simulate",
    "drawdown_histogram",
]


@dataclass(frozen=True)
class SimulationConfig:
    dist: TradeDistribution
    fraction: float
    steps: int = 10_000
    starting_capital: float = 1000.0
    seed: int = 0
    runs: int = 1

    def __post_init__(self) -> None:
        check_fraction(self.fraction)
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.starting_capital <= 0:
            raise ValueError("starting capital must be positive")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")


@dataclass(frozen=True)
class EquityPath:
    """One simulated capital trajectory (length steps + 1, t=0 included).

    ``drawdown`` is the current relative drawdown ``c_t / max(c_s, s<=t) - 1``,
    always in (-1, 0] and exactly 0 whenever capital sits at its running
    peak -- the "blood curve" when plotted over time.
    """

    run: int
    draws: np.ndarray
    capital: np.ndarray
    log_equity: np.ndarray
    running_max: np.ndarray
    drawdown: np.ndarray

    @property
    def max_drawdown(self) -> float:
        return float(self.drawdown.min())

    @property
    def mean_log_increment(self) -> float:
        """Per-step mean log growth over the whole path."""
        steps = len(self.log_equity) - 1
        return float(self.log_equity[-1] - self.log_equity[0]) / steps


def _single_run(config: SimulationConfig, run: int) -> EquityPath:
    rng = np.random.default_rng([config.seed, run])
    p = np.array(config.dist.prob_floats())
    cum = np.cumsum(p)
    cum[-1] = 1.0  # guard against float shortfall in the last bin
    draws = np.searchsorted(cum, rng.random(config.steps), side="right")

    log_hpr = np.log1p(config.fraction * np.array(config.dist.normalized_trades()))
    rel = np.concatenate(([0.0], np.cumsum(log_hpr[draws])))
    peak = np.maximum.accumulate(rel)
    log0 = np.log(config.starting_capital)
    # expm1 underflows to exactly -1 past ~745 log units of deficit; pin
    # the open bound so dd stays in (-1, 0] even at absurd fractions.
    drawdown = np.maximum(np.expm1(rel - peak), np.nextafter(-1.0, 0.0))
    return EquityPath(
        run=run,
        draws=draws,
        capital=config.starting_capital * np.exp(rel),
        log_equity=log0 + rel,
        running_max=config.starting_capital * np.exp(peak),
        drawdown=drawdown,
    )


def simulate(config: SimulationConfig) -> list[EquityPath]:
    """All runs of the configured experiment, one independent stream each.

    Identical config (seed included) reproduces every array bit for bit.
    """
    return [_single_run(config, r) for r in range(config.runs)]


def drawdown_histogram(
    paths: Sequence[EquityPath], bin_width: float = 0.01
) -> tuple[np.ndarray, np.ndarray]:
    """Relative-frequency histogram of drawdowns pooled over time and runs.

    Bins partition (-1, 0] at ``bin_width`` resolution; the returned
    ``(edges, freq)`` has ``len(edges) == len(freq) + 1`` and the
    frequencies sum to 1.  Pooling over time matches how a trader
    experiences drawdown: every bar of the blood curve counts, not just
    the terminal value.
    """
    if not paths:
        raise ValueError("need at least one path")
    n_bins = int(round(1.0 / bin_width))
    edges = np.linspace(-1.0, 0.0, n_bins + 1)
    pooled = np.concatenate([p.drawdown for p in paths])
    counts, _ = np.histogram(pooled, bins=edges)
    return edges, counts / pooled.size
