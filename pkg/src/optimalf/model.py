"""Core value types for fixed-fraction position sizing.

A trading system is a finite distribution of trade results: outcomes
``t_1..t_N`` (currency units, nonzero, at least one loss) drawn with
probabilities ``p_1..p_N``.  Betting a fixed fraction ``f`` of current
capital scales each trade by the maximal loss, so one draw multiplies
capital by the holding-period return ``1 + f * t_n / t_hat`` where
``t_hat = max(|t_n| : t_n < 0)``.  With ``f < 1`` every holding-period
return stays positive: the worst single trade cannot wipe the account.

Probabilities (and trades) may be exact rationals -- ``fractions.Fraction``
or ``int`` -- in which case downstream combinatorial routines produce exact
results; floats degrade gracefully to float arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

__all__ = [
    "TradeDistribution",
    "check_fraction",
    "expectation",
    "log_growth_rate",
    "twr",
    "outcome_probability",
    "outcomes",
]

PROB_SUM_TOL = 1e-12


def check_fraction(f: float) -> float:
    """Validate an investment fraction; must lie in [0, 1)."""
    if not 0.0 <= f < 1.0:
        raise ValueError(f"investment fraction must lie in [0, 1), got {f!r}")
    return f


@dataclass(frozen=True)
class TradeDistribution:
    """A discrete distribution of trade results.

    ``trades``: nonzero trade results, at least one negative.
    ``probs``: positive probabilities summing to one (exactly when given
    as rationals, within ``1e-12`` otherwise).
    ``max_loss``: the absolute value of the worst losing trade; derived.
    """

    trades: tuple
    probs: tuple
    max_loss: object = None

    def __post_init__(self) -> None:
        trades = tuple(self.trades)
        probs = tuple(self.probs)
        if len(trades) == 0:
            raise ValueError("empty trade distribution")
        if len(trades) != len(probs):
            raise ValueError(
                f"{len(trades)} trades but {len(probs)} probabilities"
            )
        for t in trades:
            if t == 0:
                raise ValueError("trade results must be nonzero")
        losses = [-t for t in trades if t < 0]
        if not losses:
            raise ValueError("need at least one losing trade")
        for p in probs:
            if p <= 0:
                raise ValueError(f"probabilities must be positive, got {p!r}")
        total = sum(probs)
        if all(isinstance(p, Rational) for p in probs):
            if total != 1:
                raise ValueError(f"rational probabilities sum to {total}, not 1")
        elif abs(total - 1) > PROB_SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "trades", trades)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "max_loss", max(losses))

    @classmethod
    def from_counts(cls, trades: Sequence, counts: Sequence[int]) -> "TradeDistribution":
        """Build from occurrence counts; probabilities become exact rationals."""
        counts = [int(c) for c in counts]
        if any(c <= 0 for c in counts):
            raise ValueError("occurrence counts must be positive integers")
        total = sum(counts)
        return cls(tuple(trades), tuple(Fraction(c, total) for c in counts))

    @classmethod
    def uniform(cls, trades: Sequence) -> "TradeDistribution":
        """Equal-probability distribution over the given trades."""
        n = len(trades)
        return cls(tuple(trades), tuple(Fraction(1, n) for _ in range(n)))

    @property
    def n_trades(self) -> int:
        return len(self.trades)

    @property
    def is_exact(self) -> bool:
        """True when every trade and probability is an exact rational."""
        return all(isinstance(t, Rational) for t in self.trades) and all(
            isinstance(p, Rational) for p in self.probs
        )

    def normalized_trades(self) -> tuple[float, ...]:
        """Trades divided by the maximal loss, as floats; each is >= -1."""
        t_hat = self.max_loss
        return tuple(float(t) / float(t_hat) for t in self.trades)

    def prob_floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.probs)


def expectation(dist: TradeDistribution):
    """Expected trade result ``sum(p_n * t_n)``.

    Exact when the distribution is exact.  Positive expectation is what
    makes a system worth playing at all; the caller decides how to gate
    on the sign.
    """
    return sum(p * t for p, t in zip(dist.probs, dist.trades))


def log_growth_rate(dist: TradeDistribution, f: float) -> float:
    """Expected log of the holding-period return at fraction ``f``.

    This is the log of the probability-weighted geometric mean of the
    returns ``1 + f * t_n / t_hat``; the expected per-draw log growth of
    capital.  Finite for every ``f`` in [0, 1).
    """
    check_fraction(f)
    a = dist.normalized_trades()
    p = dist.prob_floats()
    return math.fsum(p_n * math.log1p(f * a_n) for p_n, a_n in zip(p, a))


def twr(
    dist: TradeDistribution,
    f: float,
    path: Sequence[int],
    start: int = 1,
    stop: int | None = None,
) -> float:
    """Wealth relative over positions ``start..stop`` of a draw sequence.

    ``path`` holds 0-based trade indices; ``start``/``stop`` are 1-based
    and inclusive, matching the usual product notation.  An empty range
    (``start > stop``) multiplies nothing and returns 1.
    """
    check_fraction(f)
    m = len(path)
    if stop is None:
        stop = m
    if start < 1 or stop > m:
        raise IndexError(f"range {start}..{stop} out of bounds for path of length {m}")
    if start > stop:
        return 1.0
    a = dist.normalized_trades()
    out = 1.0
    for j in range(start - 1, stop):
        out *= 1.0 + f * a[path[j]]
    return out


def outcome_probability(dist: TradeDistribution, path: Sequence[int]):
    """Probability of one draw sequence; exact under rational probabilities."""
    out = 1
    for idx in path:
        out = out * dist.probs[idx]
    return out


def outcomes(dist: TradeDistribution, m_draws: int) -> Iterator[tuple[int, ...]]:
    """All draw sequences of length ``m_draws`` in odometer order.

    The last position cycles fastest, so enumeration is deterministic and
    splits cleanly into contiguous index ranges for parallel work.
    """
    if m_draws < 0:
        raise ValueError("number of draws must be nonnegative")
    return itertools.product(range(dist.n_trades), repeat=m_draws)
