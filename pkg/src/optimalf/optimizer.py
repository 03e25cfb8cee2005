"""Solvers for weighted log-wealth objectives.

The objective is ``h(f) = sum(q_n * log(1 + f * t_n / t_hat))`` over
``f in [0, 1)`` with nonnegative weights ``q_n``.  With probabilities as
weights this is the classical growth-optimal ("optimal f") problem; with
the drawdown-adjusted weights from :mod:`optimalf.risk_averse` it is the
risk-averse variant.  Either way ``h`` is strictly concave and its
derivative is strictly decreasing, so a sign-change bisection on the
derivative cannot miss, and a few Newton steps polish the root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .model import TradeDistribution, check_fraction

__all__ = [
    "WeightedObjective",
    "OptimalFraction",
    "derivative",
    "objective_value",
    "solve_optimal_f",
    "kelly_fraction",
]

# Stay strictly inside [0, 1): at f = 1 a maximal-loss trade zeroes the
# holding-period return and the log terms blow up.
DOMAIN_EPS = 1e-12


@dataclass(frozen=True)
class WeightedObjective:
    """Weights plus normalized trades defining a log-wealth objective."""

    payoffs: tuple  # t_n / t_hat, each >= -1
    weights: tuple  # q_n >= 0, not all zero

    def __post_init__(self) -> None:
        payoffs = tuple(self.payoffs)
        weights = tuple(self.weights)
        if len(payoffs) != len(weights):
            raise ValueError("payoffs and weights must have equal length")
        if not payoffs:
            raise ValueError("empty objective")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        if not any(w > 0 for w in weights):
            raise ValueError("at least one weight must be positive")
        object.__setattr__(self, "payoffs", payoffs)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_distribution(
        cls, dist: TradeDistribution, weights: Sequence | None = None
    ) -> "WeightedObjective":
        """Objective for ``dist``; probability weights unless given."""
        t_hat = dist.max_loss
        payoffs = tuple(t / t_hat for t in dist.trades)
        if weights is None:
            weights = dist.probs
        return cls(payoffs, tuple(weights))

    def weighted_payoff_sum(self):
        """``sum(q_n * t_n / t_hat)``; its sign decides interior vs f=0.

        Computed on the stored values, so it is exact when weights and
        payoffs are rationals.
        """
        return sum(w * a for w, a in zip(self.weights, self.payoffs))


@dataclass(frozen=True)
class OptimalFraction:
    """Solver result.

    ``status`` is ``"interior"`` for a derivative root in (0, 1),
    ``"zero"`` when the weighted game is unprofitable so f = 0 is optimal,
    and ``"capped"`` when the root sits beyond ``1 - 1e-12`` (possible
    only when the maximal-loss trade carries zero weight).
    """

    fraction: float
    objective_value: float
    status: str

    @property
    def is_interior(self) -> bool:
        return self.status == "interior"


def derivative(obj: WeightedObjective, f: float) -> float:
    """d/df of the objective: ``sum(q_n * a_n / (1 + f * a_n))``.

    Strictly decreasing on [0, 1); at 0 it equals the weighted payoff sum.
    """
    check_fraction(f)
    return math.fsum(
        float(w) * float(a) / (1.0 + f * float(a))
        for w, a in zip(obj.weights, obj.payoffs)
    )


def objective_value(obj: WeightedObjective, f: float) -> float:
    check_fraction(f)
    return math.fsum(
        float(w) * math.log1p(f * float(a))
        for w, a in zip(obj.weights, obj.payoffs)
    )


def _second_derivative(obj: WeightedObjective, f: float) -> float:
    return -math.fsum(
        float(w) * float(a) ** 2 / (1.0 + f * float(a)) ** 2
        for w, a in zip(obj.weights, obj.payoffs)
    )


def solve_optimal_f(obj: WeightedObjective, tol: float = 1e-12) -> OptimalFraction:
    """Maximize the weighted log-wealth objective over [0, 1).

    Returns f = 0 (status ``"zero"``) when the weighted payoff sum is
    nonpositive; otherwise brackets the unique derivative root by
    bisection and polishes it with Newton steps.  Raises ``ValueError``
    when no losing trade carries positive weight: the objective then grows
    without bound toward f = 1 and there is nothing to solve.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if not any(w > 0 and a < 0 for w, a in zip(obj.weights, obj.payoffs)):
        raise ValueError(
            "no losing trade has positive weight; objective is unbounded on [0, 1)"
        )
    if obj.weighted_payoff_sum() <= 0:
        return OptimalFraction(0.0, 0.0, "zero")

    hi = 1.0 - DOMAIN_EPS
    if derivative(obj, hi) > 0.0:
        return OptimalFraction(hi, objective_value(obj, hi), "capped")

    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if derivative(obj, mid) > 0.0:
            lo = mid
        else:
            hi = mid

    f = 0.5 * (lo + hi)
    for _ in range(3):
        g = derivative(obj, f)
        gp = _second_derivative(obj, f)
        if gp == 0.0:
            break
        step = g / gp
        nxt = f - step
        if not lo <= nxt <= hi:
            break
        f = nxt
        if abs(step) < 1e-17:
            break
    return OptimalFraction(f, objective_value(obj, f), "interior")


def kelly_fraction(p: float, b: float) -> float:
    """Closed-form optimal fraction for a two-outcome game.

    Win ``b`` units per unit staked with probability ``p``, lose the stake
    with probability ``1 - p``: the growth-optimal fraction is
    ``p - (1 - p) / b``.  May be negative for unprofitable games; callers
    clamp or report as they see fit.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"win probability must lie in (0, 1), got {p!r}")
    if b <= 0.0:
        raise ValueError(f"payout ratio must be positive, got {b!r}")
    return p - (1.0 - p) / b
