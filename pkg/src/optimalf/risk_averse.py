"""Drawdown-aware optimal fractions.

The growth-optimal fraction maximizes expected log wealth, which splits
into chance (up-side) plus risk (down-side).  Swapping the down-side for
the harsher current-drawdown series and keeping the small-f linearization
gives a weighted objective with per-trade weights
``q_n = U_n + sum_l L_n[l]`` -- up weights plus total post-peak drawdown
weights.  Solving it yields a smaller, more defensive fraction; sweeping
over the horizon M and taking the minimum gives the conservative sizing
a drawdown-averse trader would actually run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import coefficients as coeff
from .model import TradeDistribution
from .optimizer import OptimalFraction, WeightedObjective, solve_optimal_f

__all__ = ["RiskAverseResult", "SweepResult", "risk_averse_fraction", "sweep"]


@dataclass(frozen=True)
class RiskAverseResult:
    """Risk-averse solution for one horizon, with the classical comparison."""

    m_draws: int
    weights: tuple
    fraction: float
    objective_value: float
    status: str
    classical: OptimalFraction

    @property
    def is_boundary(self) -> bool:
        return self.status == "zero"


@dataclass(frozen=True)
class SweepResult:
    results: tuple[RiskAverseResult, ...]
    min_fraction: float
    argmin_m: int


def risk_averse_fraction(
    dist: TradeDistribution,
    m_draws: int,
    method: str = "auto",
    tol: float = 1e-12,
    path_cap: int = coeff.DEFAULT_PATH_CAP,
    bound: int = coeff.DEFAULT_SCALED_BOUND,
) -> RiskAverseResult:
    """Solve the drawdown-penalized sizing problem at horizon ``m_draws``.

    ``method`` is forwarded to the coefficient computation
    (``"enumeration"``, ``"dp"`` or ``"auto"``).  When the weighted trade
    sum is nonpositive the optimal fraction is exactly 0 and the result is
    flagged via ``status == "zero"``.
    """
    cs = coeff.coefficient_set(
        dist, m_draws, method=method, path_cap=path_cap, bound=bound
    )
    weights = cs.risk_averse_weights()
    t_hat = dist.max_loss
    payoffs = tuple(t / t_hat for t in dist.trades)
    solution = solve_optimal_f(WeightedObjective(payoffs, weights), tol=tol)
    classical = solve_optimal_f(WeightedObjective.from_distribution(dist), tol=tol)
    return RiskAverseResult(
        m_draws=m_draws,
        weights=weights,
        fraction=solution.fraction,
        objective_value=solution.objective_value,
        status=solution.status,
        classical=classical,
    )


def sweep(
    dist: TradeDistribution,
    m_values: Sequence[int],
    method: str = "auto",
    tol: float = 1e-12,
    path_cap: int = coeff.DEFAULT_PATH_CAP,
    bound: int = coeff.DEFAULT_SCALED_BOUND,
) -> SweepResult:
    """Risk-averse fractions across horizons plus the conservative minimum.

    Output order follows ``m_values``.  The minimum fraction over the
    sweep is what a defensive sizing policy uses: no horizon in the sweep
    would have wanted less.
    """
    if not m_values:
        raise ValueError("empty list of horizons")
    results = tuple(
        risk_averse_fraction(
            dist, m, method=method, tol=tol, path_cap=path_cap, bound=bound
        )
        for m in m_values
    )
    best = min(results, key=lambda r: r.fraction)
    return SweepResult(
        results=results, min_fraction=best.fraction, argmin_m=best.m_draws
    )
