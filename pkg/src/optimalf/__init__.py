"""Fixed-fraction position sizing toolkit.

Computes the growth-optimal fraction of capital to risk per trade for a
discrete trade distribution, splits expected log wealth into chance and
risk parts (up vs down side, run-up vs current drawdown), and solves the
drawdown-penalized risk-averse sizing problem.  An exact outcome-space
evaluator and a seeded Monte Carlo simulator validate the fast routes.
"""

from .coefficients import (
    CoefficientSet,
    SmallFExpectations,
    coefficient_set,
    drawdown_coefficients_dp,
    drawdown_coefficients_enum,
    integer_scaled_trades,
    rational_trades,
    smallf_expectations,
    updown_coefficients,
)
from .errors import CapExceededError, MethodError, ScalingError
from .io import load_distribution
from .model import (
    TradeDistribution,
    check_fraction,
    expectation,
    log_growth_rate,
    outcome_probability,
    outcomes,
    twr,
)
from .optimizer import (
    OptimalFraction,
    WeightedObjective,
    derivative,
    kelly_fraction,
    objective_value,
    solve_optimal_f,
)
from .outcome_space import (
    ExactExpectations,
    PathDecomposition,
    decompose,
    exact_expectation_curve,
    exact_expectations,
    peak_index,
)
from .risk_averse import RiskAverseResult, SweepResult, risk_averse_fraction, sweep
from .simulator import EquityPath, SimulationConfig, drawdown_histogram, simulate

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CoefficientSet",
    "EquityPath",
    "ExactExpectations",
    "MethodError",
    "OptimalFraction",
    "PathDecomposition",
    "RiskAverseResult",
    "ScalingError",
    "SimulationConfig",
    "SmallFExpectations",
    "SweepResult",
    "TradeDistribution",
    "WeightedObjective",
    "check_fraction",
    "coefficient_set",
    "decompose",
    "derivative",
    "drawdown_coefficients_dp",
    "drawdown_coefficients_enum",
    "drawdown_histogram",
    "exact_expectation_curve",
    "exact_expectations",
    "expectation",
    "integer_scaled_trades",
    "kelly_fraction",
    "load_distribution",
    "log_growth_rate",
    "objective_value",
    "outcome_probability",
    "outcomes",
    "peak_index",
    "rational_trades",
    "risk_averse_fraction",
    "simulate",
    "smallf_expectations",
    "solve_optimal_f",
    "sweep",
    "twr",
    "updown_coefficients",
]
