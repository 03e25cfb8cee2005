"""Fraction-independent coefficients of the small-f log-series expectations.

For small fractions every expectation of the four log series collapses to
a linear combination ``sum(c_n * log(1 + f * t_n / t_hat))``.  Which paths
count as winners, and where each path's equity peak sits, is then decided
by exact trade sums instead of f-dependent log sums:

* up/down weights ``U_n``/``D_n`` aggregate count vectors ``x`` of the
  multinomial (``sum(x) = M``) by the sign of ``sum(x_i * t_i)``: strictly
  positive goes to the up side, nonpositive to the down side, each count
  vector contributing ``P(x) * multinomial(M; x) * x_n``.
* runup/drawdown weights ``R_n[l]``/``L_n[l]`` aggregate whole paths by
  their peak position ``l``: a path peaks at ``l`` exactly when every
  suffix sum of trades inside ``1..l`` is positive and every prefix sum
  inside ``l+1..M`` is nonpositive.  ``R`` counts symbols before the peak,
  ``L`` after it.

All comparisons run on exact rational/integer trade sums, so boundary
cases (sums equal to zero) never flip on float noise.  With rational
probabilities the weights themselves are exact ``Fraction`` values.

Two routes compute the peak-position weights: brute-force enumeration of
all ``N**M`` paths, and a dynamic program that exploits the independence
of the two segments -- the constraint on ``1..l`` and the constraint on
``l+1..M`` involve disjoint i.i.d. draws, so the constrained expectation
factorizes into per-segment tables indexed by exact integer partial sums.
The DP reaches M in the hundreds where enumeration stops around twenty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .errors import CapExceededError, ScalingError
from .model import TradeDistribution, check_fraction, outcomes

__all__ = [
    "CoefficientSet",
    "SmallFExpectations",
    "rational_trades",
    "integer_scaled_trades",
    "updown_coefficients",
    "drawdown_coefficients_enum",
    "drawdown_coefficients_dp",
    "coefficient_set",
    "smallf_expectations",
]

DEFAULT_COMPOSITION_CAP = 2_000_000
DEFAULT_PATH_CAP = 1 << 20
DEFAULT_SCALED_BOUND = 64
DEFAULT_MAX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class CoefficientSet:
    """Complete weight set for one (distribution, M) instance.

    ``up``/``down`` have length N.  ``drawdown``/``runup`` are (M+1) x N,
    row ``l`` holding the weights of paths peaking at position ``l``; the
    last drawdown row and the first runup row are zero by construction
    (nothing after a terminal peak, nothing before a missing one).
    ``method`` records how the peak-position weights were computed.
    """

    m_draws: int
    n_trades: int
    up: tuple
    down: tuple
    drawdown: tuple[tuple, ...]
    runup: tuple[tuple, ...]
    method: str

    def sum_drawdown(self) -> tuple:
        return tuple(sum(row[n] for row in self.drawdown) for n in range(self.n_trades))

    def sum_runup(self) -> tuple:
        return tuple(sum(row[n] for row in self.runup) for n in range(self.n_trades))

    def risk_averse_weights(self) -> tuple:
        """Per-trade weights ``U_n + sum_l L_n[l]`` of the risk-averse objective."""
        lam = self.sum_drawdown()
        return tuple(u + l for u, l in zip(self.up, lam))


@dataclass(frozen=True)
class SmallFExpectations:
    """The four linear-combination values at one fraction."""

    up: float
    down: float
    drawdown: float
    runup: float


def rational_trades(
    dist: TradeDistribution, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> tuple[Fraction, ...]:
    """Exact rational view of the trades.

    Ints and ``Fraction`` values pass through; a float is snapped to the
    nearest rational with denominator <= ``max_denominator``, accepted
    only when that rational rounds back to the identical double (so 0.1
    becomes 1/10 and float(1/3) becomes 1/3, but pi has no form).  Raises
    ``ScalingError`` otherwise.
    """
    out = []
    for t in dist.trades:
        if isinstance(t, Rational):
            out.append(Fraction(t))
            continue
        approx = Fraction(t).limit_denominator(max_denominator)
        if float(approx) != float(t):
            raise ScalingError(
                f"trade {t!r} has no rational form with denominator <= {max_denominator}"
            )
        out.append(approx)
    return tuple(out)


def _classification_trades(dist: TradeDistribution) -> tuple:
    """Trades used in sign comparisons: exact rationals when possible.

    Falls back to plain floats for trades with no small rational form;
    sign tests then carry ordinary float error, which only matters on
    exact-boundary sums that irrational trades cannot produce anyway.
    """
    try:
        return rational_trades(dist)
    except ScalingError:
        return tuple(float(t) for t in dist.trades)


def integer_scaled_trades(
    dist: TradeDistribution,
    bound: int = DEFAULT_SCALED_BOUND,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> tuple[int, ...]:
    """Trades rescaled by their common denominator to integers.

    Scaling preserves every sign of every partial sum, which is all the
    peak classification looks at.  Raises ``ScalingError`` when a scaled
    trade would exceed ``bound`` (state spaces would grow too wide).
    """
    rats = rational_trades(dist, max_denominator)
    scale = math.lcm(*(r.denominator for r in rats))
    ints = tuple(int(r * scale) for r in rats)
    worst = max(abs(v) for v in ints)
    if worst > bound:
        raise ScalingError(
            f"scaled trade magnitude {worst} exceeds bound {bound}; "
            "raise the bound or fall back to enumeration"
        )
    return ints


def _compositions(total: int, parts: int):
    """Nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _exact_inputs(dist: TradeDistribution) -> bool:
    return all(isinstance(p, Rational) for p in dist.probs)


def updown_coefficients(
    dist: TradeDistribution,
    m_draws: int,
    cap: int = DEFAULT_COMPOSITION_CAP,
) -> tuple[tuple, tuple]:
    """Up-side and down-side weights ``(U, D)`` for ``m_draws`` draws.

    Enumerates count vectors (compositions of M into N parts), not paths:
    ``comb(M + N - 1, N - 1)`` terms, 101 of them for N=2, M=100.  Exact
    ``Fraction`` output under rational probabilities; under float
    probabilities each term is built in log space so large M cannot
    overflow.
    """
    if m_draws < 1:
        raise ValueError("need at least one draw")
    n = dist.n_trades
    n_vectors = math.comb(m_draws + n - 1, n - 1)
    if n_vectors > cap:
        raise CapExceededError(
            f"{n_vectors} count vectors exceed the cap ({cap})"
        )
    trades = _classification_trades(dist)
    exact = _exact_inputs(dist)
    zero = Fraction(0) if exact else 0.0
    up = [zero] * n
    down = [zero] * n
    if exact:
        probs = [Fraction(p) for p in dist.probs]
        fact_m = math.factorial(m_draws)
    else:
        log_p = [math.log(float(p)) for p in dist.probs]
    lg_m = math.lgamma(m_draws + 1)

    for x in _compositions(m_draws, n):
        if exact:
            term = Fraction(fact_m)
            for x_i, p_i in zip(x, probs):
                term = term * p_i**x_i / math.factorial(x_i)
        else:
            log_term = lg_m
            for x_i, lp_i in zip(x, log_p):
                log_term += x_i * lp_i - math.lgamma(x_i + 1)
            term = math.exp(log_term)
        side = up if sum(x_i * t_i for x_i, t_i in zip(x, trades)) > 0 else down
        for i in range(n):
            if x[i]:
                side[i] += term * x[i]
    return tuple(up), tuple(down)


def _peak_of_trade_sums(path: Sequence[int], trades: Sequence) -> int:
    """Peak position by exact running trade sums (the small-f limit).

    First strict maximum of the running sum if that maximum is positive,
    else 0.  Keeping only strict improvements pins ties to the earliest
    position.
    """
    best = 0
    best_pos = 0
    running = 0
    for pos, idx in enumerate(path, start=1):
        running = running + trades[idx]
        if running > best:
            best = running
            best_pos = pos
    return best_pos


def drawdown_coefficients_enum(
    dist: TradeDistribution,
    m_draws: int,
    cap: int = DEFAULT_PATH_CAP,
) -> tuple[tuple[tuple, ...], tuple[tuple, ...]]:
    """Peak-position weights ``(L, R)`` by exhaustive path enumeration.

    Every path lands in exactly one peak row; the classifier runs on
    exact trade sums.  Intended as the oracle for the dynamic program and
    for small instances; cost is ``O(N**M * M)``.
    """
    if m_draws < 1:
        raise ValueError("need at least one draw")
    n = dist.n_trades
    total = n**m_draws
    if total > cap:
        raise CapExceededError(
            f"{n}**{m_draws} = {total} paths exceeds the cap ({cap}); "
            "use the dynamic program"
        )
    trades = _classification_trades(dist)
    exact = _exact_inputs(dist)
    zero = Fraction(0) if exact else 0.0
    probs = dist.probs if exact else dist.prob_floats()

    lam = [[zero] * n for _ in range(m_draws + 1)]
    run = [[zero] * n for _ in range(m_draws + 1)]
    for path in outcomes(dist, m_draws):
        prob = 1 if exact else 1.0
        for idx in path:
            prob = prob * probs[idx]
        peak = _peak_of_trade_sums(path, trades)
        lam_row = lam[peak]
        run_row = run[peak]
        for pos, idx in enumerate(path, start=1):
            if pos <= peak:
                run_row[idx] += prob
            else:
                lam_row[idx] += prob
    return (
        tuple(tuple(row) for row in lam),
        tuple(tuple(row) for row in run),
    )


def _segment_tables(
    ints: Sequence[int], probs: Sequence, m_draws: int, keep_positive: bool, exact: bool
) -> tuple[list, list[list]]:
    """Forward DP over path length with the partial trade sum as state.

    ``keep_positive`` selects the constraint: every partial sum > 0
    (reversed run-up segment; reversal is harmless because draws are
    i.i.d. and symbol counts ignore order) or every partial sum <= 0
    (post-peak segment).  Returns, per length ``j`` in 0..M, the total
    surviving probability mass and the mass-weighted expected count of
    each symbol.
    """
    n = len(ints)
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    totals = [one]
    counts: list[list] = [[zero] * n]
    frontier: dict[int, tuple] = {0: (one, tuple([zero] * n))}
    for _ in range(m_draws):
        nxt: dict[int, list] = {}
        for state, (mass, cnt) in frontier.items():
            for sym in range(n):
                state2 = state + ints[sym]
                if keep_positive:
                    if state2 <= 0:
                        continue
                else:
                    if state2 > 0:
                        continue
                step_mass = mass * probs[sym]
                slot = nxt.get(state2)
                if slot is None:
                    slot = [zero, [zero] * n]
                    nxt[state2] = slot
                slot[0] += step_mass
                acc = slot[1]
                for k in range(n):
                    acc[k] += cnt[k] * probs[sym]
                acc[sym] += step_mass
        frontier = {s: (m, tuple(c)) for s, (m, c) in nxt.items()}
        totals.append(sum((m for m, _ in frontier.values()), zero))
        counts.append(
            [sum((c[k] for _, c in frontier.values()), zero) for k in range(n)]
        )
    return totals, counts


def drawdown_coefficients_dp(
    dist: TradeDistribution,
    m_draws: int,
    bound: int = DEFAULT_SCALED_BOUND,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> tuple[tuple[tuple, ...], tuple[tuple, ...]]:
    """Peak-position weights ``(L, R)`` via the two-segment factorization.

    For peak position ``l`` the pre-peak and post-peak constraints bind
    disjoint independent draws, so

    ``L_n[l] = before(l) * after_count_n(M - l)`` and
    ``R_n[l] = before_count_n(l) * after(M - l)``

    where ``before`` tables condition on all-positive suffix sums (run
    via reversal as all-positive prefix sums) and ``after`` tables on
    all-nonpositive prefix sums.  Output matches enumeration exactly in
    rational mode.
    """
    if m_draws < 1:
        raise ValueError("need at least one draw")
    ints = integer_scaled_trades(dist, bound=bound, max_denominator=max_denominator)
    n = dist.n_trades
    exact = _exact_inputs(dist)
    probs = tuple(Fraction(p) for p in dist.probs) if exact else dist.prob_floats()
    zero = Fraction(0) if exact else 0.0

    before_total, before_count = _segment_tables(ints, probs, m_draws, True, exact)
    after_total, after_count = _segment_tables(ints, probs, m_draws, False, exact)

    lam = []
    run = []
    for peak in range(m_draws + 1):
        tail = m_draws - peak
        if peak == m_draws:
            lam.append(tuple([zero] * n))
        else:
            lam.append(
                tuple(before_total[peak] * after_count[tail][k] for k in range(n))
            )
        if peak == 0:
            run.append(tuple([zero] * n))
        else:
            run.append(
                tuple(before_count[peak][k] * after_total[tail] for k in range(n))
            )
    return tuple(lam), tuple(run)


def coefficient_set(
    dist: TradeDistribution,
    m_draws: int,
    method: str = "auto",
    path_cap: int = DEFAULT_PATH_CAP,
    composition_cap: int = DEFAULT_COMPOSITION_CAP,
    bound: int = DEFAULT_SCALED_BOUND,
) -> CoefficientSet:
    """Assemble the full coefficient set for one instance.

    ``method`` governs the peak-position weights: ``"enumeration"``,
    ``"dp"``, or ``"auto"``, which prefers the dynamic program (exact and
    cheap whenever the trades scale to small integers) and falls back to
    enumeration under the path cap.
    """
    up, down = updown_coefficients(dist, m_draws, cap=composition_cap)
    if method == "enumeration":
        lam, run = drawdown_coefficients_enum(dist, m_draws, cap=path_cap)
        used = "enumeration"
    elif method == "dp":
        lam, run = drawdown_coefficients_dp(dist, m_draws, bound=bound)
        used = "dp"
    elif method == "auto":
        try:
            lam, run = drawdown_coefficients_dp(dist, m_draws, bound=bound)
            used = "dp"
        except ScalingError:
            lam, run = drawdown_coefficients_enum(dist, m_draws, cap=path_cap)
            used = "enumeration"
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoefficientSet(
        m_draws=m_draws,
        n_trades=dist.n_trades,
        up=up,
        down=down,
        drawdown=lam,
        runup=run,
        method=used,
    )


def smallf_expectations(
    coeffs: CoefficientSet, dist: TradeDistribution, f: float
) -> SmallFExpectations:
    """Evaluate the four weight vectors at a fraction.

    Valid as expectations only while f is small enough that no path's
    winner/peak classification has flipped; compare against
    :func:`optimalf.outcome_space.exact_expectations` to check.
    """
    check_fraction(f)
    log_hpr = [math.log1p(f * a) for a in dist.normalized_trades()]

    def combine(weights) -> float:
        return math.fsum(float(w) * lh for w, lh in zip(weights, log_hpr))

    return SmallFExpectations(
        up=combine(coeffs.up),
        down=combine(coeffs.down),
        drawdown=combine(coeffs.sum_drawdown()),
        runup=combine(coeffs.sum_runup()),
    )
