"""Shared fixtures-in-spirit: reference distributions and brute-force oracles.

The oracles here re-derive everything from first principles with their own
loops (plain ``math.log``, literal condition checks), independent of the
library's implementation choices, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from optimalf import TradeDistribution


def toss_game() -> TradeDistribution:
    """2:1 coin game: lose 1 or win 2, equal probability."""
    return TradeDistribution.uniform((-1, 2))


def random_rational_distribution(
    rng: random.Random, n_trades: int | None = None, max_n: int = 4
) -> TradeDistribution:
    """Random integer trades with exact rational probabilities."""
    n = n_trades if n_trades is not None else rng.randint(2, max_n)
    while True:
        trades = tuple(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]) for _ in range(n))
        if any(t < 0 for t in trades):
            break
    weights = [rng.randint(1, 9) for _ in range(n)]
    total = sum(weights)
    probs = tuple(Fraction(w, total) for w in weights)
    return TradeDistribution(trades, probs)


def literal_peak_positions(trades, path) -> list[int]:
    """Peak positions satisfying the literal two-segment conditions.

    Position ``ell`` qualifies when every suffix sum of trades within the
    first ``ell`` draws is positive and every prefix sum within the
    remaining draws is nonpositive.  Exactly one position should qualify
    for any path; returning the full list lets tests assert that too.
    """
    m = len(path)
    out = []
    for ell in range(m + 1):
        head_ok = all(
            sum(trades[i] for i in path[s:ell]) > 0 for s in range(ell)
        )
        tail_ok = all(
            sum(trades[i] for i in path[ell:e]) <= 0 for e in range(ell + 1, m + 1)
        )
        if head_ok and tail_ok:
            out.append(ell)
    return out


def oracle_path_split(dist: TradeDistribution, f: float, path):
    """(z, up, down, drawdown, runup, peak) for one path, from scratch."""
    a = [float(t) / float(dist.max_loss) for t in dist.trades]
    logs = [math.log(1.0 + f * a[i]) for i in path]
    running = list(itertools.accumulate(logs))
    top = max(running)
    if top > 0.0:
        peak = running.index(top) + 1
        runup = running[peak - 1]
    else:
        peak = 0
        runup = 0.0
    z = running[-1]
    return z, max(z, 0.0), min(z, 0.0), z - runup, runup, peak


def oracle_expectations(dist: TradeDistribution, f: float, m_draws: int):
    """Brute-force probability-weighted means of the five path stats."""
    p = [float(x) for x in dist.probs]
    acc = [[], [], [], [], []]
    for path in itertools.product(range(dist.n_trades), repeat=m_draws):
        prob = 1.0
        for i in path:
            prob *= p[i]
        stats = oracle_path_split(dist, f, path)
        for slot in range(5):
            acc[slot].append(prob * stats[slot])
    return tuple(math.fsum(column) for column in acc)
