import itertools
import math
from fractions import Fraction

import pytest

from optimalf import (
    TradeDistribution,
    expectation,
    log_growth_rate,
    outcome_probability,
    outcomes,
    twr,
)

H, T = 1, 0  # toss-game indices: t[0] = -1 (tail), t[1] = +2 (head)


class TestConstruction:
    def test_zero_trade_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            TradeDistribution((0, 2), (Fraction(1, 2), Fraction(1, 2)))

    def test_all_winning_rejected(self):
        with pytest.raises(ValueError, match="losing"):
            TradeDistribution((1, 2), (Fraction(1, 2), Fraction(1, 2)))

    def test_rational_probs_must_sum_to_one_exactly(self):
        with pytest.raises(ValueError, match="sum"):
            TradeDistribution((-1, 2), (Fraction(1, 2), Fraction(1, 3)))

    def test_float_probs_tolerance(self):
        TradeDistribution((-1, 2), (0.5, 0.5 + 5e-13))  # inside 1e-12
        with pytest.raises(ValueError):
            TradeDistribution((-1, 2), (0.5, 0.51))

    def test_nonpositive_prob_rejected(self):
        with pytest.raises(ValueError):
            TradeDistribution((-1, 2), (1.5, -0.5))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            TradeDistribution((-1, 2, 3), (0.5, 0.5))

    def test_max_loss(self, toss):
        assert toss.max_loss == 1
        d = TradeDistribution.uniform((-2, -0.5, 3))
        assert d.max_loss == 2

    def test_from_counts_gives_exact_rationals(self):
        d = TradeDistribution.from_counts((-1, 2, 3), (1, 2, 1))
        assert d.probs == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
        assert d.is_exact

    def test_normalized_trades_at_least_minus_one(self):
        d = TradeDistribution.uniform((-3, -1, 2, 10))
        assert all(a >= -1 for a in d.normalized_trades())
        assert min(d.normalized_trades()) == -1.0


class TestExpectation:
    def test_toss(self, toss):
        assert expectation(toss) == Fraction(1, 2)

    def test_symmetric_game_is_fair(self):
        d = TradeDistribution.uniform((-1, 1))
        assert expectation(d) == 0

    def test_three_outcome(self):
        d = TradeDistribution((-1, 2, -0.5), (0.25, 0.5, 0.25))
        assert expectation(d) == pytest.approx(0.625, abs=1e-15)


class TestLogGrowthRate:
    def test_zero_fraction(self, toss):
        assert log_growth_rate(toss, 0.0) == 0.0

    def test_quarter_fraction(self, toss):
        want = 0.5 * math.log(3 / 4) + 0.5 * math.log(3 / 2)
        assert log_growth_rate(toss, 0.25) == pytest.approx(want, abs=1e-15)
        assert want == pytest.approx(0.05889, abs=5e-6)

    def test_quarter_is_the_maximizer(self, toss):
        best = log_growth_rate(toss, 0.25)
        for i in range(999):
            f = i / 1000
            assert log_growth_rate(toss, f) <= best + 1e-15

    def test_domain_errors(self, toss):
        with pytest.raises(ValueError):
            log_growth_rate(toss, 1.0)
        with pytest.raises(ValueError):
            log_growth_rate(toss, -0.1)


class TestTwr:
    def test_zero_fraction_is_one(self, toss):
        assert twr(toss, 0.0, (H, T, H, T)) == 1.0

    def test_two_wins(self, toss):
        assert twr(toss, 0.25, (H, H)) == pytest.approx(2.25, abs=1e-15)

    def test_single_loss(self, toss):
        assert twr(toss, 0.25, (T,)) == pytest.approx(0.75, abs=1e-15)

    def test_empty_range_convention(self, toss):
        assert twr(toss, 0.3, (H, T, H), start=3, stop=2) == 1.0

    def test_subrange(self, toss):
        assert twr(toss, 0.25, (T, H, H), start=2, stop=3) == pytest.approx(2.25)

    def test_index_errors(self, toss):
        with pytest.raises(IndexError):
            twr(toss, 0.1, (H, T), start=0, stop=2)
        with pytest.raises(IndexError):
            twr(toss, 0.1, (H, T), start=1, stop=3)

    def test_positive_for_all_fractions(self, toss):
        for f in (0.0, 0.5, 0.9, 0.999999):
            for path in outcomes(toss, 4):
                assert twr(toss, f, path) > 0.0

    def test_log_twr_equals_sum_of_logs(self, toss):
        a = toss.normalized_trades()
        for f in (0.1, 0.45, 0.8):
            for path in outcomes(toss, 5):
                direct = math.fsum(math.log1p(f * a[i]) for i in path)
                assert math.log(twr(toss, f, path)) == pytest.approx(
                    direct, abs=1e-12
                )


class TestOutcomeSpace:
    def test_probabilities_sum_to_one_exactly_rational(self):
        d = TradeDistribution.from_counts((-1, 2, 3), (1, 2, 3))
        total = sum(outcome_probability(d, p) for p in outcomes(d, 4))
        assert total == 1

    def test_probabilities_sum_to_one_float(self):
        d = TradeDistribution((-1, 2, 3), (0.2, 0.3, 0.5))
        total = math.fsum(outcome_probability(d, p) for p in outcomes(d, 5))
        assert abs(total - 1) < 1e-12

    @pytest.mark.parametrize("n,m", [(2, 12), (3, 8)])
    def test_mean_log_twr_is_m_times_growth_rate(self, n, m):
        trades = (-1, 2) if n == 2 else (-1, 2, -0.5)
        d = TradeDistribution.uniform(trades)
        f = 0.37
        mean = math.fsum(
            float(outcome_probability(d, p)) * math.log(twr(d, f, p))
            for p in outcomes(d, m)
        )
        assert mean == pytest.approx(m * log_growth_rate(d, f), abs=1e-10)

    def test_odometer_order(self, toss):
        first = list(itertools.islice(outcomes(toss, 2), 4))
        assert first == [(0, 0), (0, 1), (1, 0), (1, 1)]
