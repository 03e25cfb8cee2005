import math
import random
from fractions import Fraction

import pytest

from helpers import literal_peak_positions, random_rational_distribution
from optimalf import (
    CapExceededError,
    ScalingError,
    TradeDistribution,
    coefficient_set,
    drawdown_coefficients_dp,
    drawdown_coefficients_enum,
    integer_scaled_trades,
    log_growth_rate,
    outcomes,
    peak_index,
    rational_trades,
    smallf_expectations,
    updown_coefficients,
)

F = Fraction


def column_sums(matrix, n):
    return tuple(sum(row[k] for row in matrix) for k in range(n))


class TestTradeScaling:
    def test_integer_trades_pass_through(self, toss):
        assert rational_trades(toss) == (F(-1), F(2))
        assert integer_scaled_trades(toss) == (-1, 2)

    def test_float_trades_snap_to_rationals(self):
        d = TradeDistribution.uniform((-0.5, 2.5))
        assert rational_trades(d) == (F(-1, 2), F(5, 2))
        assert integer_scaled_trades(d) == (-1, 5)

    def test_unscalable_float_raises(self):
        d = TradeDistribution.uniform((-1.0, math.pi))
        with pytest.raises(ScalingError):
            rational_trades(d)

    def test_bound_enforced(self):
        d = TradeDistribution.uniform((-1, 100))
        with pytest.raises(ScalingError, match="bound"):
            integer_scaled_trades(d, bound=64)
        assert integer_scaled_trades(d, bound=128) == (-1, 100)


class TestUpDownCoefficients:
    def test_toss_m3(self, toss):
        up, down = updown_coefficients(toss, 3)
        assert up == (F(3, 8), F(9, 8))
        assert down == (F(9, 8), F(3, 8))

    def test_toss_m1(self, toss):
        up, down = updown_coefficients(toss, 1)
        assert up == (F(0), F(1, 2))
        assert down == (F(1, 2), F(0))

    def test_toss_m2(self, toss):
        # 4 paths: HH, HT, TH have positive trade sums, TT does not.
        up, down = updown_coefficients(toss, 2)
        assert up == (F(1, 2), F(1))
        assert down == (F(1, 2), F(0))

    def test_sides_sum_to_marginal_counts(self):
        rng = random.Random(31)
        for _ in range(10):
            dist = random_rational_distribution(rng)
            m = rng.randint(1, 10)
            up, down = updown_coefficients(dist, m)
            for n in range(dist.n_trades):
                assert up[n] + down[n] == dist.probs[n] * m
                assert up[n] >= 0 and down[n] >= 0

    def test_float_mode_matches_exact(self, toss):
        float_dist = TradeDistribution((-1, 2), (0.5, 0.5))
        up_f, down_f = updown_coefficients(float_dist, 12)
        up_e, down_e = updown_coefficients(toss, 12)
        for a, b in zip(up_f + down_f, up_e + down_e):
            assert a == pytest.approx(float(b), rel=1e-12)

    def test_cap(self, toss):
        d = TradeDistribution.uniform((-1, 2, 3, 4))
        with pytest.raises(CapExceededError):
            updown_coefficients(d, 500, cap=1000)


class TestDrawdownEnumeration:
    def test_toss_m3_per_peak_table(self, toss):
        lam, run = drawdown_coefficients_enum(toss, 3)
        assert lam[0] == (F(5, 8), F(1, 8))
        assert lam[1] == (F(2, 8), F(0))
        assert lam[2] == (F(2, 8), F(0))
        assert lam[3] == (F(0), F(0))
        assert run[0] == (F(0), F(0))
        assert run[1] == (F(0), F(1, 8))
        assert run[2] == (F(1, 8), F(3, 8))
        assert run[3] == (F(2, 8), F(7, 8))
        assert column_sums(lam, 2) == (F(9, 8), F(1, 8))
        assert column_sums(run, 2) == (F(3, 8), F(11, 8))

    def test_toss_m1(self, toss):
        lam, run = drawdown_coefficients_enum(toss, 1)
        assert column_sums(lam, 2) == (F(1, 2), F(0))
        assert column_sums(run, 2) == (F(0), F(1, 2))

    def test_every_path_in_exactly_one_class(self):
        rng = random.Random(5)
        for _ in range(8):
            dist = random_rational_distribution(rng, max_n=3)
            m = rng.randint(1, 6)
            trades = rational_trades(dist)
            for path in outcomes(dist, m):
                assert len(literal_peak_positions(trades, path)) == 1

    def test_matches_literal_condition_oracle(self):
        rng = random.Random(17)
        for _ in range(5):
            dist = random_rational_distribution(rng, max_n=3)
            m = rng.randint(1, 5)
            trades = rational_trades(dist)
            lam, run = drawdown_coefficients_enum(dist, m)
            want_lam = [[F(0)] * dist.n_trades for _ in range(m + 1)]
            want_run = [[F(0)] * dist.n_trades for _ in range(m + 1)]
            for path in outcomes(dist, m):
                (ell,) = literal_peak_positions(trades, path)
                prob = F(1)
                for i in path:
                    prob *= dist.probs[i]
                for pos, i in enumerate(path, start=1):
                    if pos <= ell:
                        want_run[ell][i] += prob
                    else:
                        want_lam[ell][i] += prob
            assert [list(r) for r in lam] == want_lam
            assert [list(r) for r in run] == want_run

    def test_classification_matches_peak_index_at_tiny_f(self, toss):
        trades = rational_trades(toss)
        for m in range(1, 11):
            for path in outcomes(toss, m):
                (ell,) = literal_peak_positions(trades, path)
                assert ell == peak_index(toss, 1e-4, path)

    def test_cap(self, toss):
        with pytest.raises(CapExceededError):
            drawdown_coefficients_enum(toss, 25, cap=1000)


class TestDynamicProgram:
    @pytest.mark.parametrize("m", list(range(1, 15)))
    def test_matches_enumeration_toss(self, toss, m):
        assert drawdown_coefficients_dp(toss, m) == drawdown_coefficients_enum(
            toss, m
        )

    @pytest.mark.parametrize("m", list(range(1, 9)))
    def test_matches_enumeration_three_outcomes(self, m):
        d = TradeDistribution.uniform((-1, 2, 3))
        assert drawdown_coefficients_dp(d, m) == drawdown_coefficients_enum(d, m)

    def test_matches_enumeration_random(self):
        rng = random.Random(23)
        for _ in range(6):
            dist = random_rational_distribution(rng, max_n=3)
            m = rng.randint(1, 7)
            assert drawdown_coefficients_dp(dist, m) == drawdown_coefficients_enum(
                dist, m
            )

    def test_float_mode_close_to_exact(self, toss):
        float_dist = TradeDistribution((-1, 2), (0.5, 0.5))
        lam_f, run_f = drawdown_coefficients_dp(float_dist, 12)
        lam_e, run_e = drawdown_coefficients_dp(toss, 12)
        for row_f, row_e in zip(lam_f + run_f, lam_e + run_e):
            for a, b in zip(row_f, row_e):
                assert a == pytest.approx(float(b), abs=1e-12)

    def test_scaling_error_propagates(self):
        d = TradeDistribution.uniform((-1.0, math.pi))
        with pytest.raises(ScalingError):
            drawdown_coefficients_dp(d, 3)


class TestCoefficientSet:
    def test_identities(self):
        rng = random.Random(41)
        for _ in range(8):
            dist = random_rational_distribution(rng, max_n=3)
            m = rng.randint(1, 7)
            cs = coefficient_set(dist, m)
            lam = cs.sum_drawdown()
            run = cs.sum_runup()
            for n in range(dist.n_trades):
                assert cs.up[n] + cs.down[n] == dist.probs[n] * m
                assert lam[n] + run[n] == dist.probs[n] * m
                assert cs.drawdown[m][n] == 0
                assert cs.runup[0][n] == 0

    def test_linear_combinations_sum_to_total_growth(self):
        rng = random.Random(43)
        for _ in range(5):
            dist = random_rational_distribution(rng, max_n=3)
            m = rng.randint(1, 6)
            cs = coefficient_set(dist, m)
            for _ in range(6):
                f = rng.uniform(0.0, 0.99)
                sm = smallf_expectations(cs, dist, f)
                total = m * log_growth_rate(dist, f)
                assert sm.up + sm.down == pytest.approx(total, abs=1e-12)
                assert sm.drawdown + sm.runup == pytest.approx(total, abs=1e-12)

    def test_method_selection(self, toss):
        assert coefficient_set(toss, 4, method="dp").method == "dp"
        assert (
            coefficient_set(toss, 4, method="enumeration").method == "enumeration"
        )
        assert coefficient_set(toss, 4, method="auto").method == "dp"
        unscalable = TradeDistribution.uniform((-1.0, math.pi))
        assert coefficient_set(unscalable, 4, method="auto").method == "enumeration"
        with pytest.raises(ValueError):
            coefficient_set(toss, 4, method="bogus")

    def test_smallf_closed_forms_toss_m3(self, toss):
        cs = coefficient_set(toss, 3)
        for f in (0.02, 0.1, 0.3):
            sm = smallf_expectations(cs, toss, f)
            assert sm.drawdown == pytest.approx(
                (9 / 8) * math.log(1 - f) + (1 / 8) * math.log(1 + 2 * f), abs=1e-14
            )
            assert sm.runup == pytest.approx(
                (3 / 8) * math.log(1 - f) + (11 / 8) * math.log(1 + 2 * f), abs=1e-14
            )

    def test_zero_fraction_all_zero(self, toss):
        sm = smallf_expectations(coefficient_set(toss, 5), toss, 0.0)
        assert (sm.up, sm.down, sm.drawdown, sm.runup) == (0.0, 0.0, 0.0, 0.0)
