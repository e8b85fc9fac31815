"""Fake-side game: payoffs against a known regular turnout and the
turnout-averaged expectations in both tail modes."""

import math

import pytest

from vodgame.fake import (
    FakeGameParams,
    TailMode,
    avg_payoff_fake_defector,
    avg_payoff_fake_volunteer,
    expected_fake_payoffs,
    expected_net_payoff_fake,
    individual_payoff_fake,
)
from vodgame.numerics import binomial_tail, pmf_row
from vodgame.oracle import enumerate_fake_exact

BASELINE = FakeGameParams()
STRICT = FakeGameParams(strict_dominance=True)


# ---------------------------------------------------------------- parameters


def test_defaults():
    p = FakeGameParams()
    assert (p.n_fake, p.cost_volunteer_fake, p.cost_failure) == (8, 0.1, 0.9)
    assert p.strict_dominance is False


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_fake": 0},
        {"cost_volunteer_fake": 0.0},
        {"cost_volunteer_fake": -0.1},
        {"cost_volunteer_fake": 0.9},
        {"cost_volunteer_fake": 1.2, "cost_failure": 0.9},
    ],
)
def test_rejects_invalid_parameters(kwargs):
    with pytest.raises(ValueError):
        FakeGameParams(**kwargs)


# ---------------------------------------------------------------- individual


def test_individual_tie_counts_as_success():
    assert individual_payoff_fake(6, 6, True, BASELINE) == 0.9


def test_individual_outnumbered_volunteer_loses_both_costs():
    got = individual_payoff_fake(3, 6, True, BASELINE)
    assert got == pytest.approx(0.0, abs=1e-15)


def test_individual_defector_wins_empty_tie():
    # zero against zero is still a tie
    assert individual_payoff_fake(0, 0, False, BASELINE) == 1.0


def test_individual_strict_mode_breaks_ties():
    assert individual_payoff_fake(6, 6, True, STRICT) == pytest.approx(0.0, abs=1e-15)
    assert individual_payoff_fake(7, 6, True, STRICT) == 0.9


@pytest.mark.parametrize("total,m,vol", [(-1, 0, False), (9, 0, False), (0, 0, True), (3, -1, True)])
def test_individual_rejects_impossible_counts(total, m, vol):
    with pytest.raises(ValueError):
        individual_payoff_fake(total, m, vol, BASELINE)


# ---------------------------------------------------------------- averages


def test_volunteer_avg_unopposed_is_certain():
    for x_f in (0.0, 0.5, 1.0):
        assert avg_payoff_fake_volunteer(x_f, 0, BASELINE) == 0.9


def test_volunteer_avg_full_squad_matches_equal_turnout():
    # all eight against eight is a tie, hence success
    assert avg_payoff_fake_volunteer(1.0, 8, BASELINE) == 0.9


def test_volunteer_avg_lone_pusher_outnumbered():
    assert avg_payoff_fake_volunteer(0.0, 2, BASELINE) == pytest.approx(0.0, abs=1e-15)


def test_defector_avg_unopposed_is_one():
    for x_f in (0.0, 0.3, 1.0):
        assert avg_payoff_fake_defector(x_f, 0, BASELINE) == 1.0


def test_defector_avg_no_peers_active():
    assert avg_payoff_fake_defector(0.0, 1, BASELINE) == pytest.approx(0.1, abs=1e-15)


def test_defector_avg_seven_peer_coin_flips():
    # P[Bin(7, 0.5) >= 4] = 1/2, so 0.1 + 0.9/2
    got = avg_payoff_fake_defector(0.5, 4, BASELINE)
    assert got == pytest.approx(0.55, abs=1e-12)


def test_strict_mode_shifts_the_needed_count():
    got = avg_payoff_fake_defector(0.5, 4, STRICT)
    want = 0.1 + 0.9 * (29.0 / 128.0)  # P[Bin(7,.5) >= 5] = 29/128
    assert got == pytest.approx(want, abs=1e-12)


# ---------------------------------------------------------------- expectation


@pytest.mark.parametrize("tail", [TailMode.FULL, TailMode.TRUNCATED])
def test_expected_net_no_regulars_volunteering(tail):
    # turnout is surely zero: the push always wins, the cost is all that
    # separates joining from watching
    net = expected_net_payoff_fake(0.5, 0.0, 100, BASELINE, tail)
    assert net == pytest.approx(-0.1, abs=1e-15)


def test_expected_net_certain_regular_wall_full_mode():
    # turnout 100 beats any push; both roles fail, difference is the cost
    net = expected_net_payoff_fake(0.5, 1.0, 100, BASELINE, TailMode.FULL)
    assert net == pytest.approx(-0.1, abs=1e-15)


def test_expected_pair_reports_net_difference():
    pair = expected_fake_payoffs(0.4, 0.09, 100, BASELINE)
    assert pair.net == pair.volunteer_avg - pair.defector_avg


def test_expected_defaults_to_full_mode():
    a = expected_fake_payoffs(0.3, 0.09, 100, BASELINE)
    b = expected_fake_payoffs(0.3, 0.09, 100, BASELINE, TailMode.FULL)
    assert a == b


@pytest.mark.parametrize("tail", [TailMode.FULL, TailMode.TRUNCATED])
def test_expected_matches_scalar_turnout_loop(tail):
    """The vectorized expectation agrees with an explicit sum over
    turnout values weighted by the Binomial(n_regular, p*) pmf."""
    x_f, p_star, n = 0.35, 0.09, 100
    m_hi = BASELINE.n_fake if tail is TailMode.TRUNCATED else n
    weights = pmf_row(n, p_star)
    v = math.fsum(
        weights[m] * avg_payoff_fake_volunteer(x_f, m, BASELINE)
        for m in range(m_hi + 1)
    )
    d = math.fsum(
        weights[m] * avg_payoff_fake_defector(x_f, m, BASELINE)
        for m in range(m_hi + 1)
    )
    pair = expected_fake_payoffs(x_f, p_star, n, BASELINE, tail)
    assert pair.volunteer_avg == pytest.approx(v, abs=1e-12)
    assert pair.defector_avg == pytest.approx(d, abs=1e-12)


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        expected_fake_payoffs(1.5, 0.09, 100, BASELINE)
    with pytest.raises(ValueError):
        expected_fake_payoffs(0.5, -0.1, 100, BASELINE)
    with pytest.raises(ValueError):
        expected_fake_payoffs(0.5, 0.09, 0, BASELINE)
    with pytest.raises(ValueError):
        avg_payoff_fake_volunteer(0.5, -1, BASELINE)


# ---------------------------------------------------------------- properties


def test_tail_mode_gap_is_exactly_the_discarded_cost():
    """Truncated minus full equals cost_volunteer_fake * P[turnout > n_fake]:
    the truncation drops only losing turnouts, where both roles fail and
    the volunteer is down by exactly the participation cost."""
    for i in range(4):
        p_star = 0.03 + 0.04 * i
        for j in range(5):
            x_f = 0.1 + 0.2 * j
            gap = expected_net_payoff_fake(
                x_f, p_star, 100, BASELINE, TailMode.TRUNCATED
            ) - expected_net_payoff_fake(x_f, p_star, 100, BASELINE, TailMode.FULL)
            want = BASELINE.cost_volunteer_fake * binomial_tail(100, 9, p_star)
            assert gap == pytest.approx(want, abs=1e-12)


def test_averages_stay_in_payoff_band():
    lo = 1.0 - BASELINE.cost_failure - BASELINE.cost_volunteer_fake
    for m in range(13):
        for j in range(11):
            x_f = j / 10.0
            assert lo <= avg_payoff_fake_volunteer(x_f, m, BASELINE) <= 1.0
            assert lo <= avg_payoff_fake_defector(x_f, m, BASELINE) <= 1.0


def test_net_stays_in_difference_band():
    band = BASELINE.cost_failure  # net differences cannot exceed the failure cost
    for tail in (TailMode.FULL, TailMode.TRUNCATED):
        for i in range(5):
            for j in range(11):
                net = expected_net_payoff_fake(
                    j / 10.0, 0.02 + 0.03 * i, 100, BASELINE, tail
                )
                assert -band - BASELINE.cost_volunteer_fake <= net <= band


@pytest.mark.parametrize("x_f", [0.0, 0.2, 0.5, 0.8, 1.0])
def test_success_odds_never_improve_with_more_opposition(x_f):
    vols = [avg_payoff_fake_volunteer(x_f, m, BASELINE) for m in range(15)]
    defs_ = [avg_payoff_fake_defector(x_f, m, BASELINE) for m in range(15)]
    assert all(a >= b for a, b in zip(vols, vols[1:]))
    assert all(a >= b for a, b in zip(defs_, defs_[1:]))


@pytest.mark.parametrize("n_fake", [1, 4, 8, 10])
@pytest.mark.parametrize("x_f", [0.2, 0.5, 0.8])
def test_matches_exhaustive_enumeration(n_fake, x_f):
    p = FakeGameParams(n_fake=n_fake)
    for m in range(13):
        pair = enumerate_fake_exact(p, m, x_f)
        assert avg_payoff_fake_volunteer(x_f, m, p) == pytest.approx(
            pair.volunteer_avg, abs=1e-10
        )
        assert avg_payoff_fake_defector(x_f, m, p) == pytest.approx(
            pair.defector_avg, abs=1e-10
        )
