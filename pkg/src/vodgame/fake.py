"""Dissemination game for agents pushing a fabricated item.

The push wins when the fake volunteers at least match the regular
agents who turn out to validate (ties go to the fakes; the
strict_dominance switch demands strictly more). Fake volunteers pay
cost_volunteer_fake and every fake-side agent pays cost_failure when
the push loses. cost_failure is the same failure cost the regular
game uses.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .numerics import binomial_tail_pair, pmf_row, require_probability
from .truth import PayoffPair

__all__ = [
    "FakeGameParams",
    "TailMode",
    "individual_payoff_fake",
    "avg_payoff_fake_volunteer",
    "avg_payoff_fake_defector",
    "expected_fake_payoffs",
    "expected_net_payoff_fake",
]


class TailMode(enum.Enum):
    """How to average over the regular-side turnout M ~ Binomial(n, p*).

    FULL integrates over M = 0..n_regular. TRUNCATED keeps M = 0..n_fake
    and discards the mass above, so it is not a probability-weighted
    average; the two differ by exactly cost_volunteer_fake * P[M > n_fake].
    """

    TRUNCATED = "truncated"
    FULL = "full"


@dataclass(frozen=True)
class FakeGameParams:
    n_fake: int = 8
    cost_volunteer_fake: float = 0.1
    cost_failure: float = 0.9
    strict_dominance: bool = False

    def __post_init__(self) -> None:
        if self.n_fake < 1:
            raise ValueError("n_fake must be at least 1")
        if self.cost_volunteer_fake <= 0.0:
            raise ValueError("cost_volunteer_fake must be positive")
        if self.cost_volunteer_fake >= self.cost_failure:
            raise ValueError("cost_volunteer_fake must be below cost_failure")


def _wins(fake_volunteers: int, regular_volunteers: int, strict: bool) -> bool:
    if strict:
        return fake_volunteers > regular_volunteers
    return fake_volunteers >= regular_volunteers


def individual_payoff_fake(
    fake_volunteers_total: int,
    regular_volunteers: int,
    volunteered: bool,
    params: FakeGameParams,
) -> float:
    """Payoff of one fake-side agent given both realized counts."""
    p = params
    if not 0 <= fake_volunteers_total <= p.n_fake:
        raise ValueError("fake_volunteers_total must lie in 0..n_fake")
    if regular_volunteers < 0:
        raise ValueError("regular_volunteers must be nonnegative")
    if volunteered and fake_volunteers_total < 1:
        raise ValueError("a volunteering agent implies fake_volunteers_total >= 1")
    success = _wins(fake_volunteers_total, regular_volunteers, p.strict_dominance)
    if volunteered:
        return (
            1.0 - p.cost_volunteer_fake
            if success
            else 1.0 - p.cost_volunteer_fake - p.cost_failure
        )
    return 1.0 if success else 1.0 - p.cost_failure


def _volunteer_lo(regular_volunteers: int, strict: bool) -> int:
    # smallest co-volunteer count that wins: total k_co + 1 vs M
    lo = regular_volunteers - 1 + (1 if strict else 0)
    return max(0, lo)


def _defector_lo(regular_volunteers: int, strict: bool) -> int:
    return regular_volunteers + (1 if strict else 0)


def avg_payoff_fake_volunteer(
    x_f: float, regular_volunteers: int, params: FakeGameParams
) -> float:
    """Expected payoff of a fake volunteer against a known regular
    turnout, its n_fake-1 peers volunteering independently with
    probability x_f."""
    x_f = require_probability(x_f, "x_f")
    if regular_volunteers < 0:
        raise ValueError("regular_volunteers must be nonnegative")
    p = params
    lo = _volunteer_lo(regular_volunteers, p.strict_dominance)
    fail, succ = binomial_tail_pair(p.n_fake - 1, lo, x_f)
    return succ * (1.0 - p.cost_volunteer_fake) + fail * (
        1.0 - p.cost_volunteer_fake - p.cost_failure
    )


def avg_payoff_fake_defector(
    x_f: float, regular_volunteers: int, params: FakeGameParams
) -> float:
    """Expected payoff of a fake-side defector against a known regular
    turnout."""
    x_f = require_probability(x_f, "x_f")
    if regular_volunteers < 0:
        raise ValueError("regular_volunteers must be nonnegative")
    p = params
    lo = _defector_lo(regular_volunteers, p.strict_dominance)
    fail, succ = binomial_tail_pair(p.n_fake - 1, lo, x_f)
    return succ + fail * (1.0 - p.cost_failure)


def _payoffs_by_lo(x_f: float, params: FakeGameParams) -> tuple[np.ndarray, np.ndarray]:
    # volunteer/defector payoffs indexed by the winning lower bound on
    # co-volunteers; index n_fake stands for "unreachable", tail 0
    p = params
    pairs = [binomial_tail_pair(p.n_fake - 1, lo, x_f) for lo in range(p.n_fake + 1)]
    fail = np.array([pr[0] for pr in pairs])
    succ = np.array([pr[1] for pr in pairs])
    pv = succ * (1.0 - p.cost_volunteer_fake) + fail * (
        1.0 - p.cost_volunteer_fake - p.cost_failure
    )
    pd = succ + fail * (1.0 - p.cost_failure)
    return pv, pd


def expected_fake_payoffs(
    x_f: float,
    p_star: float,
    n_regular: int,
    params: FakeGameParams,
    tail: TailMode = TailMode.FULL,
) -> PayoffPair:
    """Average the per-turnout payoffs over M ~ Binomial(n_regular, p_star).

    p_star is the regular agents' volunteering probability, normally
    their stable equilibrium. See TailMode for the averaging range.
    """
    x_f = require_probability(x_f, "x_f")
    p_star = require_probability(p_star, "p_star")
    if n_regular < 1:
        raise ValueError("n_regular must be at least 1")
    p = params
    strict = 1 if p.strict_dominance else 0
    m_hi = p.n_fake if tail is TailMode.TRUNCATED else n_regular

    weights = pmf_row(n_regular, p_star)[: m_hi + 1]
    m = np.arange(m_hi + 1)
    lo_v = np.minimum(np.maximum(m - 1 + strict, 0), p.n_fake)
    lo_d = np.minimum(m + strict, p.n_fake)
    pv_by_lo, pd_by_lo = _payoffs_by_lo(x_f, p)
    v = math.fsum(weights * pv_by_lo[lo_v])
    d = math.fsum(weights * pd_by_lo[lo_d])
    return PayoffPair(v, d, v - d)


def expected_net_payoff_fake(
    x_f: float,
    p_star: float,
    n_regular: int,
    params: FakeGameParams,
    tail: TailMode = TailMode.FULL,
) -> float:
    """Net gain from joining the push rather than sitting out; zero at
    the fake side's mixed equilibria."""
    return expected_fake_payoffs(x_f, p_star, n_regular, params, tail).net
