"""Volunteering game for regular agents validating circulating news.

An item is validated when at least `threshold` of the `n_regular`
agents volunteer. Volunteers pay cost_volunteer, everyone pays
cost_failure when validation fails, and a shared reward pot of size
shared_reward is split evenly among the volunteers on success, funded
by an equal per-capita fee that is only levied when validation
succeeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import binomial_tail_pair, pmf_row, require_probability

__all__ = [
    "TruthGameParams",
    "PayoffPair",
    "individual_payoff_regular",
    "avg_payoff_volunteer",
    "avg_payoff_defector",
    "net_payoff_regular",
    "payoff_pair_regular",
]


@dataclass(frozen=True)
class PayoffPair:
    """Average volunteer and defector payoffs at one mixing point."""

    volunteer_avg: float
    defector_avg: float
    net: float


@dataclass(frozen=True)
class TruthGameParams:
    """Parameters of the validation game.

    cost_failure > cost_volunteer is what makes volunteering worth
    considering at all; pass allow_nonstandard=True to study the
    degenerate orderings anyway.
    """

    n_regular: int = 100
    threshold: int = 6
    cost_volunteer: float = 0.5
    cost_failure: float = 0.9
    shared_reward: float = 5.0
    allow_nonstandard: bool = False

    def __post_init__(self) -> None:
        if self.n_regular < 2:
            raise ValueError("n_regular must be at least 2")
        if not 1 <= self.threshold <= self.n_regular:
            raise ValueError("threshold must lie in 1..n_regular")
        if self.cost_volunteer <= 0.0:
            raise ValueError("cost_volunteer must be positive")
        if self.cost_failure <= 0.0:
            raise ValueError("cost_failure must be positive")
        if self.shared_reward < 0.0:
            raise ValueError("shared_reward must be nonnegative")
        if self.cost_volunteer >= self.cost_failure and not self.allow_nonstandard:
            raise ValueError(
                "cost_volunteer >= cost_failure makes defection dominant; "
                "set allow_nonstandard=True to study it anyway"
            )


def individual_payoff_regular(
    volunteers_total: int, volunteered: bool, params: TruthGameParams
) -> float:
    """Base payoff of one agent given the realized volunteer count.

    volunteers_total counts every volunteer including the focal agent
    when it volunteered. Shared-reward transfers are not part of the
    base payoff; the population averages add them on the success event.
    """
    p = params
    if not 0 <= volunteers_total <= p.n_regular:
        raise ValueError("volunteers_total must lie in 0..n_regular")
    if volunteered and volunteers_total < 1:
        raise ValueError("a volunteering agent implies volunteers_total >= 1")
    success = volunteers_total >= p.threshold
    if volunteered:
        return 1.0 - p.cost_volunteer if success else 1.0 - p.cost_volunteer - p.cost_failure
    return 1.0 if success else 1.0 - p.cost_failure


def avg_payoff_volunteer(x: float, params: TruthGameParams) -> float:
    """Expected payoff of a volunteer when each of the other n_regular-1
    agents volunteers independently with probability x.

    With M co-volunteers the item is validated iff M >= threshold - 1
    (the focal agent completes the quorum), in which case the volunteer
    also nets the reward share minus the funding fee,
    shared_reward/(M+1) - shared_reward/n_regular.
    """
    x = require_probability(x, "x")
    p = params
    n_co = p.n_regular - 1
    fail, succ = binomial_tail_pair(n_co, p.threshold - 1, x)
    base = succ * (1.0 - p.cost_volunteer) + fail * (
        1.0 - p.cost_volunteer - p.cost_failure
    )
    if p.shared_reward == 0.0:
        return base
    row = pmf_row(n_co, x)
    m = np.arange(p.threshold - 1, n_co + 1, dtype=np.float64)
    share = p.shared_reward / (m + 1.0) - p.shared_reward / p.n_regular
    return base + math.fsum(row[p.threshold - 1 :] * share)


def avg_payoff_defector(x: float, params: TruthGameParams) -> float:
    """Expected payoff of a defector at mixing x.

    Validation needs M >= threshold co-volunteers without the focal
    agent. The per-capita fee shared_reward/n_regular applies only on
    the success event.
    """
    x = require_probability(x, "x")
    p = params
    fail, succ = binomial_tail_pair(p.n_regular - 1, p.threshold, x)
    fee = (p.shared_reward / p.n_regular) * succ
    return succ + fail * (1.0 - p.cost_failure) - fee


def net_payoff_regular(x: float, params: TruthGameParams) -> float:
    """avg_payoff_volunteer(x) - avg_payoff_defector(x); zero at mixed equilibria."""
    return avg_payoff_volunteer(x, params) - avg_payoff_defector(x, params)


def payoff_pair_regular(x: float, params: TruthGameParams) -> PayoffPair:
    v = avg_payoff_volunteer(x, params)
    d = avg_payoff_defector(x, params)
    return PayoffPair(v, d, v - d)
