"""Validation backends: seeded Monte Carlo and exact profile enumeration.

Monte Carlo determinism contract
--------------------------------
Draws come from numpy's PCG64, a named, documented, portable 64-bit
generator. Trials are split into fixed chunks of 65536; chunk i uses
PCG64 seeded with SeedSequence((seed, i)). Chunk statistics are merged
in index order, so a result depends only on (seed, trials), never on
how chunks might be scheduled across workers. Within a trial the focal
volunteer and the focal defector are evaluated on the same draw
(common random numbers), which makes the estimated net difference much
tighter than two independent runs would be.

Exact enumeration iterates every co-player volunteer/defect profile as
a bit pattern and weights it by x^v * (1-x)^(peers-v) directly, with no
binomial shortcuts, so it is an independent check on the analytic
averages (practical for n_regular <= 16).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fake import FakeGameParams
from .numerics import require_probability
from .truth import PayoffPair, TruthGameParams

__all__ = [
    "SimResult",
    "simulate_truth",
    "simulate_fake",
    "enumerate_truth_exact",
    "enumerate_fake_exact",
    "CHUNK_TRIALS",
]

CHUNK_TRIALS = 65536


@dataclass(frozen=True)
class SimResult:
    volunteer_avg_hat: float
    defector_avg_hat: float
    volunteer_se: float
    defector_se: float
    trials: int
    seed: int


class _RunningMean:
    """Combine per-chunk (count, mean, sum of squared deviations) in a
    fixed order; numerically stable for long runs."""

    def __init__(self) -> None:
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0

    def add_chunk(self, values: np.ndarray) -> None:
        n_b = values.size
        vmin = float(values.min())
        vmax = float(values.max())
        if vmin == vmax:
            # constant chunk: keep the mean exact and the spread at true zero
            mean_b = vmin
            m2_b = 0.0
        else:
            mean_b = float(values.mean())
            m2_b = float(((values - mean_b) ** 2).sum())
        n_a = self.count
        total = n_a + n_b
        delta = mean_b - self.mean
        self.mean += delta * n_b / total
        self.m2 += m2_b + delta * delta * n_a * n_b / total
        self.count = total

    @property
    def se(self) -> float:
        if self.count < 2 or self.m2 <= 0.0:
            return 0.0
        return math.sqrt(self.m2 / (self.count - 1) / self.count)


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def _chunk_sizes(trials: int) -> list[int]:
    full, rest = divmod(trials, CHUNK_TRIALS)
    return [CHUNK_TRIALS] * full + ([rest] if rest else [])


def simulate_truth(
    params: TruthGameParams, x: float, trials: int, seed: int = 0
) -> SimResult:
    """Monte Carlo estimate of the average volunteer and defector
    payoffs of the validation game at mixing x.

    Each trial draws the focal agent's n_regular - 1 co-players'
    volunteer count (binomially, equivalent to independent Bernoulli(x)
    decisions) and scores a focal volunteer and a focal defector
    against that same draw, shared-reward transfers included.
    """
    x = require_probability(x, "x")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    p = params
    n_co = p.n_regular - 1
    vol = _RunningMean()
    dfc = _RunningMean()
    for i, size in enumerate(_chunk_sizes(trials)):
        rng = _chunk_rng(seed, i)
        m = rng.binomial(n_co, x, size=size)
        pay_v = np.where(
            m >= p.threshold - 1,
            (1.0 - p.cost_volunteer)
            + p.shared_reward / (m + 1.0)
            - p.shared_reward / p.n_regular,
            1.0 - p.cost_volunteer - p.cost_failure,
        )
        pay_d = np.where(
            m >= p.threshold,
            1.0 - p.shared_reward / p.n_regular,
            1.0 - p.cost_failure,
        )
        vol.add_chunk(pay_v)
        dfc.add_chunk(pay_d)
    return SimResult(vol.mean, dfc.mean, vol.se, dfc.se, trials, seed)


def simulate_fake(
    p_star: float,
    n_regular: int,
    params: FakeGameParams,
    x_f: float,
    trials: int,
    seed: int = 0,
) -> SimResult:
    """Monte Carlo estimate of the fake side's average payoffs.

    Each trial draws the regular turnout M ~ Binomial(n_regular, p_star)
    and the focal agent's n_fake - 1 peers' volunteer count, then scores
    a focal volunteer and defector on the same draw. This estimates the
    full average over M (the TailMode.FULL expectation).
    """
    p_star = require_probability(p_star, "p_star")
    x_f = require_probability(x_f, "x_f")
    if n_regular < 1:
        raise ValueError("n_regular must be at least 1")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    p = params
    vol = _RunningMean()
    dfc = _RunningMean()
    for i, size in enumerate(_chunk_sizes(trials)):
        rng = _chunk_rng(seed, i)
        m = rng.binomial(n_regular, p_star, size=size)
        k_co = rng.binomial(p.n_fake - 1, x_f, size=size)
        if p.strict_dominance:
            win_v = k_co + 1 > m
            win_d = k_co > m
        else:
            win_v = k_co + 1 >= m
            win_d = k_co >= m
        pay_v = np.where(
            win_v,
            1.0 - p.cost_volunteer_fake,
            1.0 - p.cost_volunteer_fake - p.cost_failure,
        )
        pay_d = np.where(win_d, 1.0, 1.0 - p.cost_failure)
        vol.add_chunk(pay_v)
        dfc.add_chunk(pay_d)
    return SimResult(vol.mean, dfc.mean, vol.se, dfc.se, trials, seed)


def _profile_counts(peers: int) -> np.ndarray:
    # volunteer count of every subset of `peers` co-players, i.e. the
    # popcount of 0 .. 2^peers - 1
    if peers == 0:
        return np.zeros(1, dtype=np.int64)
    if peers > 24:
        raise ValueError("profile enumeration is limited to 24 co-players")
    patterns = np.arange(2**peers, dtype="<u4")
    bits = np.unpackbits(patterns.view(np.uint8).reshape(-1, 4), axis=1, bitorder="little")
    return bits[:, :peers].sum(axis=1).astype(np.int64)


def enumerate_truth_exact(params: TruthGameParams, x: float) -> PayoffPair:
    """Average payoffs of the validation game by explicit enumeration of
    all 2^(n_regular - 1) co-player profiles. Practical for
    n_regular <= 16."""
    x = require_probability(x, "x")
    p = params
    if p.n_regular > 16:
        raise ValueError("exact enumeration supports n_regular <= 16")
    peers = p.n_regular - 1
    v = _profile_counts(peers)
    w = np.power(x, v) * np.power(1.0 - x, peers - v)
    pay_v = np.where(
        v + 1 >= p.threshold,
        (1.0 - p.cost_volunteer)
        + p.shared_reward / (v + 1.0)
        - p.shared_reward / p.n_regular,
        1.0 - p.cost_volunteer - p.cost_failure,
    )
    pay_d = np.where(
        v >= p.threshold,
        1.0 - p.shared_reward / p.n_regular,
        1.0 - p.cost_failure,
    )
    pv = float(w @ pay_v)
    pd = float(w @ pay_d)
    return PayoffPair(pv, pd, pv - pd)


def enumerate_fake_exact(
    params: FakeGameParams, regular_volunteers: int, x_f: float
) -> PayoffPair:
    """Average fake-side payoffs against a known regular turnout by
    explicit enumeration of all 2^(n_fake - 1) peer profiles."""
    x_f = require_probability(x_f, "x_f")
    if regular_volunteers < 0:
        raise ValueError("regular_volunteers must be nonnegative")
    p = params
    if p.n_fake > 16:
        raise ValueError("exact enumeration supports n_fake <= 16")
    peers = p.n_fake - 1
    v = _profile_counts(peers)
    w = np.power(x_f, v) * np.power(1.0 - x_f, peers - v)
    if p.strict_dominance:
        win_v = v + 1 > regular_volunteers
        win_d = v > regular_volunteers
    else:
        win_v = v + 1 >= regular_volunteers
        win_d = v >= regular_volunteers
    pay_v = np.where(
        win_v,
        1.0 - p.cost_volunteer_fake,
        1.0 - p.cost_volunteer_fake - p.cost_failure,
    )
    pay_d = np.where(win_d, 1.0, 1.0 - p.cost_failure)
    pv = float(w @ pay_v)
    pd = float(w @ pay_d)
    return PayoffPair(pv, pd, pv - pd)
