"""Beta-Bernoulli modeling of the arena fill ratio and the credibility decision rule.

A robot models the unknown fraction of vibrating tiles as Beta(alpha, beta),
starting from the flat prior Beta(1, 1).  Each binary observation (its own
floor sample or a broadcast bit from a peer) adds one pseudo-count.  The
robot's *belief* is the posterior probability that the fill ratio lies below
one half, i.e. the Beta CDF at 0.5, and a decision is committed once that
belief clears a credibility threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

__all__ = [
    "Decision",
    "BetaPosterior",
    "update_posterior",
    "belief",
    "variance",
    "mean_estimate",
    "try_decide",
    "regularized_incomplete_beta",
]


class Decision(IntEnum):
    """Classification state of a robot; integer values are the wire/CSV encoding."""

    UNDECIDED = -1
    NON_VIBRATING = 0  # committed to "majority of tiles is non-vibrating"
    VIBRATING = 1      # committed to "majority of tiles is vibrating"


@dataclass(frozen=True)
class BetaPosterior:
    """Conjugate Beta model of the fill ratio.

    ``alpha`` counts 1-observations plus the unit prior, ``beta`` counts
    0-observations plus the unit prior, so ``alpha + beta - 2`` equals the
    number of integrated bits.
    """

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self) -> None:
        if self.alpha < 1.0 or self.beta < 1.0:
            raise ValueError(f"posterior counts must be >= 1, got ({self.alpha}, {self.beta})")


def update_posterior(post: BetaPosterior, o: int) -> BetaPosterior:
    """Integrate one binary observation: Beta(a, b) -> Beta(a + o, b + (1 - o))."""
    if o not in (0, 1):
        raise ValueError(f"observation must be 0 or 1, got {o!r}")
    return BetaPosterior(post.alpha + o, post.beta + (1 - o))


def belief(post: BetaPosterior) -> float:
    """Posterior probability that the fill ratio is below 0.5.

    Evaluates the Beta CDF at 0.5, i.e. the regularized incomplete beta
    function I_0.5(alpha, beta).  A symmetric posterior returns exactly 0.5.
    """
    if post.alpha == post.beta:
        return 0.5
    return regularized_incomplete_beta(post.alpha, post.beta, 0.5)


def variance(post: BetaPosterior) -> float:
    """Variance of the Beta posterior: ab / ((a+b)^2 (a+b+1))."""
    a, b = post.alpha, post.beta
    s = a + b
    return a * b / (s * s * (s + 1.0))


def mean_estimate(post: BetaPosterior) -> float:
    """Posterior mean a / (a + b), the robot's point estimate of the fill ratio."""
    return post.alpha / (post.alpha + post.beta)


def try_decide(
    post: BetaPosterior,
    observation_count: int,
    theta_o: int,
    p_c: float,
    current: Decision,
    strategy_is_soft: bool,
) -> Decision:
    """Apply the credibility-threshold decision rule and return the new decision.

    A decision is only considered once the robot's own sample count strictly
    exceeds ``theta_o``.  Under the non-soft strategies a committed decision is
    irreversible; under soft feedback it is re-evaluated every time and may be
    overwritten.  Thresholds are strict: belief must exceed ``p_c`` (or fall
    below ``1 - p_c``) to commit; exact ties leave ``current`` unchanged.
    """
    if not 0.5 < p_c < 1.0:
        raise ValueError(f"credibility threshold must lie in (0.5, 1), got {p_c}")
    if observation_count <= theta_o:
        return current
    if not strategy_is_soft and current is not Decision.UNDECIDED:
        return current
    p = belief(post)
    if p > p_c:
        return Decision.NON_VIBRATING
    if (1.0 - p) > p_c:
        return Decision.VIBRATING
    return current


# Regularized incomplete beta via Lentz's continued fraction.  Posterior
# counts grow unbounded over a long trial, so the evaluation must stay cheap
# and accurate for shape parameters in the thousands; the continued fraction
# with the symmetric switch below is accurate to ~1e-14 at x = 0.5.

_FPMIN = 1e-300
_CF_EPS = 1e-15
_CF_MAX_ITER = 2000


def _betacf(a: float, b: float, x: float) -> float:
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge for ({a}, {b}, {x})")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b), the CDF of Beta(a, b) at x."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("shape parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    front = math.exp(a * math.log(x) + b * math.log1p(-x) - ln_beta)
    # Symmetric switch keeps the continued fraction in its fast-converging
    # regime and makes I_x(a,b) + I_{1-x}(b,a) sum to 1 to the last bit.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b
