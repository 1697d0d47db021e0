"""Outgoing-broadcast computation for the three information-sharing strategies.

Robots exchange single bits.  Under *no feedback* a robot relays its latest
raw floor observation.  Under *positive feedback* it relays its committed
decision once it has one, raw observations before that.  Under *soft
feedback* it draws the bit from a Bernoulli whose probability blends the
observation with the robot's belief; the blend weight

    delta = exp(-eta * Gamma) * (1/2 - p)^2

grows as the posterior variance Gamma shrinks (the swarm gets compelled
toward consensus) and vanishes near the indecisive belief p = 0.5 (so an
unsure robot keeps relaying plain observations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bayes import Decision

__all__ = [
    "NO_FEEDBACK",
    "POSITIVE_FEEDBACK",
    "SOFT_FEEDBACK",
    "Strategy",
    "MessageContext",
    "delta",
    "message_probability",
    "outgoing_message",
]

NO_FEEDBACK = "no-feedback"
POSITIVE_FEEDBACK = "positive-feedback"
SOFT_FEEDBACK = "soft-feedback"
_KINDS = (NO_FEEDBACK, POSITIVE_FEEDBACK, SOFT_FEEDBACK)


@dataclass(frozen=True)
class Strategy:
    """An information-sharing strategy; ``eta`` is only meaningful for soft feedback."""

    kind: str
    eta: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown strategy {self.kind!r}, expected one of {_KINDS}")
        if self.eta < 0.0:
            raise ValueError(f"eta must be nonnegative, got {self.eta}")

    @property
    def is_soft(self) -> bool:
        return self.kind == SOFT_FEEDBACK

    @classmethod
    def no_feedback(cls) -> "Strategy":
        return cls(NO_FEEDBACK)

    @classmethod
    def positive_feedback(cls) -> "Strategy":
        return cls(POSITIVE_FEEDBACK)

    @classmethod
    def soft_feedback(cls, eta: float) -> "Strategy":
        return cls(SOFT_FEEDBACK, eta)

    @classmethod
    def parse(cls, kind: str, eta: float = 0.0) -> "Strategy":
        return cls(kind, eta if kind == SOFT_FEEDBACK else 0.0)


@dataclass(frozen=True)
class MessageContext:
    """One robot's broadcast-relevant state at a sampling instant."""

    latest_observation: int
    belief_p: float
    posterior_variance: float
    decision: Decision = Decision.UNDECIDED


def delta(p: float, gamma: float, eta: float) -> float:
    """Belief weight exp(-eta*gamma) * (0.5 - p)^2, always in [0, 0.25]."""
    return math.exp(-eta * gamma) * (0.5 - p) ** 2


def message_probability(p: float, o: int, d: float) -> float:
    """Bernoulli parameter d*(1-p) + (1-d)*o for the soft-feedback message."""
    return d * (1.0 - p) + (1.0 - d) * o


def outgoing_message(strategy: Strategy, ctx: MessageContext, rng) -> int:
    """Compute the bit a robot broadcasts after a sampling event.

    ``rng`` is the owning robot's stream (numpy Generator); only soft
    feedback consumes randomness.
    """
    if strategy.kind == SOFT_FEEDBACK:
        d = delta(ctx.belief_p, ctx.posterior_variance, strategy.eta)
        q = message_probability(ctx.belief_p, ctx.latest_observation, d)
        return 1 if rng.random() < q else 0
    if strategy.kind == POSITIVE_FEEDBACK and ctx.decision is not Decision.UNDECIDED:
        return int(ctx.decision)
    return ctx.latest_observation
