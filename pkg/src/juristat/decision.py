"""Decision calculators: Hand rule, expected daily loss, conviction rates, belief updating."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from numbers import Real
from typing import Sequence

from .errors import (
    InconsistentCounts,
    InvalidValue,
    LengthMismatch,
    OutOfRange,
    ZeroAccused,
    ZeroEvidence,
)

BELIEF_TOL = 1e-12


def _check_nonneg(name: str, x: Real) -> None:
    if not (x >= 0 and math.isfinite(x)):
        raise InvalidValue(f"{name} must be a finite non-negative number, got {x}")


def _check_prob(name: str, x: Real) -> None:
    if not 0 <= x <= 1:
        raise InvalidValue(f"{name} must lie in [0, 1], got {x}")


# -- Hand rule -----------------------------------------------------------------


@dataclass(frozen=True)
class HandInputs:
    burden: float
    prob: float
    loss: float

    def __post_init__(self):
        _check_nonneg("burden", self.burden)
        _check_prob("prob", self.prob)
        _check_nonneg("loss", self.loss)


@dataclass(frozen=True)
class HandVerdict:
    liable: bool
    expected_harm: float


def hand_rule(inputs: HandInputs) -> HandVerdict:
    """Liable iff the burden of precaution is strictly below ``P * L``."""
    harm = inputs.prob * inputs.loss
    return HandVerdict(liable=inputs.burden < harm, expected_harm=harm)


# -- expected loss -------------------------------------------------------------


@dataclass(frozen=True)
class ExpectedLoss:
    value: float
    text: str


def format_money(value: float) -> str:
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def expected_daily_loss(
    average_consult: float,
    prob_hire: float,
    average_ticket: float,
    business_days: int = 22,
) -> ExpectedLoss:
    """Expected revenue lost per business day while a company is wrongly blacklisted.

    ``average_consult`` monthly credit checks, a fraction ``prob_hire`` of which
    would become customers spending ``average_ticket`` each.
    """
    _check_nonneg("average_consult", average_consult)
    _check_prob("prob_hire", prob_hire)
    _check_nonneg("average_ticket", average_ticket)
    if int(business_days) != business_days or business_days < 1:
        raise InvalidValue(f"business_days must be a positive integer, got {business_days}")
    value = average_consult * prob_hire * average_ticket / business_days
    text = f"The estimated loss amount per business day is ${format_money(value)}."
    return ExpectedLoss(value=value, text=text)


# -- conviction rate -----------------------------------------------------------


def conviction_rate(convicted: int, accused: int) -> float:
    if convicted < 0 or accused < 0:
        raise InvalidValue("counts must be non-negative")
    if accused == 0:
        raise ZeroAccused("number of accused must be positive")
    if convicted > accused:
        raise InconsistentCounts(f"convicted ({convicted}) exceeds accused ({accused})")
    return convicted / accused


# -- beliefs -------------------------------------------------------------------


@dataclass(frozen=True)
class DiscreteBelief:
    """Probability weights over a finite set of hypotheses.

    Weights are kept in whatever numeric type was supplied, so passing
    :class:`fractions.Fraction` values gives exact arithmetic throughout.
    """

    weights: tuple
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        w = tuple(self.weights)
        object.__setattr__(self, "weights", w)
        if not w:
            raise InvalidValue("a belief needs at least one hypothesis")
        if any(not (x >= 0) for x in w):
            raise InvalidValue("belief weights must be non-negative")
        if abs(sum(w) - 1) > BELIEF_TOL:
            raise InvalidValue(f"belief weights must sum to 1, got {sum(w)}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(w):
                raise LengthMismatch("one label per weight required")

    @classmethod
    def uniform(cls, k: int, labels=None) -> "DiscreteBelief":
        return cls(tuple([1.0 / k] * k), labels)

    def __len__(self) -> int:
        return len(self.weights)


def bayes_update_discrete(prior: DiscreteBelief, likelihood: Sequence[Real]) -> DiscreteBelief:
    """Posterior weights ``prior_i * L_i / sum_j prior_j * L_j``."""
    lik = tuple(likelihood)
    if len(lik) != len(prior):
        raise LengthMismatch(f"prior has {len(prior)} hypotheses, likelihood has {len(lik)}")
    if any(not (x >= 0) for x in lik):
        raise InvalidValue("likelihood values must be non-negative")
    joint = [p * l for p, l in zip(prior.weights, lik)]
    evidence = sum(joint)
    if evidence == 0:
        raise ZeroEvidence("the data has zero probability under every hypothesis")
    return DiscreteBelief(tuple(j / evidence for j in joint), prior.labels)


@dataclass(frozen=True)
class BetaBelief:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise InvalidValue(f"beta parameters must be positive, got ({self.alpha}, {self.beta})")

    @property
    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    @property
    def variance(self) -> float:
        s = self.alpha + self.beta
        return self.alpha * self.beta / (s * s * (s + 1))


def beta_update(belief: BetaBelief, successes: int, failures: int) -> BetaBelief:
    if successes < 0 or failures < 0:
        raise InvalidValue("successes and failures must be non-negative")
    return BetaBelief(belief.alpha + successes, belief.beta + failures)


OPINION_CONCENTRATION = 12


def beta_from_opinion(level: int) -> BetaBelief:
    """Beta prior for an ordinal opinion on a 0..5 scale.

    0 means ignorance and maps to the uniform Beta(1, 1). Levels 1..5 run from
    highly favourable to the first party (mean 5/6) down to highly favourable
    to the second (mean 1/6), all with concentration ``alpha + beta = 12``.
    The mapping is a modelling choice; any monotone family would do.
    """
    if isinstance(level, bool) or int(level) != level or not 0 <= level <= 5:
        raise OutOfRange(f"opinion level must be an integer in 0..5, got {level}")
    if level == 0:
        return BetaBelief(1.0, 1.0)
    mean = Fraction(6 - level, 6)
    return BetaBelief(
        float(mean * OPINION_CONCENTRATION), float((1 - mean) * OPINION_CONCENTRATION)
    )
