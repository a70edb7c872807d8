"""Condorcet jury theorem: probability that a majority of independent voters is right."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

from .errors import CapExceeded, EvenPanel, InvalidValue
from .rng import XorShift64Star

EXACT_LIMIT = 60
MAX_PANEL = 10**6


@dataclass(frozen=True)
class PanelSpec:
    """``n`` voters, each correct independently with probability ``theta``.

    ``theta`` may be a :class:`fractions.Fraction`, in which case
    :func:`majority_prob` returns the exact rational probability.
    """

    n: int
    theta: Real

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise InvalidValue(f"panel size must be a positive integer, got {self.n}")
        if self.n % 2 == 0:
            raise EvenPanel(f"panel size must be odd, got {self.n}")
        if not 0 <= self.theta <= 1:
            raise InvalidValue(f"theta must lie in [0, 1], got {self.theta}")


def _exact_tail(n: int, theta: Fraction) -> Fraction:
    a, d = theta.numerator, theta.denominator
    b = d - a
    total = sum(math.comb(n, i) * a**i * b ** (n - i) for i in range(n // 2 + 1, n + 1))
    return Fraction(total, d**n)


def _log_tail(n: int, theta: float) -> float:
    if theta == 0.0:
        return 0.0
    if theta == 1.0:
        return 1.0
    i = np.arange(n // 2 + 1, n + 1, dtype=float)
    log_terms = (
        math.lgamma(n + 1)
        - np.array([math.lgamma(k + 1) + math.lgamma(n - k + 1) for k in i])
        + i * math.log(theta)
        + (n - i) * math.log1p(-theta)
    )
    top = log_terms.max()
    return float(min(1.0, math.exp(top) * np.exp(log_terms - top).sum()))


def majority_prob(spec: PanelSpec):
    """Upper binomial tail ``P(sum X_i > n/2)`` for ``n`` odd.

    Exact binomial coefficients up to ``n = 60``, log-space beyond.
    """
    n, theta = spec.n, spec.theta
    if isinstance(theta, Fraction):
        return _exact_tail(n, theta)
    theta = float(theta)
    if n > EXACT_LIMIT:
        return _log_tail(n, theta)
    q = 1.0 - theta
    return math.fsum(math.comb(n, i) * theta**i * q ** (n - i) for i in range(n // 2 + 1, n + 1))


def majority_prob_mc(spec: PanelSpec, trials: int, seed: int = 0) -> float:
    """Monte Carlo estimate of :func:`majority_prob` using :class:`XorShift64Star`."""
    if trials < 1:
        raise InvalidValue(f"trials must be positive, got {trials}")
    rng = XorShift64Star(seed)
    theta = float(spec.theta)
    need = spec.n // 2 + 1
    wins = 0
    chunk = max(1, 2_000_000 // spec.n)
    done = 0
    while done < trials:
        m = min(chunk, trials - done)
        u = rng.random(m * spec.n).reshape(m, spec.n)
        wins += int(np.count_nonzero((u < theta).sum(axis=1) >= need))
        done += m
    return wins / trials


def min_panel_size(theta: float, target: float, cap: int = MAX_PANEL) -> int:
    """Smallest odd ``n`` whose majority is right with probability at least ``target``.

    Walks odd ``n`` with the increment identity
    ``P(n+2) - P(n) = C(n, (n-1)/2) * (theta(1-theta))**((n+1)/2) * (2 theta - 1)``.
    """
    if not 0.5 < theta < 1:
        raise InvalidValue(f"theta must lie in (0.5, 1), got {theta}")
    if not 0 < target < 1:
        raise InvalidValue(f"target must lie in (0, 1), got {target}")
    pq = theta * (1.0 - theta)
    p = theta  # P(1)
    term = pq  # C(1, 0) * pq**1
    n = 1
    while p < target:
        if n + 2 > cap:
            raise CapExceeded(f"no panel up to n = {cap} reaches {target}")
        p += term * (2 * theta - 1)
        k = (n - 1) // 2
        # C(2k+3, k+1) / C(2k+1, k) = (2k+3)(2k+2) / ((k+2)(k+1))
        term *= (2 * k + 3) * (2 * k + 2) / ((k + 2) * (k + 1)) * pq
        n += 2
    return n
