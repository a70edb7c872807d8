"""Autoregression with automatic order selection by AICc.

Candidates are AR(p) for p = 1..max_p, each with and without an extra
seasonal lag at the series frequency. Coefficients come from ordinary least
squares on a lagged design matrix; all candidates share the same estimation
sample so their AICc values are comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..core import TimeSeries
from ..errors import InvalidValue, TooShort
from .base import ModelId, check_horizon


@dataclass(frozen=True)
class ARModel:
    intercept: float
    lags: tuple[int, ...]
    coefs: tuple[float, ...]
    history: tuple[float, ...] = field(repr=False)
    aicc: float = float("nan")
    in_sample_mse: float = float("nan")
    model_id: ModelId = ModelId.AUTO_AR

    @property
    def order(self) -> int:
        """Number of leading consecutive lags (the seasonal lag is not counted)."""
        p = 0
        while p + 1 in self.lags:
            p += 1
        return p

    def coef(self, lag: int) -> float:
        return self.coefs[self.lags.index(lag)] if lag in self.lags else 0.0

    def forecast(self, h: int) -> np.ndarray:
        h = check_horizon(h)
        buf = list(self.history)
        out = np.empty(h)
        for i in range(h):
            y = self.intercept + sum(c * buf[-l] for l, c in zip(self.lags, self.coefs))
            buf.append(y)
            out[i] = y
        return out


def _design(y: np.ndarray, lags: tuple[int, ...], t0: int) -> np.ndarray:
    cols = [np.ones(len(y) - t0)] + [y[t0 - l : len(y) - l] for l in lags]
    return np.column_stack(cols)


def _aicc(rss: float, n_obs: int, n_params: int) -> float:
    k = n_params + 1  # + innovation variance
    if n_obs - k - 1 <= 0:
        return math.inf
    return n_obs * math.log(rss / n_obs) + 2 * k + 2 * k * (k + 1) / (n_obs - k - 1)


def candidate_lags(max_p: int, m: int, seasonal: bool = True) -> list[tuple[int, ...]]:
    out = []
    for p in range(1, max_p + 1):
        base = tuple(range(1, p + 1))
        out.append(base)
        if seasonal and m > p:
            out.append(base + (m,))
    return out


def fit_auto_ar(train: TimeSeries, max_p: int = 12, seasonal: bool = True) -> ARModel:
    """AICc-selected AR model; rank-deficient designs are dropped from the race.

    If every candidate is singular (a constant series, say) the
    intercept-only model is returned.
    """
    m = train.frequency
    n = len(train)
    if max_p < 1:
        raise InvalidValue(f"max_p must be at least 1, got {max_p}")
    if n < max_p + 2 * m:
        raise TooShort(f"AR order search needs {max_p + 2 * m} points, got {n}")
    y = train.as_array()
    use_seasonal = seasonal and m > 1
    t0 = max(max_p, m if use_seasonal else 0)
    target = y[t0:]
    n_obs = len(target)
    # RSS floor so that exact fits tie and the penalty decides
    rss_floor = n_obs * 1e-12 * (float(np.var(y)) + 1.0)

    best = None
    for lags in candidate_lags(max_p, m, use_seasonal):
        X = _design(y, lags, t0)
        if np.linalg.matrix_rank(X) < X.shape[1]:
            continue
        beta, *_ = np.linalg.lstsq(X, target, rcond=None)
        rss = float(np.sum((target - X @ beta) ** 2))
        score = _aicc(max(rss, rss_floor), n_obs, X.shape[1])
        if best is None or score < best[0]:
            best = (score, lags, beta, rss)

    if best is None:
        mean = float(np.mean(target))
        rss = float(np.sum((target - mean) ** 2))
        return ARModel(mean, (), (), tuple(y), _aicc(max(rss, rss_floor), n_obs, 1), rss / n_obs)

    score, lags, beta, rss = best
    return ARModel(
        intercept=float(beta[0]),
        lags=lags,
        coefs=tuple(float(b) for b in beta[1:]),
        history=tuple(y),
        aicc=score,
        in_sample_mse=rss / n_obs,
    )
