"""Additive Holt-Winters smoothing (Holt's linear trend when the frequency is 1).

Smoothing weights are chosen by minimising the in-sample one-step squared
error, first on a 0.1 grid over [0, 1]^3 and then on a 0.01 grid within one
coarse step of the coarse optimum. Every grid point is evaluated in a single
vectorised pass over the series.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import TimeSeries
from ..errors import TooShort
from .base import ModelId, check_horizon


@dataclass(frozen=True)
class HoltWintersModel:
    alpha: float
    beta: float
    gamma: float
    level: float
    trend: float
    season: tuple[float, ...]  # seasonal terms of the last m observations, oldest first
    sse: float = field(default=float("nan"))
    model_id: ModelId = ModelId.HOLT_WINTERS

    @property
    def period(self) -> int:
        return len(self.season)

    def forecast(self, h: int) -> np.ndarray:
        h = check_horizon(h)
        steps = np.arange(1, h + 1)
        season = np.asarray(self.season)[(steps - 1) % self.period]
        return self.level + steps * self.trend + season


@dataclass(frozen=True)
class _Init:
    level: float
    trend: float
    season: np.ndarray
    start: int  # first time index run through the recursions


def _initial_state(y: np.ndarray, m: int) -> _Init:
    if m == 1:
        return _Init(float(y[0]), float(y[1] - y[0]), np.zeros(1), 1)
    t = np.arange(2 * m, dtype=float)
    slope, intercept = np.polyfit(t, y[: 2 * m], 1)
    resid = y[: 2 * m] - (intercept + slope * t)
    season = resid.reshape(2, m).mean(axis=0)
    season -= season.mean()
    return _Init(float(intercept + slope * (m - 1)), float(slope), season, m)


def _run(y: np.ndarray, m: int, init: _Init, alpha, beta, gamma):
    """Run the recursions for K parameter triples at once.

    Returns per-triple SSE and final (level, trend, season) state.
    """
    k = alpha.shape[0]
    level = np.full(k, init.level)
    trend = np.full(k, init.trend)
    season = np.tile(init.season, (k, 1))  # column j holds the term for time t with t % m == j
    sse = np.zeros(k)
    for t in range(init.start, len(y)):
        j = t % m
        s_old = season[:, j]
        pred = level + trend + s_old
        err = y[t] - pred
        sse += err * err
        new_level = alpha * (y[t] - s_old) + (1 - alpha) * (level + trend)
        trend = beta * (new_level - level) + (1 - beta) * trend
        level = new_level
        if m > 1:
            season[:, j] = gamma * (y[t] - level) + (1 - gamma) * s_old
    return sse, level, trend, season


def _grid(lo: int, hi: int, scale: int) -> np.ndarray:
    return np.arange(lo, hi + 1) / scale


def _search(y, m, init, alphas, betas, gammas):
    a, b, g = (x.ravel() for x in np.meshgrid(alphas, betas, gammas, indexing="ij"))
    sse, *_ = _run(y, m, init, a, b, g)
    i = int(np.argmin(sse))
    return a[i], b[i], g[i]


def _around(x: float) -> np.ndarray:
    c = int(round(x * 100))
    return _grid(max(0, c - 10), min(100, c + 10), 100)


def fit_holt_winters(train: TimeSeries) -> HoltWintersModel:
    m = train.frequency
    n = len(train)
    need = max(2 * m, 2)
    if n < need:
        raise TooShort(f"Holt-Winters needs at least {need} points, got {n}")
    y = train.as_array()
    init = _initial_state(y, m)

    coarse = _grid(0, 10, 10)
    flat = np.zeros(1)
    a, b, g = _search(y, m, init, coarse, coarse, coarse if m > 1 else flat)
    a, b, g = _search(y, m, init, _around(a), _around(b), _around(g) if m > 1 else flat)

    sse, level, trend, season = _run(y, m, init, np.array([a]), np.array([b]), np.array([g]))
    # reorder the seasonal buffer so that index 0 is the oldest of the last m observations
    order = [(n - m + i) % m for i in range(m)]
    return HoltWintersModel(
        alpha=float(a),
        beta=float(b),
        gamma=float(g),
        level=float(level[0]),
        trend=float(trend[0]),
        season=tuple(float(s) for s in season[0, order]),
        sse=float(sse[0]),
    )
