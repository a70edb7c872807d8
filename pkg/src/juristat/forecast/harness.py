"""Holdout model selection: fit every candidate on a training prefix, keep the lowest MSE."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..core import SplitSpec, TimeSeries, mse, split
from ..errors import AllModelsFailed, InvalidValue, JuristatError
from .ar import fit_auto_ar
from .base import FittedModel, ModelId, check_horizon
from .holtwinters import fit_holt_winters
from .naive import fit_seasonal_naive
from .nnar import default_spec, fit_nnar

log = logging.getLogger(__name__)

SEED_OFFSET = {
    ModelId.AUTO_AR: 0,
    ModelId.HOLT_WINTERS: 1,
    ModelId.SEASONAL_NAIVE: 2,
    ModelId.NNAR: 3,
}


def _fit_ar(train: TimeSeries, seed: int, nnar_repeats: int) -> FittedModel:
    max_p = min(12, len(train) - 2 * train.frequency)
    return fit_auto_ar(train, max_p=max(1, max_p))


def _fit_nnar(train: TimeSeries, seed: int, nnar_repeats: int) -> FittedModel:
    return fit_nnar(train, default_spec(train, seed=seed, repeats=nnar_repeats))


FITTERS: dict[ModelId, Callable[[TimeSeries, int, int], FittedModel]] = {
    ModelId.AUTO_AR: _fit_ar,
    ModelId.HOLT_WINTERS: lambda train, seed, reps: fit_holt_winters(train),
    ModelId.SEASONAL_NAIVE: lambda train, seed, reps: fit_seasonal_naive(train),
    ModelId.NNAR: _fit_nnar,
}


def fit_model(model_id: ModelId, train: TimeSeries, seed: int = 42, nnar_repeats: int = 20) -> FittedModel:
    """Fit one candidate family exactly as :func:`fits` does."""
    return FITTERS[model_id](train, seed + SEED_OFFSET[model_id], nnar_repeats)


@dataclass(frozen=True, eq=False)
class ForecastReport:
    forecast: TimeSeries
    mse_per_model: dict[ModelId, float]
    best_model: ModelId
    runtime_seconds: float
    holdout_forecasts: dict[ModelId, tuple[float, ...]] = field(repr=False)
    failures: dict[ModelId, str] = field(default_factory=dict)
    train: TimeSeries | None = field(default=None, repr=False)
    test: TimeSeries | None = field(default=None, repr=False)
    model_description: str = ""
    intervals: tuple[tuple[float, ...], tuple[float, ...]] | None = field(default=None, repr=False)

    def to_dict(self, include_runtime: bool = True) -> dict:
        out = {
            "best_model": self.best_model.value,
            "model_description": self.model_description,
            "mse_per_model": {k.value: v for k, v in self.mse_per_model.items()},
            "failures": {k.value: v for k, v in self.failures.items()},
            "train_length": len(self.train) if self.train is not None else None,
            "test_length": len(self.test) if self.test is not None else None,
            "forecast": {
                "start": list(self.forecast.start),
                "frequency": self.forecast.frequency,
                "values": list(self.forecast.values),
            },
            "intervals": None
            if self.intervals is None
            else {"lower": list(self.intervals[0]), "upper": list(self.intervals[1])},
        }
        if include_runtime:
            out["runtime_seconds"] = self.runtime_seconds
        return out


def _describe(model: FittedModel) -> str:
    mid = model.model_id
    if mid is ModelId.AUTO_AR:
        return f"AR lags {list(model.lags)}" if model.lags else "intercept only"
    if mid is ModelId.HOLT_WINTERS:
        return f"additive Holt-Winters(alpha={model.alpha:.2f}, beta={model.beta:.2f}, gamma={model.gamma:.2f})"
    if mid is ModelId.SEASONAL_NAIVE:
        return f"seasonal naive[{model.period}]"
    return model.spec.label


def _evaluate(model_id, train, test, seed, nnar_repeats):
    try:
        model = fit_model(model_id, train, seed, nnar_repeats)
        pred = model.forecast(len(test))
        if not np.all(np.isfinite(pred)):
            raise InvalidValue("non-finite forecast")
        return model_id, tuple(float(x) for x in pred), mse(test.values, pred), None
    except (JuristatError, np.linalg.LinAlgError, FloatingPointError) as exc:
        log.warning("%s demoted: %s", model_id.value, exc)
        return model_id, None, None, str(exc)


def fits(
    series: TimeSeries,
    train: float = 0.8,
    steps: int | None = None,
    max_points: int = 500,
    seed: int = 42,
    workers: int = 1,
    pi: bool = False,
    nnar_repeats: int = 20,
) -> ForecastReport:
    """Pick the family with the lowest holdout MSE, refit it on all data and forecast.

    The series is first cut to its last ``max_points`` observations; the first
    ``floor(train * n)`` of those train each candidate and the rest score it.
    ``steps`` defaults to the length of that scored tail. A candidate that
    fails to fit is left out of the ranking and reported under ``failures``.
    """
    t_start = time.perf_counter()
    if isinstance(max_points, bool) or int(max_points) != max_points or max_points < 1:
        raise InvalidValue(f"max_points must be a positive integer, got {max_points}")
    if steps is not None:
        steps = check_horizon(steps)
    data = series.slice(max(0, len(series) - max_points))
    train_part, test_part = split(data, SplitSpec(train))

    args = [(mid, train_part, test_part, seed, nnar_repeats) for mid in ModelId]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: _evaluate(*a), args))
    else:
        results = [_evaluate(*a) for a in args]

    scores: dict[ModelId, float] = {}
    holdout: dict[ModelId, tuple[float, ...]] = {}
    failures: dict[ModelId, str] = {}
    for mid, pred, score, err in results:
        if err is None:
            scores[mid], holdout[mid] = score, pred
        else:
            failures[mid] = err
    if not scores:
        raise AllModelsFailed("; ".join(f"{k.value}: {v}" for k, v in failures.items()))

    best = min(scores, key=lambda k: (scores[k], k.rank))
    horizon = steps if steps is not None else len(test_part)
    final = fit_model(best, data, seed, nnar_repeats)
    point = final.forecast(horizon)

    intervals = None
    if pi and best is ModelId.NNAR:
        lo, hi = final.forecast_intervals(horizon, seed=seed + SEED_OFFSET[best])
        intervals = (tuple(float(x) for x in lo), tuple(float(x) for x in hi))

    return ForecastReport(
        forecast=data.following([float(x) for x in point]),
        mse_per_model=scores,
        best_model=best,
        runtime_seconds=time.perf_counter() - t_start,
        holdout_forecasts=holdout,
        failures=failures,
        train=train_part,
        test=test_part,
        model_description=_describe(final),
        intervals=intervals,
    )
