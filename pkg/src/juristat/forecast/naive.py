from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import TimeSeries
from ..errors import TooShort
from .base import ModelId, check_horizon


@dataclass(frozen=True)
class SeasonalNaiveModel:
    last_season: tuple[float, ...]
    model_id: ModelId = ModelId.SEASONAL_NAIVE

    @property
    def period(self) -> int:
        return len(self.last_season)

    def forecast(self, h: int) -> np.ndarray:
        h = check_horizon(h)
        season = np.asarray(self.last_season)
        # y[n+h] = y[n+h - m*ceil(h/m)], i.e. the last season repeated
        return season[np.arange(h) % self.period].copy()


def fit_seasonal_naive(train: TimeSeries) -> SeasonalNaiveModel:
    m = train.frequency
    if len(train) < m:
        raise TooShort(f"seasonal naive needs one full season ({m} points), got {len(train)}")
    return SeasonalNaiveModel(tuple(train.values[-m:]))
