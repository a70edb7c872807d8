from __future__ import annotations

import enum
from typing import Protocol

import numpy as np

from ..errors import InvalidValue


class ModelId(enum.Enum):
    """Candidate model families; declaration order breaks MSE ties."""

    AUTO_AR = "auto_ar"
    HOLT_WINTERS = "holt_winters"
    SEASONAL_NAIVE = "seasonal_naive"
    NNAR = "nnar"

    @property
    def rank(self) -> int:
        return list(ModelId).index(self)


class FittedModel(Protocol):
    model_id: ModelId

    def forecast(self, h: int) -> np.ndarray: ...


def check_horizon(h: int) -> int:
    if isinstance(h, bool) or int(h) != h or h < 1:
        raise InvalidValue(f"forecast horizon must be a positive integer, got {h}")
    return int(h)


def forecast(model: FittedModel, h: int) -> np.ndarray:
    """Recursive ``h``-step point forecast from a fitted model."""
    return model.forecast(check_horizon(h))
