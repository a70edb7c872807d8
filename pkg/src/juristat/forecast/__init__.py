"""Univariate forecasting with holdout-MSE model selection."""

from .ar import ARModel, fit_auto_ar
from .base import FittedModel, ModelId, forecast
from .harness import ForecastReport, fit_model, fits
from .holtwinters import HoltWintersModel, fit_holt_winters
from .naive import SeasonalNaiveModel, fit_seasonal_naive
from .nnar import NnarModel, NnarSpec, default_spec, fit_nnar, hidden_units

__all__ = [
    "ARModel",
    "FittedModel",
    "ForecastReport",
    "HoltWintersModel",
    "ModelId",
    "NnarModel",
    "NnarSpec",
    "SeasonalNaiveModel",
    "default_spec",
    "fit_auto_ar",
    "fit_holt_winters",
    "fit_model",
    "fit_nnar",
    "fit_seasonal_naive",
    "fits",
    "forecast",
    "hidden_units",
]
