"""Quantitative legal analytics: jury probabilities, decision calculators,
term association and court-volume forecasting."""

from .core import SplitSpec, TimeSeries, mse, parse_series_csv, serialize_series_csv, split
from .errors import JuristatError

__version__ = "0.1.0"

__all__ = [
    "JuristatError",
    "SplitSpec",
    "TimeSeries",
    "mse",
    "parse_series_csv",
    "serialize_series_csv",
    "split",
]
