"""Dependency-free SVG line charts of observed vs forecast values."""

from __future__ import annotations

import math
from pathlib import Path
from xml.sax.saxutils import escape

from .core import TimeSeries
from .errors import IoFailure

WIDTH, HEIGHT = 860, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 80, 20, 40, 50
OBSERVED_COLOR = "black"
FORECAST_COLOR = "blue"


def _nice_step(span: float, target: int = 6) -> float:
    if span <= 0:
        return 1.0
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render_svg(
    observed: TimeSeries,
    predicted: TimeSeries,
    title: str = "",
    band: tuple[tuple[float, ...], tuple[float, ...]] | None = None,
) -> str:
    """Observed values as a black polyline, predictions as a blue one.

    The blue line starts from the last observation preceding ``predicted``,
    so a one-step forecast still draws a visible segment.
    """
    obs_t = [observed.time_at(i) for i in range(len(observed))]
    obs_y = list(observed.values)
    pred_t = [predicted.time_at(i) for i in range(len(predicted))]
    pred_y = list(predicted.values)

    anchor = max((i for i, t in enumerate(obs_t) if t < pred_t[0] - 1e-9), default=None)
    if anchor is not None:
        pred_t.insert(0, obs_t[anchor])
        pred_y.insert(0, obs_y[anchor])

    all_y = obs_y + pred_y + (list(band[0]) + list(band[1]) if band else [])
    t_lo, t_hi = min(obs_t + pred_t), max(obs_t + pred_t)
    y_lo, y_hi = min(all_y), max(all_y)
    if t_hi == t_lo:
        t_hi = t_lo + 1
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1, y_hi + 1
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(t):
        return MARGIN_L + (t - t_lo) / (t_hi - t_lo) * plot_w

    def sy(v):
        return MARGIN_T + (1 - (v - y_lo) / (y_hi - y_lo)) * plot_h

    def points(ts, ys):
        return " ".join(f"{sx(t):.2f},{sy(v):.2f}" for t, v in zip(ts, ys))

    x0, y0 = MARGIN_L, HEIGHT - MARGIN_B
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" font-family="sans-serif" '
            f'font-size="15">{escape(title)}</text>'
        )
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{WIDTH - MARGIN_R}" y2="{y0}" stroke="#555555"/>')
    parts.append(f'<line x1="{x0}" y1="{MARGIN_T}" x2="{x0}" y2="{y0}" stroke="#555555"/>')

    year_step = max(1, int(_nice_step(t_hi - t_lo, 10)))
    first_year = math.ceil(t_lo)
    first_year += (-first_year) % year_step
    for year in range(first_year, math.floor(t_hi) + 1, year_step):
        x = sx(year)
        parts.append(f'<line x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + 5}" stroke="#555555"/>')
        parts.append(
            f'<text x="{x:.2f}" y="{y0 + 20}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{year}</text>'
        )
    v_step = _nice_step(y_hi - y_lo, 6)
    v = math.ceil(y_lo / v_step) * v_step
    while v <= y_hi:
        y = sy(v)
        parts.append(f'<line x1="{x0 - 5}" y1="{y:.2f}" x2="{x0}" y2="{y:.2f}" stroke="#555555"/>')
        parts.append(
            f'<text x="{x0 - 8}" y="{y + 4:.2f}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11">{_fmt(v)}</text>'
        )
        v += v_step

    if band is not None:
        lower, upper = band
        ts = [predicted.time_at(i) for i in range(len(predicted))]
        outline = points(ts, upper) + " " + points(ts[::-1], list(lower)[::-1])
        parts.append(f'<polygon points="{outline}" fill="#c6dbef" stroke="none" opacity="0.6"/>')

    parts.append(
        f'<polyline points="{points(obs_t, obs_y)}" fill="none" stroke="{OBSERVED_COLOR}" stroke-width="1.5"/>'
    )
    parts.append(
        f'<polyline points="{points(pred_t, pred_y)}" fill="none" stroke="{FORECAST_COLOR}" stroke-width="1.5"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(text: str, path) -> Path:
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write chart to {path}: {exc}") from exc
    return path


def render_forecast_svg(series: TimeSeries, report, path) -> Path:
    """Chart of the analysed series (black) and the winning model's forecast (blue)."""
    observed = series.slice(max(0, len(series) - len(report.train) - len(report.test)))
    title = f"{report.best_model.value}: {report.model_description}"
    return write_svg(render_svg(observed, report.forecast, title, report.intervals), path)


def render_holdout_svgs(report, directory) -> list[Path]:
    """One chart per candidate: full analysed series plus that model's holdout forecast."""
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(f"cannot create {directory}: {exc}") from exc
    observed = TimeSeries(
        report.train.values + report.test.values,
        report.train.start_year,
        report.train.start_period,
        report.train.frequency,
    )
    written = []
    for mid, pred in report.holdout_forecasts.items():
        predicted = report.train.following(pred)
        title = f"{mid.value} holdout, MSE {report.mse_per_model[mid]:.6g}"
        written.append(write_svg(render_svg(observed, predicted, title), directory / f"{mid.value}.svg"))
    return written
