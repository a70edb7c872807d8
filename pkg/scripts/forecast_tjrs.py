"""Run the forecasting harness on an embedded dataset and save the report and chart.

    python scripts/forecast_tjrs.py --out runs/tjrs
"""

import argparse
import json
import logging
from pathlib import Path

from juristat.data import load_fixture
from juristat.forecast import fits
from juristat.svg import render_forecast_svg, render_holdout_svgs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dataset", default="tjrs_year_month")
    ap.add_argument("--out", type=Path, default=Path("runs/tjrs"))
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--pi", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    series = load_fixture(args.dataset).series
    report = fits(series, seed=args.seed, workers=args.workers, pi=args.pi)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "report.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    render_forecast_svg(series, report, args.out / "forecast.svg")
    render_holdout_svgs(report, args.out / "holdout")

    print(f"{'model':<16}{'holdout MSE':>16}")
    for mid, score in sorted(report.mse_per_model.items(), key=lambda kv: kv[1]):
        marker = "  <- selected" if mid is report.best_model else ""
        print(f"{mid.value:<16}{score:>16.1f}{marker}")
    for mid, reason in report.failures.items():
        print(f"{mid.value:<16}{'failed':>16}  {reason}")
    print(f"{report.model_description}; {report.runtime_seconds:.2f} s; outputs in {args.out}")


if __name__ == "__main__":
    main()
