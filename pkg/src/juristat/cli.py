"""``juristat`` command line.

Exit status: 0 on success, 1 on a domain error (``juristat: error [CODE]: ...``
on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from .core import SplitSpec, parse_series_csv, serialize_series_csv
from .data import FIXTURES, load_fixture
from .decision import (
    BetaBelief,
    DiscreteBelief,
    HandInputs,
    bayes_update_discrete,
    beta_from_opinion,
    beta_update,
    conviction_rate,
    expected_daily_loss,
    hand_rule,
)
from .errors import InputFileNotFound, InvalidValue, IoFailure, JuristatError
from .forecast import fits
from .jury import PanelSpec, majority_prob, majority_prob_mc, min_panel_size
from .svg import render_forecast_svg, render_holdout_svgs
from .textassoc import Corpus, count_pair, stiles_association, tfidf, top_terms

DEFAULT_SEED = 42

FORECAST_EPILOG = """\
JSON keys: best_model, model_description, mse_per_model {model: mse},
failures {model: message}, train_length, test_length,
forecast {start: [year, period], frequency, values}, intervals
(null or {lower, upper}), runtime_seconds.

The training segment is the first floor(train * n) points of the last
--max-points observations; --steps defaults to the length of the remaining
test segment and accepts any positive integer.
"""


def read_text(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputFileNotFound(f"no such file: {path}")
    try:
        return p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise IoFailure(f"{path} is not valid UTF-8: {exc}") from exc
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def _floats(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("values must be finite")
    return vals


def _env_seed() -> int:
    raw = os.environ.get("JURISTAT_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InvalidValue(f"JURISTAT_SEED must be an integer, got {raw!r}") from None


# -- output ----------------------------------------------------------------------


def _emit_csv_rows(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _flat_csv(result: dict) -> str:
    keys = [k for k, v in result.items() if not isinstance(v, (dict, list))]
    return _emit_csv_rows(keys, [[result[k] for k in keys]])


def _flat_text(result: dict) -> str:
    return "".join(f"{k}: {v}\n" for k, v in result.items())


# -- subcommands -----------------------------------------------------------------
# each returns (result dict, text rendering, csv rendering)


def cmd_jury(args):
    spec = PanelSpec(args.n, args.theta)
    result = {"p_majority": majority_prob(spec)}
    if args.trials:
        result["p_majority_mc"] = majority_prob_mc(spec, args.trials, args.seed)
    if args.target is not None:
        result["min_panel_size"] = min_panel_size(args.theta, args.target)
    return result, _flat_text(result), _flat_csv(result)


def cmd_hand_rule(args):
    verdict = hand_rule(HandInputs(args.burden, args.prob, args.loss))
    result = {"liable": verdict.liable, "expected_harm": verdict.expected_harm}
    relation = "<" if verdict.liable else ">="
    text = (
        f"{'Liable' if verdict.liable else 'Not liable'}: burden {args.burden:g} {relation} "
        f"expected harm {verdict.expected_harm:g}\n"
    )
    return result, text, _flat_csv(result)


def cmd_expected_loss(args):
    ev = expected_daily_loss(args.consult, args.hire, args.ticket, args.days)
    result = {"expected_loss": ev.value, "text": ev.text}
    return result, ev.text + "\n", _flat_csv(result)


def cmd_conviction_rate(args):
    result = {"conviction_rate": conviction_rate(args.convicted, args.accused)}
    return result, _flat_text(result), _flat_csv(result)


def cmd_bayes_update(args):
    if args.beta is not None:
        if args.prior is not None or args.likelihood:
            raise InvalidValue("use either --beta or --prior/--likelihood, not both")
        if len(args.beta) != 2:
            raise InvalidValue("--beta takes two numbers: alpha,beta")
        post = beta_update(BetaBelief(*args.beta), args.successes, args.failures)
        result = {"alpha": post.alpha, "beta": post.beta, "mean": post.mean}
        return result, _flat_text(result), _flat_csv(result)
    if args.prior is None or not args.likelihood:
        raise InvalidValue("discrete updating needs --prior and at least one --likelihood")
    labels = args.labels.split(",") if args.labels else None
    belief = DiscreteBelief(tuple(args.prior), labels)
    for lik in args.likelihood:
        belief = bayes_update_discrete(belief, lik)
    names = belief.labels or tuple(f"h{i + 1}" for i in range(len(belief)))
    result = {"posterior": list(belief.weights), "labels": list(names)}
    text = "".join(f"{n}: {w:.6f}\n" for n, w in zip(names, belief.weights))
    csv_text = _emit_csv_rows(["hypothesis", "posterior"], zip(names, belief.weights))
    return result, text, csv_text


def cmd_beta_opinion(args):
    belief = beta_update(beta_from_opinion(args.level), args.successes, args.failures)
    result = {"alpha": belief.alpha, "beta": belief.beta, "mean": belief.mean}
    return result, _flat_text(result), _flat_csv(result)


def cmd_assoc(args):
    corpus = Corpus.from_lines(read_text(args.input).splitlines())
    counts = count_pair(corpus, args.term1.lower(), args.term2.lower())
    res = stiles_association(counts)
    result = {
        "A": counts.a,
        "B": counts.b,
        "f": counts.f,
        "N": counts.n,
        "magnitude": res.magnitude,
        "negative": res.negative,
    }
    return result, _flat_text(result), _flat_csv(result)


def cmd_tfidf(args):
    corpus = Corpus.from_lines(read_text(args.input).splitlines())
    weights = tfidf(corpus, base=args.base)
    ranked = top_terms(weights, args.top) if args.top else [
        sorted(w.items()) for w in weights
    ]
    result = {"documents": [dict(r) for r in ranked]}
    text = "".join(
        f"doc {i + 1}: " + ", ".join(f"{t}={v:.4f}" for t, v in r) + "\n" for i, r in enumerate(ranked)
    )
    csv_text = _emit_csv_rows(
        ["document", "term", "weight"], [(i + 1, t, v) for i, r in enumerate(ranked) for t, v in r]
    )
    return result, text, csv_text


def cmd_data_export(args):
    text = serialize_series_csv(load_fixture(args.name).series)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot write {args.output}: {exc}") from exc
        return None, "", ""
    return None, text, text


def cmd_data_list(args):
    rows = []
    for name in sorted(FIXTURES):
        fx = FIXTURES[name]()
        rows.append({"name": name, "length": len(fx.series), "total": fx.checksum, "description": fx.description})
    text = "".join(f"{r['name']}\t{r['length']}\t{r['total']}\t{r['description']}\n" for r in rows)
    csv_text = _emit_csv_rows(["name", "length", "total", "description"], [list(r.values()) for r in rows])
    return {"datasets": rows}, text, csv_text


def cmd_forecast(args):
    SplitSpec(args.train)
    if args.steps is not None and args.steps < 1:
        raise InvalidValue(f"--steps must be positive, got {args.steps}")
    if args.max_points < 1:
        raise InvalidValue(f"--max-points must be positive, got {args.max_points}")
    if args.dataset:
        series = load_fixture(args.dataset).series
    else:
        series = parse_series_csv(read_text(args.input))
    report = fits(
        series,
        train=args.train,
        steps=args.steps,
        max_points=args.max_points,
        seed=args.seed,
        workers=args.workers,
        pi=args.pi,
        nnar_repeats=args.repeats,
    )
    if args.chart:
        render_forecast_svg(series, report, args.chart)
    if args.chart_intermediate:
        render_holdout_svgs(report, args.chart_intermediate)

    result = report.to_dict()
    fc = report.forecast
    lines = [f"best model: {report.best_model.value} ({report.model_description})", "holdout MSE:"]
    lines += [f"  {k.value}: {v:.6g}" for k, v in report.mse_per_model.items()]
    lines += [f"  {k.value}: failed ({v})" for k, v in report.failures.items()]
    lines.append("forecast:")
    lines += [f"  {y}-{p:02d}: {v:.2f}" for (y, p), v in ((fc.epoch_at(i), x) for i, x in enumerate(fc.values))]
    lines.append(f"runtime: {report.runtime_seconds:.3f} s")
    csv_rows = []
    for i, v in enumerate(fc.values):
        y, p = fc.epoch_at(i)
        csv_rows.append((f"{y:04d}-{p:02d}-01" if fc.frequency == 12 else f"{y:04d}", v))
    csv_text = _emit_csv_rows(["period", "forecast"], csv_rows)
    return result, "\n".join(lines) + "\n", csv_text


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default=None, help="output format (default json)")

    parser = argparse.ArgumentParser(prog="juristat", description=__doc__.splitlines()[0].strip("`"))
    parser.add_argument("--version", action="version", version=f"juristat {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser(
        "forecast",
        parents=[fmt],
        help="select a forecasting model by holdout MSE and forecast",
        epilog=FORECAST_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="CSV file with header yearMonth,count")
    src.add_argument("--dataset", choices=sorted(FIXTURES), help="use an embedded dataset")
    p.add_argument("--train", type=float, default=0.8, help="training fraction in (0, 1) (default 0.8)")
    p.add_argument("--steps", type=int, default=None, help="forecast horizon (default: test length)")
    p.add_argument("--max-points", type=int, default=500, help="use only the last N points (default 500)")
    p.add_argument("--seed", type=int, default=None, help="random seed (default $JURISTAT_SEED or 42)")
    p.add_argument("--pi", action="store_true", help="bootstrap prediction intervals when NNAR wins (slow)")
    p.add_argument("--chart", default=None, help="write an SVG chart of the series and forecast")
    p.add_argument("--chart-intermediate", default=None, metavar="DIR", help="write one holdout SVG per model")
    p.add_argument("--workers", type=int, default=1, help="fit candidate models in parallel")
    p.add_argument("--repeats", type=int, default=20, help="networks averaged in the NNAR ensemble")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("jury", parents=[fmt], help="Condorcet majority probability")
    p.add_argument("--n", type=int, required=True, help="odd panel size")
    p.add_argument("--theta", type=float, required=True, help="probability each member is right")
    p.add_argument("--trials", type=int, default=0, help="also estimate by Monte Carlo with this many trials")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--target", type=float, default=None, help="also report the smallest odd panel reaching this")
    p.set_defaults(func=cmd_jury)

    p = sub.add_parser("hand-rule", parents=[fmt], help="negligence test: liable iff B < P*L")
    p.add_argument("--burden", type=float, required=True, help="cost of precautions B")
    p.add_argument("--prob", type=float, required=True, help="probability of the accident P")
    p.add_argument("--loss", type=float, required=True, help="gravity of the injury L")
    p.set_defaults(func=cmd_hand_rule)

    p = sub.add_parser("expected-loss", parents=[fmt], help="expected loss per business day (default text output)")
    p.add_argument("--consult", type=float, required=True, help="average monthly credit consultations")
    p.add_argument("--hire", type=float, required=True, help="fraction of consultations converted")
    p.add_argument("--ticket", type=float, required=True, help="average ticket per client")
    p.add_argument("--days", type=int, default=22, help="business days per month (default 22)")
    p.set_defaults(func=cmd_expected_loss, default_format="text")

    p = sub.add_parser("conviction-rate", parents=[fmt], help="convicted / accused")
    p.add_argument("--convicted", type=int, required=True)
    p.add_argument("--accused", type=int, required=True)
    p.set_defaults(func=cmd_conviction_rate)

    p = sub.add_parser("bayes-update", parents=[fmt], help="discrete or beta-binomial belief update")
    p.add_argument("--prior", type=_floats, help="comma-separated prior weights")
    p.add_argument(
        "--likelihood", type=_floats, action="append", default=[], help="comma-separated likelihoods; repeat to chain"
    )
    p.add_argument("--labels", help="comma-separated hypothesis labels")
    p.add_argument("--beta", type=_floats, help="beta prior alpha,beta")
    p.add_argument("--successes", type=int, default=0)
    p.add_argument("--failures", type=int, default=0)
    p.set_defaults(func=cmd_bayes_update)

    p = sub.add_parser("beta-opinion", parents=[fmt], help="beta prior from a 0..5 opinion level")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--successes", type=int, default=0)
    p.add_argument("--failures", type=int, default=0)
    p.set_defaults(func=cmd_beta_opinion)

    p = sub.add_parser("assoc", parents=[fmt], help="Stiles association factor of two terms")
    p.add_argument("--input", required=True, help="text file, one whitespace-tokenized document per line")
    p.add_argument("--term1", required=True)
    p.add_argument("--term2", required=True)
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("tfidf", parents=[fmt], help="TF-IDF weights per document")
    p.add_argument("--input", required=True, help="text file, one whitespace-tokenized document per line")
    p.add_argument("--base", type=float, default=math.e, help="logarithm base for IDF (default e)")
    p.add_argument("--top", type=int, default=0, help="keep only the top K terms per document")
    p.set_defaults(func=cmd_tfidf)

    p = sub.add_parser("data", help="embedded datasets")
    data_sub = p.add_subparsers(dest="data_command", metavar="ACTION", required=True)
    q = data_sub.add_parser("export", help="write a dataset as yearMonth,count CSV")
    q.add_argument("name", choices=sorted(FIXTURES))
    q.add_argument("--output", help="file to write (default stdout)")
    q.set_defaults(func=cmd_data_export, format="csv")
    q = data_sub.add_parser("list", parents=[fmt], help="list datasets")
    q.set_defaults(func=cmd_data_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _env_seed()
        result, text, csv_text = args.func(args)
    except JuristatError as exc:
        print(f"juristat: error [{exc.code}]: {exc}", file=sys.stderr)
        return 1

    fmt = args.format or getattr(args, "default_format", "json")
    if result is None or fmt == "csv":
        sys.stdout.write(csv_text)
    elif fmt == "text":
        sys.stdout.write(text)
    else:
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
