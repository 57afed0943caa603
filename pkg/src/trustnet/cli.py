"""Command-line front end.

Three subcommands:

- ``simulate``: run a scenario file for one or more replications and write
  CSV rows plus a JSON summary per replication.
- ``eval``: replay a trace of interaction outcomes through the windowed
  model and print the final state and verdicts as JSON.
- ``compare``: replay a trace through both models side by side.

Exit codes: 0 success, 2 invalid input (the message names the offending
field or line), 3 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

from .config import load_scenario, load_trace, parse_banding
from .errors import ConfigError
from .median_risk import ModelParams, bootstrap, evaluate
from .ordinal import DirectTrustStore
from .report import render_json
from .rng import MAX_SEED
from .scales import DEFAULT_BANDING, OrdinalDegree, TrustTenths
from .simulate import CONTEXT, Scenario, run_scenario

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def _parse_tenths_list(text: str, where: str) -> list[TrustTenths]:
    values = []
    for i, chunk in enumerate(text.split(",")):
        try:
            values.append(TrustTenths.parse(chunk))
        except ValueError as exc:
            raise ConfigError(f"{where}[{i}]: {exc}") from None
    return values


def _params_from_args(args: argparse.Namespace) -> ModelParams:
    try:
        return ModelParams(k=args.k, n=args.n, td_th=args.td_th, rv_th=args.rv_th)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=float, required=True, help="forgetting weight, > 0")
    parser.add_argument("--n", type=int, required=True, help="window growth cap, >= 1")
    parser.add_argument("--td-th", type=float, required=True, dest="td_th",
                        help="trust threshold in [0, 1]")
    parser.add_argument("--rv-th", type=float, required=True, dest="rv_th",
                        help="risk threshold, >= 0")


def _jobs_from(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        raw = os.environ.get("TRUSTNET_JOBS", "1")
        try:
            jobs = int(raw)
        except ValueError:
            raise ConfigError(f"TRUSTNET_JOBS: expected an integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError(f"jobs: must be >= 1, got {jobs}")
    return jobs


def cmd_simulate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    base_seed = args.seed if args.seed is not None else scenario.seed
    if not 0 <= base_seed <= MAX_SEED:
        raise ConfigError(f"seed: must be an unsigned 64-bit integer, got {base_seed}")
    if args.replications < 1:
        raise ConfigError(f"replications: must be >= 1, got {args.replications}")
    if base_seed + args.replications - 1 > MAX_SEED:
        raise ConfigError("seed: replication seeds overflow the 64-bit range")
    jobs = _jobs_from(args)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv = args.format in ("csv", "both")
    write_json = args.format in ("json", "both")

    def run_one(rep: int) -> list[Path]:
        seeded: Scenario = replace(scenario, seed=base_seed + rep)
        result = run_scenario(seeded)
        written = []
        if write_csv:
            path = out_dir / f"report-{rep:03d}.csv"
            path.write_text(result.to_csv(), encoding="utf-8")
            written.append(path)
        if write_json:
            path = out_dir / f"summary-{rep:03d}.json"
            path.write_text(result.summary_json(), encoding="utf-8")
            written.append(path)
        return written

    written: list[Path] = []
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for paths in pool.map(run_one, range(args.replications)):
            written.extend(paths)
    for path in sorted(written):
        print(f"wrote {path}")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    values, _subject = load_trace(args.trace)
    params = _params_from_args(args)
    recs = _parse_tenths_list(args.recs, "recs") if args.recs else None

    state = bootstrap(recs, params)
    if args.prior_td is not None:
        if not 0.0 <= args.prior_td <= 1.0:
            raise ConfigError(f"prior-td: must be within [0, 1], got {args.prior_td}")
        state.td_gen = args.prior_td
    if args.grown:
        state.window.period_index = params.n - 1
        state.window.capacity = params.n
    for value in values:
        state.push(value, params)

    verdict = evaluate(state, params)
    out = state.as_dict()
    out["trustworthy"] = verdict.trustworthy
    out["risky"] = verdict.risky
    print(render_json(out))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    values, subject = load_trace(args.trace)
    if not values:
        raise ConfigError("trace: must contain at least one value")
    params = _params_from_args(args)
    if args.banding:
        banding = parse_banding([t.value for t in _parse_tenths_list(args.banding, "banding")])
    else:
        banding = DEFAULT_BANDING
    peer = subject or "subject"

    state = bootstrap(None, params)
    store = DirectTrustStore()
    for value in values:
        state.push(value, params)
        store.record_experience(CONTEXT, peer, banding.degree_for(value))

    verdict = evaluate(state, params)
    counters = store.counters(CONTEXT, peer)
    degree = counters.trust_degree()
    out = {
        "median_risk": {
            "td_gen": state.td_gen,
            "rv": state.rv,
            "trustworthy": verdict.trustworthy,
            "risky": verdict.risky,
        },
        "ordinal": {
            "degree": degree.token,
            "trustworthy": degree >= OrdinalDegree.GOOD,
            "counters": {d.token: counters.count(d) for d in OrdinalDegree},
        },
        "subject": peer,
    }
    print(render_json(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trustnet",
        description="Trust and reputation models with a deterministic community simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a scenario file")
    p_sim.add_argument("--scenario", required=True, help="path to the scenario JSON")
    p_sim.add_argument("--out", required=True, help="output directory")
    p_sim.add_argument("--format", choices=("csv", "json", "both"), default="both")
    p_sim.add_argument("--replications", type=int, default=1)
    p_sim.add_argument("--seed", type=int, default=None,
                       help="override the scenario base seed; replication r runs with seed + r")
    p_sim.add_argument("--jobs", type=int, default=None,
                       help="max concurrent replications (default: $TRUSTNET_JOBS or 1)")
    p_sim.set_defaults(func=cmd_simulate)

    p_eval = sub.add_parser("eval", help="replay a trace through the windowed model")
    p_eval.add_argument("--trace", required=True, help="path to the trace file")
    _add_param_flags(p_eval)
    p_eval.add_argument("--recs", default=None,
                        help="comma-separated reputation values for the bootstrap, e.g. 0.5,0.8")
    p_eval.add_argument("--prior-td", type=float, default=None, dest="prior_td",
                        help="start from this trust degree instead of the bootstrap value")
    p_eval.add_argument("--grown", action="store_true",
                        help="start with the window already grown to its cap n")
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = sub.add_parser("compare", help="replay a trace through both models")
    p_cmp.add_argument("--trace", required=True, help="path to the trace file")
    _add_param_flags(p_cmp)
    p_cmp.add_argument("--banding", default=None,
                       help="comma-separated grade cut points, default 0.3,0.6,0.9")
    p_cmp.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
