"""Command-line surface for batch use.

Subcommands: ``tally`` (evaluate a rule on a profile file), ``detect``
(disappointment/frustration flags), ``check`` (bounded axiom search),
``paradox`` (emit the cyclic boundary profile), ``sim-sd`` and ``sim-manip``
(the two Monte-Carlo sweeps, written as CSV to an output directory).

Every command is non-interactive, exits 0 on success and nonzero with a
diagnostic on stderr otherwise.  Identical argv + input files + seed produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from collections import Counter

from .core import Profile, ProfileError
from .criteria import (
    CRITERION_NAMES,
    BudgetExceededError,
    check_axiom,
)
from .experiments import (
    ExperimentConfig,
    manipulation_config,
    paradox_profile,
    run_manipulation_experiment,
    run_sd_experiment,
    sd_config,
    write_metadata,
    write_records_csv,
    write_summary_csv,
)
from .manipulation import SCENARIO_NAMES
from .rules import RULE_NAMES, ConfigError, RuleConfig, evaluate
from .textio import ParseError, format_profile, label, parse_profile

SEED_ENV_VAR = "BALLOTFORGE_SEED"


class CliError(Exception):
    """A user-facing diagnostic; main() prints it and exits nonzero."""


def _read_profile(path: str):
    if path == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(str(exc)) from None
        name = path
    try:
        return parse_profile(text)
    except ParseError as exc:
        raise CliError(f"{name}:{exc.line_no}: {str(exc).split(': ', 1)[1]}") from None


def _check_rule(rule: str) -> str:
    if rule not in RULE_NAMES:
        raise CliError(f"unknown rule {rule!r}; valid rules: {', '.join(RULE_NAMES)}")
    return rule


def _check_criterion(criterion: str) -> str:
    if criterion not in CRITERION_NAMES:
        raise CliError(
            f"unknown criterion {criterion!r}; valid criteria: {', '.join(CRITERION_NAMES)}"
        )
    return criterion


def _rule_config(args, profile: Profile) -> RuleConfig:
    agenda = None
    if args.agenda is not None:
        try:
            agenda = tuple(int(f) for f in args.agenda.split(","))
        except ValueError:
            raise CliError(f"--agenda must be comma-separated integers, got {args.agenda!r}") from None
    return RuleConfig(agenda=agenda, dictator=args.dictator)


def _resolve_seed(args) -> int:
    """Flag wins over the environment; absent both, draw one and print it."""
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    seed = secrets.randbits(32)
    print(f"seed {seed}", flush=True)
    return seed


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_tally(args) -> int:
    profile, names = _read_profile(args.profile)
    rule = _check_rule(args.rule)
    config = _rule_config(args, profile)
    try:
        winners = sorted(evaluate(rule, profile, config))
    except (ConfigError, ValueError) as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({
            "rule": rule,
            "winners": winners,
            "labels": [label(w, names) for w in winners],
        }, sort_keys=True))
    elif args.format == "csv":
        print("rule,winner,label")
        for w in winners:
            print(f"{rule},{w},{label(w, names)}")
    else:
        if rule == "seqpairs" and config.agenda is None:
            print(f"# agenda {' '.join(map(str, profile.candidates))} (default ascending)")
        if not winners:
            print("# no winner (empty Condorcet set)")
        for w in winners:
            print(label(w, names))
    return 0


def _cmd_detect(args) -> int:
    from .criteria import condorcet_loser, sd_occurred, sf_occurred, strict_sd_occurred

    profile, names = _read_profile(args.profile)
    rule = _check_rule(args.rule)
    config = _rule_config(args, profile)
    try:
        winners = evaluate(rule, profile, config)
        sd = sd_occurred(profile, winners)
        strict = strict_sd_occurred(profile, winners)
    except (ConfigError, ValueError) as exc:
        raise CliError(str(exc)) from None
    sf = sf_occurred(profile, winners)
    loser = condorcet_loser(profile)
    if args.format == "json":
        print(json.dumps({
            "rule": rule,
            "winners": sorted(winners),
            "sd": sd,
            "strict_sd": strict,
            "sf": sf,
            "condorcet_loser": loser,
        }, sort_keys=True))
    elif args.format == "csv":
        print("rule,sd,strict_sd,sf")
        print(f"{rule},{int(sd)},{int(strict)},{int(sf)}")
    else:
        print(f"winners {' '.join(label(w, names) for w in sorted(winners))}")
        print(f"sd {int(sd)}")
        print(f"strict_sd {int(strict)}")
        print(f"sf {int(sf)}")
        if loser is not None:
            print(f"condorcet_loser {label(loser, names)}")
    return 0


def _check_cell(rule: str, criterion: str, max_m: int, max_n: int, budget: int) -> dict:
    record = {"rule": rule, "criterion": criterion, "max_m": max_m, "max_n": max_n}
    try:
        cx = check_axiom(rule, criterion, max_m, max_n, budget=budget)
    except BudgetExceededError as exc:
        record.update(status="budget-exceeded", estimate=exc.estimate, budget=exc.budget)
        return record
    if cx is None:
        record["status"] = "no-violation-found"
        return record
    record.update(
        status="counterexample",
        witness_profiles=[format_profile(p) for p in cx.witness_profiles],
        witness_candidates=list(cx.witness_candidates),
        details={k: v for k, v in cx.details.items()},
    )
    return record


def _cmd_check(args) -> int:
    rules = RULE_NAMES if args.rule == "all" else (_check_rule(args.rule),)
    criteria = CRITERION_NAMES if args.criterion == "all" else (_check_criterion(args.criterion),)
    cells = [(r, c) for r in rules for c in criteria]
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(cells) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_check_cell, r, c, args.max_m, args.max_n, args.budget)
                for r, c in cells
            ]
            results = [f.result() for f in futures]
    else:
        results = [
            _check_cell(r, c, args.max_m, args.max_n, args.budget) for r, c in cells
        ]
    for record in results:
        print(json.dumps(record, sort_keys=True))
    return 0


def _cmd_paradox(args) -> int:
    try:
        profile = paradox_profile(args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    names = {c: f"x{c + 1}" for c in profile.candidates}
    sys.stdout.write(format_profile(profile, names))
    return 0


def _split_config_by_cell(config: ExperimentConfig):
    from dataclasses import replace

    for m in config.candidate_counts:
        for n in config.voter_counts:
            yield replace(config, candidate_counts=(m,), voter_counts=(n,))


def _run_cell(config: ExperimentConfig):
    runner = run_sd_experiment if config.kind == "sd" else run_manipulation_experiment
    return runner(config)


def _run_sweep(config: ExperimentConfig, jobs: int):
    """Run a sweep, optionally cell-parallel; records and summary are merged
    and re-sorted, so the output does not depend on worker scheduling."""
    if jobs <= 1:
        return _run_cell(config)
    from concurrent.futures import ProcessPoolExecutor

    records = []
    summary: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for cell_records, cell_summary in pool.map(
            _run_cell, _split_config_by_cell(config)
        ):
            records.extend(cell_records)
            summary.update(cell_summary)
    records.sort(key=lambda r: r.sort_key)
    return records, dict(summary)


def _write_sweep(config: ExperimentConfig, out_dir: str, jobs: int) -> int:
    os.makedirs(out_dir, exist_ok=True)
    records, summary = _run_sweep(config, jobs)
    write_records_csv(records, os.path.join(out_dir, "records.csv"))
    write_summary_csv(summary, os.path.join(out_dir, "summary.csv"))
    write_metadata(config, os.path.join(out_dir, "metadata.json"))
    print(f"wrote {len(records)} records to {out_dir}")
    return 0


def _cmd_sim_sd(args) -> int:
    seed = _resolve_seed(args)
    config = sd_config(seed, profiles_per_cell=args.profiles)
    return _write_sweep(config, args.out, args.jobs or os.cpu_count() or 1)


def _cmd_sim_manip(args) -> int:
    seed = _resolve_seed(args)
    scenarios = SCENARIO_NAMES if args.scenario == "all" else (args.scenario,)
    for sc in scenarios:
        if sc not in SCENARIO_NAMES:
            raise CliError(
                f"unknown scenario {sc!r}; valid scenarios: {', '.join(SCENARIO_NAMES)}"
            )
    voter_counts = (10, 100, 1000) if args.full else (10, 100)
    if args.fraction is not None and not 0.0 < args.fraction < 1.0:
        raise CliError(f"--fraction must be in (0, 1), got {args.fraction}")
    config = manipulation_config(
        seed,
        voter_counts=voter_counts,
        profiles_per_cell=args.profiles,
        scenarios=scenarios,
        fraction=args.fraction,
    )
    return _write_sweep(config, args.out, args.jobs or os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_profile_args(sub) -> None:
    sub.add_argument("profile", help="profile file in the text format, or - for stdin")
    sub.add_argument("--rule", required=True, help=f"one of: {', '.join(RULE_NAMES)}")
    sub.add_argument("--agenda", help="comma-separated candidate ids (seqpairs)")
    sub.add_argument("--dictator", type=int, help="voter index (dictator)")
    sub.add_argument(
        "--format", choices=("human", "csv", "json"), default="human",
        help="output format (default human)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballotforge",
        description="Voting procedures, disappointment detection, and seeded sweeps.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    tally = subs.add_parser("tally", help="evaluate a rule on a profile file")
    _add_profile_args(tally)
    tally.set_defaults(func=_cmd_tally)

    detect = subs.add_parser("detect", help="disappointment/frustration flags for an election")
    _add_profile_args(detect)
    detect.set_defaults(func=_cmd_detect)

    check = subs.add_parser("check", help="bounded axiom counterexample search (JSON lines)")
    check.add_argument("--rule", default="all", help=f"one of: {', '.join(RULE_NAMES)}, or all")
    check.add_argument(
        "--criterion", default="all",
        help=f"one of: {', '.join(CRITERION_NAMES)}, or all",
    )
    check.add_argument("--max-m", type=int, default=4, help="max candidates (default 4)")
    check.add_argument("--max-n", type=int, default=5, help="max voters (default 5)")
    check.add_argument("--budget", type=int, default=2_000_000_000,
                       help="work-estimate cap before the search refuses")
    check.add_argument("--jobs", type=int, help="worker processes (default: cores)")
    check.set_defaults(func=_cmd_check)

    paradox = subs.add_parser("paradox", help="emit the cyclic boundary profile for n >= 3")
    paradox.add_argument("n", type=int, help="cycle size; yields n+1 candidates, 2n voters")
    paradox.set_defaults(func=_cmd_paradox)

    sim_sd = subs.add_parser("sim-sd", help="social disappointment sweep over random profiles")
    sim_sd.add_argument("--out", required=True, help="output directory for CSV + metadata")
    sim_sd.add_argument("--seed", type=int, help=f"master seed (or ${SEED_ENV_VAR})")
    sim_sd.add_argument("--profiles", type=int, default=1000, help="profiles per grid cell")
    sim_sd.add_argument("--jobs", type=int, help="worker processes (default: cores)")
    sim_sd.set_defaults(func=_cmd_sim_sd)

    sim_manip = subs.add_parser("sim-manip", help="manipulation robustness sweep")
    sim_manip.add_argument("--out", required=True, help="output directory for CSV + metadata")
    sim_manip.add_argument("--seed", type=int, help=f"master seed (or ${SEED_ENV_VAR})")
    sim_manip.add_argument("--profiles", type=int, default=30, help="profiles per grid cell")
    sim_manip.add_argument(
        "--scenario", default="all",
        help=f"one of: {', '.join(SCENARIO_NAMES)}, or all",
    )
    sim_manip.add_argument(
        "--fraction", type=float,
        help="override the voter fraction of the randomized scenarios",
    )
    sim_manip.add_argument(
        "--full", action="store_true",
        help="include the n=1000 column (slow); default grid is n in {10, 100}",
    )
    sim_manip.add_argument("--jobs", type=int, help="worker processes (default: cores)")
    sim_manip.set_defaults(func=_cmd_sim_manip)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ProfileError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
