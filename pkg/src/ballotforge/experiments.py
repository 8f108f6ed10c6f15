"""Seeded profile generation and the two Monte-Carlo sweeps.

Profiles are drawn from the impartial culture (independent uniform random
ballots).  Every record's seed is a pure function of the master seed and the
cell coordinates, so any single record can be regenerated in isolation and
re-running a sweep with the same master seed is byte-identical.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np

from .core import Profile
from .criteria import sd_occurred, sf_occurred
from .manipulation import SCENARIO_NAMES, SCENARIOS, affected, apply_scenario
from .rules import evaluate

__all__ = [
    "GENERATOR_NAME",
    "DEFAULT_MASTER_SEED",
    "EXPERIMENT_RULES",
    "ExperimentConfig",
    "ExperimentRecord",
    "sd_config",
    "manipulation_config",
    "random_profile",
    "random_ballot",
    "paradox_profile",
    "record_seed",
    "run_sd_experiment",
    "run_manipulation_experiment",
    "write_records_csv",
    "write_summary_csv",
    "write_metadata",
    "RECORD_FIELDS",
]

GENERATOR_NAME = "pcg64"
DEFAULT_MASTER_SEED = 20190513

# The nine procedures compared in the sweeps.
EXPERIMENT_RULES = (
    "plurality",
    "condorcet",
    "borda",
    "hare",
    "coombs",
    "copeland",
    "seqpairs",
    "lu",
    "lur",
)

RECORD_FIELDS = ("rule", "scenario", "m", "n", "profile_index", "seed", "sd", "sf", "affected")

# Stream-splitting tags, so profile seeds, per-scenario streams, and
# per-cell injected ballots never share a PCG64 stream.
_TAG_PROFILE = 0
_TAG_CELL_BALLOT = 1
_TAG_SCENARIO = 2


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: the grid, the rules, and the master seed."""

    kind: str  # "sd" or "manipulation"
    candidate_counts: tuple[int, ...]
    voter_counts: tuple[int, ...]
    profiles_per_cell: int
    rules: tuple[str, ...] = EXPERIMENT_RULES
    scenarios: tuple[str, ...] = ()
    master_seed: int = DEFAULT_MASTER_SEED
    # Overrides the voter fraction of randomized scenarios when set.
    fraction_override: float | None = None


def sd_config(
    master_seed: int = DEFAULT_MASTER_SEED,
    *,
    candidate_counts=tuple(range(3, 7)),
    voter_counts=tuple(range(6, 11)),
    profiles_per_cell: int = 1000,
    rules=EXPERIMENT_RULES,
) -> ExperimentConfig:
    """The social-disappointment sweep grid (3-6 candidates, 6-10 voters)."""
    return ExperimentConfig(
        "sd", tuple(candidate_counts), tuple(voter_counts), profiles_per_cell,
        tuple(rules), (), master_seed,
    )


def manipulation_config(
    master_seed: int = DEFAULT_MASTER_SEED,
    *,
    candidate_counts=tuple(range(3, 11)),
    voter_counts=(10, 100, 1000),
    profiles_per_cell: int = 30,
    rules=EXPERIMENT_RULES,
    scenarios=SCENARIO_NAMES,
    fraction: float | None = None,
) -> ExperimentConfig:
    """The manipulation sweep grid (3-10 candidates, {10,100,1000} voters)."""
    return ExperimentConfig(
        "manipulation", tuple(candidate_counts), tuple(voter_counts),
        profiles_per_cell, tuple(rules), tuple(scenarios), master_seed, fraction,
    )


@dataclass(frozen=True)
class ExperimentRecord:
    """One (rule, scenario, cell, profile) outcome."""

    rule: str
    scenario: str  # "" for SD runs
    m: int
    n: int
    profile_index: int
    seed: int
    sd: bool
    sf: bool
    affected: bool | None = None

    @property
    def sort_key(self):
        return (self.rule, self.scenario, self.m, self.n, self.profile_index)


def _seed_from(master_seed: int, *path: int) -> int:
    ss = np.random.SeedSequence([int(master_seed)] + [int(p) for p in path])
    return int(ss.generate_state(1, np.uint64)[0])


def record_seed(master_seed: int, m: int, n: int, profile_index: int) -> int:
    """The 64-bit seed of one record, derived purely from its coordinates."""
    return _seed_from(master_seed, _TAG_PROFILE, m, n, profile_index)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_ballot(m: int, rng: np.random.Generator) -> tuple[int, ...]:
    """One uniform random strict ballot over m candidates."""
    return tuple(int(c) for c in rng.permutation(m))


def random_profile(m: int, n: int, rng: np.random.Generator) -> Profile:
    """n independent uniform random ballots (impartial culture)."""
    return Profile(num_candidates=m, ballots=tuple(random_ballot(m, rng) for _ in range(n)))


def paradox_profile(n: int) -> Profile:
    """The cyclic profile over n+1 candidates and 2n voters (n >= 3).

    Candidate ``n`` tops the first n ballots and sits at the bottom of the
    last n; the other candidates rotate cyclically.  Candidate ``n`` is the
    unique Condorcet winner yet is ranked last by exactly half the voters,
    so every rule electing it incurs social disappointment.
    """
    if n < 3:
        raise ValueError(f"paradox profile needs n >= 3, got {n}")
    cycles = [tuple((j + k) % n for k in range(n)) for j in range(n)]
    ballots = tuple((n,) + cyc for cyc in cycles) + tuple(cyc + (n,) for cyc in cycles)
    return Profile(num_candidates=n + 1, ballots=ballots)


def run_sd_experiment(config: ExperimentConfig):
    """Evaluate every rule on every random profile of the SD grid.

    Returns ``(records, summary)`` where summary maps ``(rule, "", m)`` to
    the SD count aggregated over voter counts and profiles.
    """
    records: list[ExperimentRecord] = []
    summary: Counter = Counter()
    for m in config.candidate_counts:
        for n in config.voter_counts:
            for index in range(config.profiles_per_cell):
                seed = record_seed(config.master_seed, m, n, index)
                profile = random_profile(m, n, _rng(seed))
                for rule in config.rules:
                    winners = evaluate(rule, profile)
                    sd = sd_occurred(profile, winners)
                    sf = sf_occurred(profile, winners)
                    records.append(
                        ExperimentRecord(rule, "", m, n, index, seed, sd, sf)
                    )
                    summary[(rule, "", m)] += sd
    for rule in config.rules:
        for m in config.candidate_counts:
            summary.setdefault((rule, "", m), 0)
    records.sort(key=lambda r: r.sort_key)
    return records, summary


def run_manipulation_experiment(config: ExperimentConfig):
    """Apply every scenario to every (rule, profile) of the manipulation grid.

    Returns ``(records, summary)`` where summary maps ``(rule, scenario, m)``
    to the affected-election count aggregated over voter counts and profiles.
    The random voter selections of a scenario are shared across rules, and
    the injected ballot of the replacement scenarios is drawn once per cell.
    """
    records: list[ExperimentRecord] = []
    summary: Counter = Counter()
    scenarios = [
        replace(SCENARIOS[name], fraction=config.fraction_override)
        if config.fraction_override is not None and SCENARIOS[name].fraction is not None
        else SCENARIOS[name]
        for name in config.scenarios
    ]
    for m in config.candidate_counts:
        for n in config.voter_counts:
            cell_ballots = {
                sc.name: random_ballot(
                    m, _rng(_seed_from(config.master_seed, _TAG_CELL_BALLOT, m, n, si))
                )
                for si, sc in enumerate(scenarios)
                if sc.kind == "ballot_replace"
            }
            for index in range(config.profiles_per_cell):
                seed = record_seed(config.master_seed, m, n, index)
                profile = random_profile(m, n, _rng(seed))
                base = {rule: evaluate(rule, profile) for rule in config.rules}
                for si, sc in enumerate(scenarios):
                    scenario_seed = _seed_from(seed, _TAG_SCENARIO, si)
                    for rule in config.rules:
                        manipulated, old_to_new = apply_scenario(
                            sc,
                            profile,
                            rule,
                            rng=_rng(scenario_seed),
                            injected=cell_ballots.get(sc.name),
                        )
                        flag = affected(rule, profile, manipulated, old_to_new=old_to_new)
                        records.append(
                            ExperimentRecord(
                                rule, sc.name, m, n, index, seed,
                                sd_occurred(profile, base[rule]),
                                sf_occurred(profile, base[rule]),
                                flag,
                            )
                        )
                        summary[(rule, sc.name, m)] += flag
    for rule in config.rules:
        for sc in config.scenarios:
            for m in config.candidate_counts:
                summary.setdefault((rule, sc, m), 0)
    records.sort(key=lambda r: r.sort_key)
    return records, summary


def write_records_csv(records, path) -> None:
    """Record CSV with the fixed header; booleans as 0/1, blanks for N/A."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RECORD_FIELDS)
        for r in sorted(records, key=lambda r: r.sort_key):
            writer.writerow(
                [
                    r.rule, r.scenario, r.m, r.n, r.profile_index, r.seed,
                    int(r.sd), int(r.sf),
                    "" if r.affected is None else int(r.affected),
                ]
            )


def write_summary_csv(summary, path) -> None:
    """Summary CSV: one (rule, scenario, m) count per row."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["rule", "scenario", "m", "count"])
        for (rule, scenario, m), count in sorted(summary.items()):
            writer.writerow([rule, scenario, m, count])


def write_metadata(config: ExperimentConfig, path) -> None:
    """JSON sidecar: master seed, generator identity, and the config echo."""
    payload = {
        "master_seed": config.master_seed,
        "generator": GENERATOR_NAME,
        "config": {
            "kind": config.kind,
            "candidate_counts": list(config.candidate_counts),
            "voter_counts": list(config.voter_counts),
            "profiles_per_cell": config.profiles_per_cell,
            "rules": list(config.rules),
            "scenarios": list(config.scenarios),
            "fraction_override": config.fraction_override,
        },
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
