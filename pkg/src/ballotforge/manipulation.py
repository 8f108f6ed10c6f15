"""The four election-manipulation scenarios as deterministic profile transformers.

Each scenario perturbs a base profile using the outcome of the unmanipulated
election (the "pre-election poll") for the rule under study.  Randomized
scenarios take an explicit numpy Generator, so the same seed always yields
the same manipulated profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Profile, bottom_counts, first_place_counts, restrict
from .rules import (
    RuleConfig,
    borda_scores,
    condorcet,
    copeland_defeats,
    elimination_rounds,
    evaluate,
    seq_pairs_rounds,
    _coombs_retain,
    _hare_retain,
    _lur_retain,
)

__all__ = [
    "SCENARIO_NAMES",
    "Scenario",
    "SCENARIOS",
    "poll_ranking",
    "scenario_ballot_replace",
    "scenario_candidate_delete",
    "scenario_bribery",
    "scenario_social_influence",
    "apply_scenario",
    "affected",
]

# Stable scenario names for CLI/CSV use.
SCENARIO_NAMES = ("replace10", "replace20", "delete3rd", "bribery", "influence10")


@dataclass(frozen=True)
class Scenario:
    """One manipulation scenario variant.

    ``kind`` is one of ``ballot_replace``, ``candidate_delete``, ``bribery``,
    ``social_influence``; ``fraction`` applies to the randomized kinds.
    """

    name: str
    kind: str
    fraction: float | None = None

    def __post_init__(self) -> None:
        if self.fraction is not None and not 0.0 < self.fraction < 1.0:
            raise ValueError(f"fraction must be in (0, 1), got {self.fraction}")


SCENARIOS: dict[str, Scenario] = {
    "replace10": Scenario("replace10", "ballot_replace", 0.10),
    "replace20": Scenario("replace20", "ballot_replace", 0.20),
    "delete3rd": Scenario("delete3rd", "candidate_delete"),
    "bribery": Scenario("bribery", "bribery"),
    "influence10": Scenario("influence10", "social_influence", 0.10),
}


def poll_ranking(
    profile: Profile, rule: str, config: RuleConfig | None = None
) -> tuple[int, ...]:
    """Full candidate ordering induced by the rule on the unmanipulated profile.

    Scored rules order by their natural score, elimination rules by reverse
    elimination round (survivors first), Condorcet and UCC fall back to
    Copeland defeat counts.  All ties break by ascending candidate id, so the
    ranking is deterministic.
    """
    config = config or RuleConfig()
    m = profile.num_candidates
    if rule == "plurality":
        score = first_place_counts(profile)
        key = lambda c: (-score[c], c)
    elif rule == "borda":
        score = borda_scores(profile)
        key = lambda c: (-score[c], c)
    elif rule == "lu":
        lp = bottom_counts(profile)
        key = lambda c: (lp[c], c)
    elif rule in ("condorcet", "copeland", "ucc"):
        defeats = copeland_defeats(profile)
        key = lambda c: (defeats[c], c)
    elif rule in ("hare", "coombs", "lur"):
        selector = {"hare": _hare_retain, "coombs": _coombs_retain, "lur": _lur_retain}[rule]
        _, drop_round = elimination_rounds(profile, selector)
        key = lambda c: (-drop_round.get(c, math.inf), c)
    elif rule == "seqpairs":
        _, drop_round = seq_pairs_rounds(profile, config.agenda)
        key = lambda c: (-drop_round.get(c, math.inf), c)
    elif rule == "dictator":
        ballot = profile.ballots[0 if config.dictator is None else config.dictator]
        key = lambda c: (ballot.index(c), c)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    if rule == "ucc":
        cset = condorcet(profile)
        if len(cset) == 1:
            (winner,) = cset
            base = sorted(profile.candidates, key=key)
            base.remove(winner)
            return (winner, *base)
    return tuple(sorted(range(m), key=key))


def _replaced_count(fraction: float, n: int) -> int:
    # Ceiling so that 10% of 10 voters replaces exactly one ballot.
    return math.ceil(fraction * n)


def _chosen_voters(rng, n: int, k: int) -> list[int]:
    return sorted(int(i) for i in rng.choice(n, size=k, replace=False))


def scenario_ballot_replace(
    profile: Profile, fraction: float, injected, rng
) -> Profile:
    """Replace ceil(fraction * n) uniformly chosen ballots with one fixed ballot."""
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    injected = tuple(injected)
    chosen = _chosen_voters(rng, profile.num_voters, _replaced_count(fraction, profile.num_voters))
    ballots = list(profile.ballots)
    for i in chosen:
        ballots[i] = injected
    return Profile(num_candidates=profile.num_candidates, ballots=tuple(ballots))


def scenario_candidate_delete(
    profile: Profile, rule: str, config: RuleConfig | None = None
) -> tuple[Profile, dict[int, int]]:
    """Delete the poll's third-ranked candidate; returns the old->new id map."""
    if profile.num_candidates < 3:
        raise ValueError("candidate deletion needs at least 3 candidates")
    third = poll_ranking(profile, rule, config)[2]
    keep = frozenset(profile.candidates) - {third}
    return restrict(profile, keep)


def scenario_bribery(
    profile: Profile, rule: str, config: RuleConfig | None = None
) -> Profile:
    """Fans of hopeless candidates promote the poll runner-up they rank second.

    A voter joins the coalition when their top choice is neither the poll
    winner nor the runner-up, and their second choice is the runner-up; each
    coalition ballot swaps positions 0 and 1.
    """
    if profile.num_candidates < 3:
        raise ValueError("bribery needs at least 3 candidates")
    poll = poll_ranking(profile, rule, config)
    winner, runner_up = poll[0], poll[1]
    ballots = []
    for ballot in profile.ballots:
        if ballot[0] not in (winner, runner_up) and ballot[1] == runner_up:
            ballots.append((ballot[1], ballot[0]) + ballot[2:])
        else:
            ballots.append(ballot)
    return Profile(num_candidates=profile.num_candidates, ballots=tuple(ballots))


def _promote(ballot: tuple[int, ...], candidate: int) -> tuple[int, ...]:
    if ballot[0] == candidate:
        return ballot
    return (candidate,) + tuple(c for c in ballot if c != candidate)


def scenario_social_influence(
    profile: Profile,
    fraction: float,
    rule: str,
    rng,
    config: RuleConfig | None = None,
) -> Profile:
    """A random voter fraction moves the poll runner-up to the top of their ballot.

    The relative order of all other candidates is preserved.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    if profile.num_candidates < 2:
        raise ValueError("social influence needs at least 2 candidates")
    runner_up = poll_ranking(profile, rule, config)[1]
    chosen = _chosen_voters(rng, profile.num_voters, _replaced_count(fraction, profile.num_voters))
    ballots = list(profile.ballots)
    for i in chosen:
        ballots[i] = _promote(ballots[i], runner_up)
    return Profile(num_candidates=profile.num_candidates, ballots=tuple(ballots))


def apply_scenario(
    scenario: Scenario,
    profile: Profile,
    rule: str,
    *,
    rng=None,
    injected=None,
    config: RuleConfig | None = None,
) -> tuple[Profile, dict[int, int] | None]:
    """Run one scenario; returns (manipulated profile, old->new map or None)."""
    if scenario.kind == "ballot_replace":
        return scenario_ballot_replace(profile, scenario.fraction, injected, rng), None
    if scenario.kind == "candidate_delete":
        return scenario_candidate_delete(profile, rule, config)
    if scenario.kind == "bribery":
        return scenario_bribery(profile, rule, config), None
    if scenario.kind == "social_influence":
        return scenario_social_influence(profile, scenario.fraction, rule, rng, config), None
    raise ValueError(f"unknown scenario kind {scenario.kind!r}")


def affected(
    rule: str,
    base: Profile,
    manipulated: Profile,
    *,
    old_to_new: dict[int, int] | None = None,
    config: RuleConfig | None = None,
) -> bool:
    """True iff the manipulation changed the rule's winner set.

    When a candidate was deleted, base winners are mapped through the
    re-index map first; a deleted base winner counts as affected outright.
    """
    base_winners = evaluate(rule, base, config)
    if old_to_new is None:
        return evaluate(rule, manipulated, config) != base_winners
    if any(w not in old_to_new for w in base_winners):
        return True
    mapped = frozenset(old_to_new[w] for w in base_winners)
    manip_config = _restrict_config(rule, config, old_to_new)
    return evaluate(rule, manipulated, manip_config) != mapped


def _restrict_config(rule, config, old_to_new):
    # An explicit agenda must be re-indexed alongside the candidates.
    if rule == "seqpairs" and config is not None and config.agenda is not None:
        agenda = tuple(old_to_new[c] for c in config.agenda if c in old_to_new)
        return RuleConfig(agenda=agenda, dictator=config.dictator)
    return config
