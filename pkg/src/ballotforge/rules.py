"""The eleven voting procedures behind one uniform Profile -> winner-set interface.

Every rule takes a :class:`~ballotforge.core.Profile` and returns a frozenset
of candidate ids.  Only Condorcet's method may return an empty set; every
other rule elects at least one candidate on every linear profile.  No rule
applies internal tie-breaking: tied candidates are all reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Profile, bottom_counts, first_place_counts, restrict, tally_pairwise

__all__ = [
    "ConfigError",
    "RuleConfig",
    "RULE_NAMES",
    "evaluate",
    "plurality",
    "borda",
    "borda_scores",
    "condorcet",
    "copeland",
    "copeland_defeats",
    "eliminate",
    "elimination_rounds",
    "hare",
    "coombs",
    "seq_pairs",
    "seq_pairs_rounds",
    "dictatorship",
    "lu",
    "lur",
    "ucc",
]

# Stable lowercase names for CLI/CSV use.
RULE_NAMES = (
    "plurality",
    "borda",
    "condorcet",
    "copeland",
    "hare",
    "coombs",
    "seqpairs",
    "dictator",
    "lu",
    "lur",
    "ucc",
)


class ConfigError(ValueError):
    """Raised for a missing or invalid agenda/dictator configuration."""


@dataclass(frozen=True)
class RuleConfig:
    """Per-rule parameters: an agenda for seqpairs, a dictator for dictator.

    ``agenda=None`` means ascending candidate id; ``dictator=None`` means
    voter 0.
    """

    agenda: tuple[int, ...] | None = None
    dictator: int | None = None


def _argmin_set(scores) -> frozenset[int]:
    best = min(scores)
    return frozenset(c for c, s in enumerate(scores) if s == best)


def _argmax_set(scores) -> frozenset[int]:
    best = max(scores)
    return frozenset(c for c, s in enumerate(scores) if s == best)


def plurality(profile: Profile) -> frozenset[int]:
    """Candidates with the most first-place votes."""
    return _argmax_set(first_place_counts(profile))


def borda_scores(profile: Profile) -> list[int]:
    """Classic Borda totals: rank r on a ballot is worth ``m - 1 - r`` points."""
    m = profile.num_candidates
    scores = [0] * m
    for ballot in profile.ballots:
        for rank, c in enumerate(ballot):
            scores[c] += m - 1 - rank
    return scores


def borda(profile: Profile) -> frozenset[int]:
    """Candidates with the highest Borda total."""
    return _argmax_set(borda_scores(profile))


def condorcet(profile: Profile) -> frozenset[int]:
    """All candidates never strictly beaten head-to-head.  May be empty."""
    wins = tally_pairwise(profile)
    m = profile.num_candidates
    return frozenset(
        x for x in range(m) if all(wins[x][y] >= wins[y][x] for y in range(m))
    )


def copeland_defeats(profile: Profile) -> list[int]:
    """Number of strict head-to-head defeats per candidate."""
    wins = tally_pairwise(profile)
    m = profile.num_candidates
    return [sum(wins[y][x] > wins[x][y] for y in range(m)) for x in range(m)]


def copeland(profile: Profile) -> frozenset[int]:
    """Candidates with the fewest strict head-to-head defeats.

    Defeat counting (rather than the symmetric win-minus-loss score) is the
    Copeland reading under which the published four-candidate witness, whose
    top candidate ties every rival while the rest form a cycle, has a unique
    winner.
    """
    return _argmin_set(copeland_defeats(profile))


def elimination_rounds(profile: Profile, retain_selector):
    """Run the shared fixed-point elimination engine, tracing drops.

    ``retain_selector`` maps a (restricted) profile to the candidate ids to
    keep for the next round.  A round that would retain nobody counts as an
    all-tie: the full current set wins.  Stops at a fixed point or a single
    survivor.

    Returns ``(winners, drop_round)`` in original candidate ids, where
    ``drop_round[c]`` is the 1-based round in which ``c`` was eliminated
    (winners never appear in it).
    """
    current = profile
    to_orig = list(profile.candidates)
    drop_round: dict[int, int] = {}
    round_no = 0
    while True:
        round_no += 1
        everyone = frozenset(current.candidates)
        retain = frozenset(retain_selector(current))
        if not retain or retain == everyone:
            # All-tie (nobody retained) or fixed point: current set wins.
            return frozenset(to_orig[c] for c in everyone), drop_round
        for c in everyone - retain:
            drop_round[to_orig[c]] = round_no
        if len(retain) == 1:
            (survivor,) = retain
            return frozenset({to_orig[survivor]}), drop_round
        current, _ = restrict(current, retain)
        to_orig = [to_orig[old] for old in sorted(retain)]


def eliminate(profile: Profile, retain_selector) -> frozenset[int]:
    """Winners of the fixed-point elimination engine (see :func:`elimination_rounds`)."""
    winners, _ = elimination_rounds(profile, retain_selector)
    return winners


def _hare_retain(profile: Profile) -> frozenset[int]:
    return frozenset(profile.candidates) - _argmin_set(first_place_counts(profile))


def _coombs_retain(profile: Profile) -> frozenset[int]:
    return frozenset(profile.candidates) - _argmax_set(bottom_counts(profile))


def _lur_retain(profile: Profile) -> frozenset[int]:
    return _argmin_set(bottom_counts(profile))


def hare(profile: Profile) -> frozenset[int]:
    """Instant runoff: repeatedly delete the candidates with fewest first-place votes."""
    return eliminate(profile, _hare_retain)


def coombs(profile: Profile) -> frozenset[int]:
    """Repeatedly delete the candidates with the most last-place votes."""
    return eliminate(profile, _coombs_retain)


def lu(profile: Profile) -> frozenset[int]:
    """Least Unpopular: candidates with the fewest last-place votes."""
    return _argmin_set(bottom_counts(profile))


def lur(profile: Profile) -> frozenset[int]:
    """Least Unpopular Reselection: repeatedly restrict to the LU set."""
    return eliminate(profile, _lur_retain)


def _default_agenda(profile: Profile) -> tuple[int, ...]:
    return tuple(profile.candidates)


def seq_pairs_rounds(profile: Profile, agenda=None):
    """Sequential pairwise voting along an agenda, tracing eliminations.

    The strict winner of each one-on-one contest advances; on a tie both
    advance jointly, and a jointly advancing candidate survives a later
    round only while strictly unbeaten within the current contenders.

    Returns ``(survivors, drop_round)`` where ``drop_round[c]`` is the
    agenda step (1-based) at which ``c`` was defeated.
    """
    m = profile.num_candidates
    if agenda is None:
        agenda = _default_agenda(profile)
    agenda = tuple(agenda)
    if sorted(agenda) != list(range(m)):
        raise ConfigError(f"agenda must be a permutation of 0..{m - 1}, got {agenda!r}")
    wins = tally_pairwise(profile)
    survivors = frozenset({agenda[0]})
    drop_round: dict[int, int] = {}
    for step, challenger in enumerate(agenda[1:], start=1):
        contenders = survivors | {challenger}
        unbeaten = frozenset(
            x
            for x in contenders
            if all(wins[y][x] <= wins[x][y] for y in contenders)
        )
        for c in contenders - unbeaten:
            drop_round[c] = step
        survivors = unbeaten
    return survivors, drop_round


def seq_pairs(profile: Profile, agenda=None) -> frozenset[int]:
    """Winners of sequential pairwise voting with a fixed agenda."""
    survivors, _ = seq_pairs_rounds(profile, agenda)
    return survivors


def dictatorship(profile: Profile, dictator: int = 0) -> frozenset[int]:
    """The top choice of one designated voter."""
    if not 0 <= dictator < profile.num_voters:
        raise ConfigError(
            f"dictator index {dictator} out of range for {profile.num_voters} voters"
        )
    return frozenset({profile.ballots[dictator][0]})


def ucc(profile: Profile) -> frozenset[int]:
    """Unique-Condorcet Coombs: the unique Condorcet winner if any, else Coombs."""
    winners = condorcet(profile)
    if len(winners) == 1:
        return winners
    return coombs(profile)


def evaluate(rule: str, profile: Profile, config: RuleConfig | None = None) -> frozenset[int]:
    """Evaluate a rule by its stable name (see :data:`RULE_NAMES`)."""
    config = config or RuleConfig()
    if rule == "plurality":
        return plurality(profile)
    if rule == "borda":
        return borda(profile)
    if rule == "condorcet":
        return condorcet(profile)
    if rule == "copeland":
        return copeland(profile)
    if rule == "hare":
        return hare(profile)
    if rule == "coombs":
        return coombs(profile)
    if rule == "seqpairs":
        return seq_pairs(profile, config.agenda)
    if rule == "dictator":
        return dictatorship(profile, 0 if config.dictator is None else config.dictator)
    if rule == "lu":
        return lu(profile)
    if rule == "lur":
        return lur(profile)
    if rule == "ucc":
        return ucc(profile)
    raise ConfigError(f"unknown rule {rule!r}; valid rules: {', '.join(RULE_NAMES)}")
