"""Social disappointment / frustration detectors and bounded axiom search.

The detectors judge a single election (profile + winner set).  The search
side enumerates small profiles exhaustively, up to voter permutation, and
hunts for a concrete counterexample to an axiom for a given rule; it either
returns a replayable witness or reports that none exists within bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .core import Profile, bottom_counts, tally_pairwise
from .rules import RULE_NAMES, RuleConfig, condorcet, evaluate

__all__ = [
    "CRITERION_NAMES",
    "TABLE3",
    "BudgetExceededError",
    "Counterexample",
    "condorcet_loser",
    "sf_occurred",
    "sd_occurred",
    "strict_sd_occurred",
    "check_axiom",
    "replay",
    "verify_table3",
    "Table3Cell",
]

CRITERION_NAMES = (
    "aaw",
    "cwc",
    "pareto",
    "monotonicity",
    "iia",
    "sdc",
    "clc",
    "strict_sdc",
)

_TABLE3_COLUMNS = ("aaw", "cwc", "pareto", "monotonicity", "iia", "sdc", "clc")

# Published procedure-by-criterion verdicts (True = satisfies).
TABLE3: dict[tuple[str, str], bool] = {}
for _rule, _row in {
    "condorcet": (False, True, True, True, True, False, True),
    "plurality": (True, False, True, True, False, False, False),
    "borda": (True, False, True, True, False, False, True),
    "hare": (True, False, True, False, False, False, False),
    "seqpairs": (True, True, False, True, False, False, True),
    "copeland": (True, True, True, True, False, False, True),
    "coombs": (True, False, True, False, False, True, False),
    "lu": (True, False, False, True, False, True, False),
    "lur": (True, False, True, True, False, True, False),
}.items():
    for _crit, _sat in zip(_TABLE3_COLUMNS, _row):
        TABLE3[(_rule, _crit)] = _sat


# ---------------------------------------------------------------------------
# Single-election detectors
# ---------------------------------------------------------------------------

def condorcet_loser(profile: Profile) -> int | None:
    """The candidate strictly beaten by every rival, if one exists (it is unique)."""
    wins = tally_pairwise(profile)
    m = profile.num_candidates
    for x in range(m):
        if all(wins[x][y] < wins[y][x] for y in range(m) if y != x):
            return x
    return None


def sf_occurred(profile: Profile, winners) -> bool:
    """Social frustration: the winner set contains the Condorcet loser."""
    loser = condorcet_loser(profile)
    return loser is not None and loser in frozenset(winners)


def _check_sd_arity(profile: Profile) -> None:
    if profile.num_candidates < 3:
        raise ValueError(
            "social disappointment is defined only for 3 or more candidates"
        )


def sd_occurred(profile: Profile, winners) -> bool:
    """Social disappointment: some winner is ranked last by at least half the voters.

    The threshold is the exact integer comparison ``2*lp(x) >= n``.
    """
    _check_sd_arity(profile)
    lp = bottom_counts(profile)
    n = profile.num_voters
    return any(2 * lp[x] >= n for x in frozenset(winners))


def strict_sd_occurred(profile: Profile, winners) -> bool:
    """Strict variant: some winner is ranked last by strictly more than half."""
    _check_sd_arity(profile)
    lp = bottom_counts(profile)
    n = profile.num_voters
    return any(2 * lp[x] > n for x in frozenset(winners))


# ---------------------------------------------------------------------------
# Bounded counterexample search
# ---------------------------------------------------------------------------

class BudgetExceededError(RuntimeError):
    """Search refused: the enumeration estimate exceeds the configured budget."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(
            f"estimated search work {estimate} exceeds budget {budget}"
        )
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class Counterexample:
    """A replayable axiom violation for one rule.

    ``witness_profiles`` holds one profile (two for monotonicity and IIA),
    ``witness_candidates`` the candidates realizing the violation, and
    ``details`` a machine-readable record of the violating evaluation.
    """

    criterion: str
    rule: str
    witness_profiles: tuple[Profile, ...]
    witness_candidates: tuple[int, ...]
    details: dict = field(default_factory=dict)


def all_ballots(m: int) -> list[tuple[int, ...]]:
    """Every strict ballot over candidates 0..m-1, lexicographically ordered."""
    return sorted(itertools.permutations(range(m)))


def canonical_profiles(m: int, n: int):
    """All profiles of n voters over m candidates, up to voter permutation."""
    for ballots in itertools.combinations_with_replacement(all_ballots(m), n):
        yield Profile(num_candidates=m, ballots=ballots)


def ordered_profiles(m: int, n: int):
    """All profiles of n voters over m candidates, voter order significant."""
    for ballots in itertools.product(all_ballots(m), repeat=n):
        yield Profile(num_candidates=m, ballots=ballots)


def _estimate_work(criterion: str, max_m: int, max_n: int, canonical: bool) -> int:
    total = 0
    for m in range(3, max_m + 1):
        nballots = 1
        for k in range(2, m + 1):
            nballots *= k
        for n in range(1, max_n + 1):
            profiles = comb(nballots + n - 1, n) if canonical else nballots**n
            if criterion == "monotonicity":
                factor = n * (m - 1)
            elif criterion == "iia":
                # <=2 replaced ballots, each with about half the ballot space.
                single = n * nballots // 2
                double = comb(n, 2) * (nballots // 2) ** 2
                factor = m * (m - 1) * (single + double)
            else:
                factor = 1
            total += profiles * factor
    return total


def _unanimous_pairs(profile: Profile):
    wins = tally_pairwise(profile)
    n = profile.num_voters
    m = profile.num_candidates
    for x in range(m):
        for y in range(m):
            if x != y and wins[x][y] == n:
                yield x, y


def _check_single_profile(rule, criterion, profile, rule_fn):
    winners = rule_fn(profile)
    if criterion == "aaw":
        if not winners:
            return Counterexample(criterion, rule, (profile,), (), {"winners": []})
    elif criterion == "sdc":
        if sd_occurred(profile, winners):
            lp = bottom_counts(profile)
            n = profile.num_voters
            x = min(c for c in winners if 2 * lp[c] >= n)
            return Counterexample(
                criterion, rule, (profile,), (x,),
                {"winners": sorted(winners), "lp": lp},
            )
    elif criterion == "strict_sdc":
        if strict_sd_occurred(profile, winners):
            lp = bottom_counts(profile)
            n = profile.num_voters
            x = min(c for c in winners if 2 * lp[c] > n)
            return Counterexample(
                criterion, rule, (profile,), (x,),
                {"winners": sorted(winners), "lp": lp},
            )
    elif criterion == "clc":
        if sf_occurred(profile, winners):
            loser = condorcet_loser(profile)
            return Counterexample(
                criterion, rule, (profile,), (loser,),
                {"winners": sorted(winners)},
            )
    elif criterion == "cwc":
        cset = condorcet(profile)
        if len(cset) == 1:
            (x,) = cset
            if x not in winners:
                return Counterexample(
                    criterion, rule, (profile,), (x,),
                    {"winners": sorted(winners)},
                )
    elif criterion == "pareto":
        for x, y in _unanimous_pairs(profile):
            if y in winners:
                return Counterexample(
                    criterion, rule, (profile,), (x, y),
                    {"winners": sorted(winners)},
                )
    else:
        raise ValueError(f"not a single-profile criterion: {criterion}")
    return None


def _monotonicity_lifts(profile: Profile, x: int):
    """Profiles obtained by one voter swapping x up past the candidate above it."""
    for voter, ballot in enumerate(profile.ballots):
        pos = ballot.index(x)
        if pos == 0:
            continue
        lifted = list(ballot)
        lifted[pos - 1], lifted[pos] = lifted[pos], lifted[pos - 1]
        yield voter, ballot[pos - 1], Profile(
            num_candidates=profile.num_candidates,
            ballots=profile.ballots[:voter] + (tuple(lifted),) + profile.ballots[voter + 1:],
        )


def _check_monotonicity(rule, profile, rule_fn):
    winners = rule_fn(profile)
    for x in sorted(winners):
        for voter, passed, lifted in _monotonicity_lifts(profile, x):
            if x not in rule_fn(lifted):
                return Counterexample(
                    "monotonicity", rule, (profile, lifted), (x, passed),
                    {"voter": voter, "winners_before": sorted(winners),
                     "winners_after": sorted(rule_fn(lifted))},
                )
    return None


def _same_pair_order(ballot, x, y):
    return ballot.index(x) < ballot.index(y)


def _iia_variants(profile: Profile, x: int, y: int, ballots_by_order):
    """Profiles differing in at most two ballots, each keeping its x-y order.

    The two-ballot restriction keeps the search finite; the published IIA
    violations all have witnesses in this space.
    """
    n = profile.num_voters
    originals = profile.ballots
    replacement_sets = [
        ballots_by_order[_same_pair_order(originals[i], x, y)] for i in range(n)
    ]
    for i in range(n):
        for b in replacement_sets[i]:
            if b == originals[i]:
                continue
            yield Profile(
                num_candidates=profile.num_candidates,
                ballots=originals[:i] + (b,) + originals[i + 1:],
            )
    for i, j in itertools.combinations(range(n), 2):
        for bi in replacement_sets[i]:
            if bi == originals[i]:
                continue
            for bj in replacement_sets[j]:
                if bj == originals[j]:
                    continue
                yield Profile(
                    num_candidates=profile.num_candidates,
                    ballots=originals[:i] + (bi,) + originals[i + 1:j]
                    + (bj,) + originals[j + 1:],
                )


def _check_iia(rule, profile, rule_fn, pair_order_cache):
    winners = rule_fn(profile)
    m = profile.num_candidates
    nonwinners = [c for c in range(m) if c not in winners]
    if not winners or not nonwinners:
        return None
    for x in sorted(winners):
        for y in nonwinners:
            ballots_by_order = pair_order_cache[(x, y)]
            for variant in _iia_variants(profile, x, y, ballots_by_order):
                if y in rule_fn(variant):
                    return Counterexample(
                        "iia", rule, (profile, variant), (x, y),
                        {"winners_before": sorted(winners),
                         "winners_after": sorted(rule_fn(variant))},
                    )
    return None


def _pair_order_cache(m: int):
    """For each ordered pair (x, y): ballots split by whether x precedes y."""
    ballots = all_ballots(m)
    cache = {}
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            cache[(x, y)] = {
                True: [b for b in ballots if _same_pair_order(b, x, y)],
                False: [b for b in ballots if not _same_pair_order(b, x, y)],
            }
    return cache


def _search_block(rule, criterion, m, n, config):
    """Scan one (m, n) block in canonical order; return the first witness."""
    canonical = rule != "dictator"
    profiles = canonical_profiles(m, n) if canonical else ordered_profiles(m, n)

    def rule_fn(p):
        return evaluate(rule, p, config)

    if criterion == "monotonicity":
        for profile in profiles:
            found = _check_monotonicity(rule, profile, rule_fn)
            if found:
                return found
    elif criterion == "iia":
        cache = _pair_order_cache(m)
        for profile in profiles:
            found = _check_iia(rule, profile, rule_fn, cache)
            if found:
                return found
    else:
        for profile in profiles:
            found = _check_single_profile(rule, criterion, profile, rule_fn)
            if found:
                return found
    return None


def check_axiom(
    rule: str,
    criterion: str,
    max_m: int,
    max_n: int,
    *,
    config: RuleConfig | None = None,
    budget: int = 2_000_000_000,
) -> Counterexample | None:
    """Search all profiles with 3 <= m <= max_m, 1 <= n <= max_n for a violation.

    Profiles are enumerated up to voter permutation (every implemented rule
    except dictatorship is anonymous; dictatorship is searched over ordered
    profiles).  Returns the first counterexample in canonical order, or None
    if the criterion survives the bounded search.  Raises
    :class:`BudgetExceededError` when the work estimate exceeds ``budget``.
    """
    if rule not in RULE_NAMES:
        raise ValueError(f"unknown rule {rule!r}; valid rules: {', '.join(RULE_NAMES)}")
    if criterion not in CRITERION_NAMES:
        raise ValueError(
            f"unknown criterion {criterion!r}; valid criteria: {', '.join(CRITERION_NAMES)}"
        )
    if rule == "condorcet" and criterion == "cwc":
        # Tautological: Condorcet's method is the CWC membership test.
        return None
    canonical = rule != "dictator"
    estimate = _estimate_work(criterion, max_m, max_n, canonical)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    config = config or RuleConfig()
    for m in range(3, max_m + 1):
        for n in range(1, max_n + 1):
            found = _search_block(rule, criterion, m, n, config)
            if found:
                return found
    return None


def replay(cx: Counterexample, config: RuleConfig | None = None) -> bool:
    """Re-run the criterion checker on a stored witness; True iff it violates."""
    config = config or RuleConfig()

    def rule_fn(p):
        return evaluate(cx.rule, p, config)

    crit = cx.criterion
    if crit in ("aaw", "sdc", "strict_sdc", "clc", "cwc", "pareto"):
        found = _check_single_profile(cx.rule, crit, cx.witness_profiles[0], rule_fn)
        return found is not None
    if crit == "monotonicity":
        before, after = cx.witness_profiles
        x = cx.witness_candidates[0]
        return x in rule_fn(before) and x not in rule_fn(after)
    if crit == "iia":
        before, after = cx.witness_profiles
        x, y = cx.witness_candidates
        if any(
            _same_pair_order(a, x, y) != _same_pair_order(b, x, y)
            for a, b in zip(before.ballots, after.ballots)
        ):
            return False
        w = rule_fn(before)
        return x in w and y not in w and y in rule_fn(after)
    raise ValueError(f"unknown criterion {crit!r}")


@dataclass(frozen=True)
class Table3Cell:
    """Outcome of the bounded search for one (rule, criterion) cell."""

    rule: str
    criterion: str
    expected_satisfies: bool
    status: str  # "confirmed-no" | "no-violation-found" | "skipped"
    counterexample: Counterexample | None = None

    @property
    def matches_expected(self) -> bool:
        if self.status == "skipped":
            return False
        return (self.status == "no-violation-found") == self.expected_satisfies


def verify_table3(
    max_m: int = 4,
    max_n: int = 5,
    *,
    budget: int = 2_000_000_000,
    jobs: int = 1,
) -> dict[tuple[str, str], Table3Cell]:
    """Re-derive the procedure-by-criterion table by bounded search.

    Every cell expected to fail should yield a stored counterexample; every
    cell expected to hold should survive the scan (IIA scans only the
    two-ballot-difference space and is bounded evidence, not proof).
    """
    cells = sorted(TABLE3)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                (rule, crit): pool.submit(
                    _verify_cell, rule, crit, max_m, max_n, budget
                )
                for rule, crit in cells
            }
            return {key: fut.result() for key, fut in futures.items()}
    return {
        (rule, crit): _verify_cell(rule, crit, max_m, max_n, budget)
        for rule, crit in cells
    }


def _verify_cell(rule, criterion, max_m, max_n, budget) -> Table3Cell:
    expected = TABLE3[(rule, criterion)]
    try:
        cx = check_axiom(rule, criterion, max_m, max_n, budget=budget)
    except BudgetExceededError:
        return Table3Cell(rule, criterion, expected, "skipped")
    if cx is None:
        return Table3Cell(rule, criterion, expected, "no-violation-found")
    return Table3Cell(rule, criterion, expected, "confirmed-no", cx)
