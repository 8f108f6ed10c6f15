"""Release gate: one test per numbered acceptance criterion.

Criteria 6 and 7 are split into a part this implementation reproduces and a
part asserting the full published claim verbatim.  The latter tests fail and
are kept failing on purpose: the remaining cells/orderings are not attainable
within the stated bounds under the definitions implemented here (see
tests below for the specific analysis), and masking that with xfail would
hide a real discrepancy.
"""

import hashlib
import os

import pytest

from ballotforge import (
    Counterexample,
    bottom_counts,
    condorcet,
    manipulation_config,
    paradox_profile,
    replay,
    run_manipulation_experiment,
    run_sd_experiment,
    sd_config,
    sd_occurred,
    ucc,
    verify_table3,
    write_records_csv,
    write_summary_csv,
    DEFAULT_MASTER_SEED,
    EXPERIMENT_RULES,
    SCENARIO_NAMES,
    TABLE3,
)
from ballotforge.criteria import canonical_profiles
from ballotforge.rules import (
    borda,
    copeland,
    hare,
    lu,
    lur,
    plurality,
    seq_pairs,
)
from conftest import (
    BEVERAGES,
    BORDA_ALL_TIE,
    DISAPPOINT_NO_LOSER,
    FRUSTRATION_NO_SD,
    HARE_DISAPPOINTS,
    LU_IIA_AFTER,
    LU_IIA_BEFORE,
    LU_PARETO,
    RESELECTION,
    TIED_TOP_CYCLE,
)
from ballotforge import condorcet_loser, sf_occurred

JOBS = os.cpu_count() or 1

# The two table cells whose published verdict has no witness (or a refuting
# witness) within the bounds; asserted verbatim in the red test below.
UNATTAINED_CELLS = {("condorcet", "iia"), ("hare", "monotonicity")}


def rule_totals(summary):
    """Aggregate a (rule, scenario, m) -> count summary over m."""
    totals = {}
    for (rule, scenario, _m), count in summary.items():
        totals[(rule, scenario)] = totals.get((rule, scenario), 0) + count
    return totals


@pytest.fixture(scope="module")
def sd_summary_shipped():
    _, summary = run_sd_experiment(sd_config(DEFAULT_MASTER_SEED))
    return summary


@pytest.fixture(scope="module")
def table3_cells():
    return verify_table3(4, 5, jobs=JOBS)


@pytest.fixture(scope="module")
def manipulation_totals():
    config = manipulation_config(DEFAULT_MASTER_SEED, voter_counts=(10, 100))
    _, summary = run_manipulation_experiment(config)
    return rule_totals(summary)


def test_criterion_1_golden_profiles():
    # Beverage election: plurality elects Milk, with both pathologies.
    assert plurality(BEVERAGES) == {0}
    assert sd_occurred(BEVERAGES, {0}) and sf_occurred(BEVERAGES, {0})
    assert condorcet_loser(BEVERAGES) == 0
    # Least-unpopular pair and its reselection refinement.
    assert lu(RESELECTION) == {1, 2}
    assert lur(RESELECTION) == {1}
    # Disappointment without a Condorcet loser, and the converse.
    assert plurality(DISAPPOINT_NO_LOSER) == {0}
    assert sd_occurred(DISAPPOINT_NO_LOSER, {0})
    assert condorcet_loser(DISAPPOINT_NO_LOSER) is None
    assert lu(FRUSTRATION_NO_SD) == {0}
    assert sf_occurred(FRUSTRATION_NO_SD, {0})
    assert not sd_occurred(FRUSTRATION_NO_SD, {0})
    # Four rules disappoint on their respective witnesses.
    assert borda(BORDA_ALL_TIE) == {0, 1, 2}
    assert sd_occurred(BORDA_ALL_TIE, borda(BORDA_ALL_TIE))
    assert condorcet(TIED_TOP_CYCLE) == {3}
    assert copeland(TIED_TOP_CYCLE) == {3}
    assert sd_occurred(TIED_TOP_CYCLE, {3})
    assert seq_pairs(TIED_TOP_CYCLE) == {2, 3}
    assert sd_occurred(TIED_TOP_CYCLE, seq_pairs(TIED_TOP_CYCLE))
    assert hare(HARE_DISAPPOINTS) == {0}
    assert sd_occurred(HARE_DISAPPOINTS, {0})


def test_criterion_2_paradox_profile_boundary():
    for n in range(3, 13):
        p = paradox_profile(n)
        assert condorcet(p) == {n}
        assert 2 * bottom_counts(p)[n] == 2 * n
        assert sd_occurred(p, {n})


def test_criterion_3_no_disappointment_for_coombs_lu_lur(sd_summary_shipped):
    totals = rule_totals(sd_summary_shipped)
    for rule in ("coombs", "lu", "lur"):
        assert totals[(rule, "")] == 0, f"{rule} disappointed"


def test_criterion_4_disappointment_ordering_across_seeds(sd_summary_shipped):
    summaries = [sd_summary_shipped]
    for seed in (1, 2, 3):
        _, summary = run_sd_experiment(sd_config(seed))
        summaries.append(summary)
    for summary in summaries:
        totals = rule_totals(summary)
        p = totals[("plurality", "")]
        others = [totals[(r, "")] for r in EXPERIMENT_RULES if r != "plurality"]
        assert all(p > o for o in others), "plurality not strictly worst"
        assert totals[("borda", "")] < 0.25 * p
        assert totals[("copeland", "")] < 0.25 * p


def test_criterion_5_ucc_exhaustive_small_case():
    for n in range(2, 7):
        for profile in canonical_profiles(3, n):
            winners = ucc(profile)
            lp = bottom_counts(profile)
            assert not any(2 * lp[w] >= n for w in winners)
            cset = condorcet(profile)
            if len(cset) == 1:
                assert winners == cset


def test_criterion_6_table_reproduced_outside_known_gaps(table3_cells):
    for key, cell in table3_cells.items():
        if key in UNATTAINED_CELLS:
            continue
        assert cell.matches_expected, (
            f"{key}: expected satisfies={cell.expected_satisfies}, got {cell.status}"
        )
        if cell.status == "confirmed-no":
            assert replay(cell.counterexample), f"{key}: witness does not replay"
    # The published least-unpopular witnesses replay as stored violations.
    assert replay(Counterexample("pareto", "lu", (LU_PARETO,), (0, 1)))
    assert replay(Counterexample("iia", "lu", (LU_IIA_BEFORE, LU_IIA_AFTER), (1, 0)))
    assert replay(Counterexample("clc", "lu", (FRUSTRATION_NO_SD,), (0,)))


def test_criterion_6_full_table_verbatim(table3_cells):
    """Asserts the table claim for the two remaining cells, verbatim.

    Known to fail: with the weak (tie-tolerant) Condorcet winner set, IIA has
    a genuine two-voter counterexample, so the search refutes the YES verdict;
    and instant runoff's smallest monotonicity violation needs nine voters,
    outside the (max_m=4, max_n=5) bound, so no witness exists for the NO
    verdict.  Both checks are implemented faithfully; the discrepancy is in
    the claim's bounds/definitions, not the search.
    """
    for key in sorted(UNATTAINED_CELLS):
        cell = table3_cells[key]
        assert cell.matches_expected, (
            f"{key}: expected satisfies={cell.expected_satisfies}, got {cell.status}"
        )


OTHER_RULES = tuple(r for r in EXPERIMENT_RULES if r not in ("lu", "lur"))


def test_criterion_7_robustness_orderings_attained(manipulation_totals):
    totals = manipulation_totals
    for scenario in ("replace10", "replace20", "bribery", "influence10"):
        for minimal in ("lu", "lur"):
            for rule in OTHER_RULES:
                assert totals[(minimal, scenario)] <= totals[(rule, scenario)], (
                    f"{minimal} not minimal in {scenario} vs {rule}"
                )
    p = totals[("plurality", "influence10")]
    assert all(p >= totals[(r, "influence10")] for r in EXPERIMENT_RULES)


def test_criterion_7_robustness_orderings_verbatim(manipulation_totals):
    """Asserts the full published ordering claim, verbatim.

    Known to fail: candidate deletion preserves every pairwise contest, so
    Condorcet-family rules are nearly immune to it while the least-unpopular
    count is reshuffled, making lu the most (not least) affected rule there;
    and with set-valued winners the tie flicker of copeland/seqpairs/condorcet
    under ballot replacement exceeds plurality's count.  Both effects are
    stable across seeds, i.e. structural rather than sampling noise.
    """
    totals = manipulation_totals
    for scenario in SCENARIO_NAMES:
        for minimal in ("lu", "lur"):
            for rule in OTHER_RULES:
                assert totals[(minimal, scenario)] <= totals[(rule, scenario)], (
                    f"{minimal} not minimal in {scenario} vs {rule}"
                )
    for scenario in ("replace10", "replace20", "influence10"):
        p = totals[("plurality", scenario)]
        assert all(p >= totals[(r, scenario)] for r in EXPERIMENT_RULES), (
            f"plurality not maximal in {scenario}"
        )


def test_criterion_8_byte_identical_reruns(tmp_path):
    def digest(path):
        return hashlib.sha256(path.read_bytes()).hexdigest()

    sd_cfg = sd_config(master_seed=77, candidate_counts=(3, 4),
                       voter_counts=(6, 7), profiles_per_cell=20)
    manip_cfg = manipulation_config(master_seed=77, candidate_counts=(3, 4),
                                    voter_counts=(10,), profiles_per_cell=5)
    hashes = []
    for run_id in ("a", "b"):
        records, summary = run_sd_experiment(sd_cfg)
        mrecords, msummary = run_manipulation_experiment(manip_cfg)
        paths = {
            "sd_records": tmp_path / f"sd_records_{run_id}.csv",
            "sd_summary": tmp_path / f"sd_summary_{run_id}.csv",
            "manip_records": tmp_path / f"manip_records_{run_id}.csv",
            "manip_summary": tmp_path / f"manip_summary_{run_id}.csv",
        }
        write_records_csv(records, paths["sd_records"])
        write_summary_csv(summary, paths["sd_summary"])
        write_records_csv(mrecords, paths["manip_records"])
        write_summary_csv(msummary, paths["manip_summary"])
        hashes.append({k: digest(p) for k, p in paths.items()})
    assert hashes[0] == hashes[1]
