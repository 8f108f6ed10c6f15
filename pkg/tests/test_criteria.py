import pytest
from hypothesis import given

from ballotforge import (
    CRITERION_NAMES,
    RULE_NAMES,
    TABLE3,
    BudgetExceededError,
    Counterexample,
    check_axiom,
    condorcet_loser,
    replay,
    sd_occurred,
    sf_occurred,
    strict_sd_occurred,
)
from ballotforge.criteria import all_ballots, canonical_profiles, ordered_profiles
from ballotforge.rules import evaluate
from conftest import (
    BEVERAGES,
    DISAPPOINT_NO_LOSER,
    FRUSTRATION_NO_SD,
    LU_IIA_AFTER,
    LU_IIA_BEFORE,
    LU_PARETO,
    P,
)
from test_core import profiles


class TestDetectors:
    def test_beverages_flags(self):
        winners = {0}  # plurality's choice
        assert condorcet_loser(BEVERAGES) == 0
        assert sd_occurred(BEVERAGES, winners)
        assert strict_sd_occurred(BEVERAGES, winners)
        assert sf_occurred(BEVERAGES, winners)

    def test_disappointment_without_loser(self):
        assert condorcet_loser(DISAPPOINT_NO_LOSER) is None
        assert sd_occurred(DISAPPOINT_NO_LOSER, {0})
        assert not strict_sd_occurred(DISAPPOINT_NO_LOSER, {0})
        assert not sf_occurred(DISAPPOINT_NO_LOSER, {0})

    def test_frustration_without_disappointment(self):
        assert condorcet_loser(FRUSTRATION_NO_SD) == 0
        assert sf_occurred(FRUSTRATION_NO_SD, {0})
        assert not sd_occurred(FRUSTRATION_NO_SD, {0})

    def test_sd_needs_three_candidates(self):
        two = P((0, 1), (1, 0))
        with pytest.raises(ValueError):
            sd_occurred(two, {0})
        with pytest.raises(ValueError):
            strict_sd_occurred(two, {0})

    def test_boundary_is_half(self):
        # Exactly half the voters rank the winner last: weak SD, not strict.
        p = P((0, 1, 2), (1, 2, 0))
        assert sd_occurred(p, {0})
        assert not strict_sd_occurred(p, {0})

    @given(profiles(max_m=4, max_n=6))
    def test_strict_sd_implies_sd(self, profile):
        if profile.num_candidates < 3:
            return
        for rule in ("plurality", "borda"):
            winners = evaluate(rule, profile)
            if strict_sd_occurred(profile, winners):
                assert sd_occurred(profile, winners)

    @given(profiles(max_m=4, max_n=6))
    def test_condorcet_loser_is_unique_and_loses(self, profile):
        from ballotforge import tally_pairwise

        loser = condorcet_loser(profile)
        if loser is not None:
            wins = tally_pairwise(profile)
            assert all(
                wins[loser][y] < wins[y][loser]
                for y in profile.candidates
                if y != loser
            )


class TestEnumeration:
    def test_all_ballots_count(self):
        assert len(all_ballots(3)) == 6
        assert all_ballots(3)[0] == (0, 1, 2)

    def test_canonical_profile_count(self):
        # multichoose(6, 2) = 21 profiles of two voters over three candidates
        assert sum(1 for _ in canonical_profiles(3, 2)) == 21

    def test_ordered_profile_count(self):
        assert sum(1 for _ in ordered_profiles(3, 2)) == 36


class TestCheckAxiom:
    def test_unknown_names_rejected(self):
        with pytest.raises(ValueError, match="plurality"):
            check_axiom("approval", "sdc", 3, 3)
        with pytest.raises(ValueError, match="monotonicity"):
            check_axiom("plurality", "fairness", 3, 3)

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError) as exc:
            check_axiom("plurality", "iia", 4, 5, budget=10)
        assert exc.value.estimate > 10

    def test_condorcet_cwc_is_tautological(self):
        assert check_axiom("condorcet", "cwc", 4, 5) is None

    def test_plurality_violates_sdc(self):
        cx = check_axiom("plurality", "sdc", 3, 4)
        assert cx is not None
        assert replay(cx)

    def test_coombs_satisfies_sdc_in_bounds(self):
        assert check_axiom("coombs", "sdc", 3, 5) is None

    def test_coombs_monotonicity_witness(self):
        cx = check_axiom("coombs", "monotonicity", 3, 3)
        assert cx is not None
        before, after = cx.witness_profiles
        assert before.num_voters == after.num_voters == 3
        assert replay(cx)

    def test_replay_rejects_broken_witness(self):
        cx = Counterexample("sdc", "coombs", (BEVERAGES,), (0,))
        assert not replay(cx)


class TestPublishedWitnessesReplay:
    def test_lu_pareto(self):
        cx = Counterexample("pareto", "lu", (LU_PARETO,), (0, 1))
        assert replay(cx)

    def test_lu_iia(self):
        cx = Counterexample("iia", "lu", (LU_IIA_BEFORE, LU_IIA_AFTER), (1, 0))
        assert replay(cx)

    def test_lu_clc(self):
        cx = Counterexample("clc", "lu", (FRUSTRATION_NO_SD,), (0,))
        assert replay(cx)


class TestTable3Shape:
    def test_dimensions(self):
        rules = {r for r, _ in TABLE3}
        crits = {c for _, c in TABLE3}
        assert len(TABLE3) == 63
        assert rules == set(RULE_NAMES) - {"dictator", "ucc"}
        assert crits == set(CRITERION_NAMES) - {"strict_sdc"}

    def test_known_entries(self):
        assert TABLE3[("coombs", "sdc")] is True
        assert TABLE3[("plurality", "sdc")] is False
        assert TABLE3[("condorcet", "aaw")] is False
        assert TABLE3[("copeland", "cwc")] is True
