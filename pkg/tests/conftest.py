"""Shared fixture profiles used as oracles across the test modules."""

import pytest

from ballotforge import Profile


def P(*ballots) -> Profile:
    return Profile.from_ballots(ballots)


# Nine voters over Milk=0, Wine=1, Beer=2: plurality elects Milk even though
# a majority ranks Milk last and Milk loses every head-to-head contest.
BEVERAGES = P(*([(0, 1, 2)] * 4 + [(2, 1, 0)] * 3 + [(1, 2, 0)] * 2))

# a=0, b=1, c=2: LU ties {b, c}, the reselection step then separates them.
RESELECTION = P((0, 2, 1), (0, 1, 2), (1, 2, 0), (1, 2, 0))

# Plurality winner a=0 is ranked last by half of four voters (disappointment
# without a Condorcet loser).
DISAPPOINT_NO_LOSER = P((0, 2, 1), (0, 1, 2), (1, 2, 0), (2, 1, 0))

# 80 voters: LU elects a=0, the Condorcet loser (frustration without
# disappointment).
FRUSTRATION_NO_SD = P(
    *([(1, 0, 2)] * 32 + [(2, 0, 1)] * 38 + [(1, 2, 0)] * 10)
)

# Four candidates: d=3 ties every rival pairwise while a, b, c form a cycle.
# Condorcet and Copeland elect d; d sits at the bottom of half the ballots.
TIED_TOP_CYCLE = P(
    (3, 0, 1, 2), (3, 0, 1, 2), (3, 2, 0, 1), (2, 0, 1, 3), (1, 2, 0, 3), (1, 2, 0, 3)
)

# Borda three-way tie where every candidate is ranked last by half the voters.
BORDA_ALL_TIE = P((0, 1, 2), (0, 1, 2), (2, 1, 0), (2, 1, 0))

# Instant-runoff elects a=0 although a majority ranks a last.
HARE_DISAPPOINTS = P(*([(0, 1, 2)] * 4 + [(2, 1, 0)] * 3 + [(1, 2, 0)] * 3))

# The classic three-way majority cycle: the Condorcet set is empty.
CYCLE3 = P((0, 1, 2), (1, 2, 0), (2, 0, 1))

# LU ties {a, b} although everyone prefers a=0 to b=1 (Pareto failure);
# the reselection step repairs it.
LU_PARETO = P((0, 1, 2, 3), (0, 1, 2, 3), (2, 0, 1, 3), (3, 0, 1, 2))

# LU winner flips between these two although no voter changed their relative
# order of a=0 and b=1 (IIA failure): voter 3 swaps a and c only.
LU_IIA_BEFORE = P((0, 1, 2), (0, 1, 2), (1, 2, 0))
LU_IIA_AFTER = P((0, 1, 2), (0, 1, 2), (1, 0, 2))


@pytest.fixture
def beverages():
    return BEVERAGES
