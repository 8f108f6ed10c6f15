"""Ballots, profiles, and the pairwise/positional statistics every rule consumes.

Candidates are dense integer ids ``0..m-1``.  A ballot is a strict ranking
(a permutation of the candidate ids, most preferred first) and a profile is
an ordered sequence of ballots over a fixed candidate set.  All objects are
immutable; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "ProfileError",
    "Profile",
    "tally_pairwise",
    "first_place_counts",
    "bottom_counts",
    "restrict",
]


class ProfileError(ValueError):
    """Raised when a ballot or profile violates its structural invariants."""


@dataclass(frozen=True)
class Profile:
    """An election: ``n`` strict rankings over candidates ``0..m-1``.

    ``ballots[i]`` is voter ``i``'s ranking, position 0 most preferred and
    position ``m-1`` least preferred.  Weak orders (ties within a ballot)
    are deliberately not representable.
    """

    num_candidates: int
    ballots: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        m = self.num_candidates
        if m < 1:
            raise ProfileError(f"need at least one candidate, got m={m}")
        if not self.ballots:
            raise ProfileError("profile needs at least one ballot")
        full = frozenset(range(m))
        for voter, ballot in enumerate(self.ballots):
            if len(ballot) != m or set(ballot) != full:
                raise ProfileError(
                    f"ballot of voter {voter} is not a permutation of 0..{m - 1}: {ballot!r}"
                )

    @property
    def num_voters(self) -> int:
        return len(self.ballots)

    @property
    def candidates(self) -> range:
        return range(self.num_candidates)

    @classmethod
    def from_ballots(cls, ballots) -> "Profile":
        """Build a profile, inferring the candidate count from the first ballot."""
        ballots = tuple(tuple(b) for b in ballots)
        if not ballots:
            raise ProfileError("profile needs at least one ballot")
        return cls(num_candidates=len(ballots[0]), ballots=ballots)


def tally_pairwise(profile: Profile) -> list[list[int]]:
    """Pairwise majority counts: ``wins[x][y]`` = voters ranking x above y.

    Linear ballots force the complement identity
    ``wins[x][y] + wins[y][x] == n`` for x != y.
    """
    m = profile.num_candidates
    wins = [[0] * m for _ in range(m)]
    for ballot in profile.ballots:
        for i in range(m - 1):
            row = wins[ballot[i]]
            for j in range(i + 1, m):
                row[ballot[j]] += 1
    return wins


def first_place_counts(profile: Profile) -> list[int]:
    """How many ballots rank each candidate first.  Sums to ``n``."""
    counts = [0] * profile.num_candidates
    for ballot in profile.ballots:
        counts[ballot[0]] += 1
    return counts


def bottom_counts(profile: Profile) -> list[int]:
    """How many ballots rank each candidate last (``lp`` vector).  Sums to ``n``."""
    counts = [0] * profile.num_candidates
    for ballot in profile.ballots:
        counts[ballot[-1]] += 1
    return counts


def restrict(profile: Profile, keep) -> tuple[Profile, dict[int, int]]:
    """Drop every candidate outside ``keep``, preserving each ballot's order.

    Surviving candidates are re-indexed densely in ascending old-id order.
    Returns the restricted profile and the old-id -> new-id map.
    """
    keep = frozenset(keep)
    if not keep:
        raise ProfileError("cannot restrict to an empty candidate set")
    if not keep <= frozenset(profile.candidates):
        raise ProfileError(f"unknown candidates in keep set: {sorted(keep)}")
    old_to_new = {old: new for new, old in enumerate(sorted(keep))}
    ballots = tuple(
        tuple(old_to_new[c] for c in ballot if c in keep) for ballot in profile.ballots
    )
    return Profile(num_candidates=len(keep), ballots=ballots), old_to_new
