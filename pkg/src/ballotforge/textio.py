"""The plain-text profile format and the optional candidate name table.

Layout::

    # name 0 Milk          (optional header lines, one per candidate)
    3 9                    (m n)
    0 1 2                  (one ballot per line, most preferred first)
    ...

Candidate ids stay dense integers inside the engine; names live only here.
Parse errors cite the offending line number.
"""

from __future__ import annotations

from .core import Profile, ProfileError

__all__ = ["ParseError", "parse_profile", "format_profile", "label"]


class ParseError(ValueError):
    """A malformed profile file; the message cites the line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_profile(text: str) -> tuple[Profile, dict[int, str]]:
    """Parse the text format; returns the profile and the id -> name table."""
    names: dict[int, str] = {}
    header: tuple[int, int] | None = None
    header_line = 0
    ballots: list[tuple[int, ...]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name "):
                parts = body.split(maxsplit=2)
                if len(parts) != 3 or not parts[1].isdigit():
                    raise ParseError(line_no, f"malformed name header: {raw!r}")
                names[int(parts[1])] = parts[2]
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(line_no, f"expected 'm n' header, got {raw!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(line_no, f"non-integer header: {raw!r}") from None
            header_line = line_no
            continue
        try:
            ballot = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(line_no, f"non-integer candidate id in ballot: {raw!r}") from None
        m = header[0]
        if len(ballot) != m or set(ballot) != set(range(m)):
            raise ParseError(
                line_no, f"ballot is not a permutation of 0..{m - 1}: {raw!r}"
            )
        ballots.append(ballot)
    if header is None:
        raise ParseError(1, "missing 'm n' header line")
    m, n = header
    if len(ballots) != n:
        raise ParseError(
            header_line, f"header promises {n} ballots but file has {len(ballots)}"
        )
    try:
        profile = Profile(num_candidates=m, ballots=tuple(ballots))
    except ProfileError as exc:
        raise ParseError(header_line, str(exc)) from None
    return profile, names


def format_profile(profile: Profile, names: dict[int, str] | None = None) -> str:
    """Serialize a profile back to the text format."""
    lines = []
    for c, name in sorted((names or {}).items()):
        lines.append(f"# name {c} {name}")
    lines.append(f"{profile.num_candidates} {profile.num_voters}")
    for ballot in profile.ballots:
        lines.append(" ".join(str(c) for c in ballot))
    return "\n".join(lines) + "\n"


def label(candidate: int, names: dict[int, str]) -> str:
    """Human label for a candidate id: its name if known, else the id."""
    return names.get(candidate, str(candidate))
