"""Fixed-length direction sequences and their integer indexing.

A candidate path of length n is a sequence of n directions. Packing the
2-bit direction codes with the first step in the most significant position
maps paths bijectively onto [0, 4**n), in lexicographic order N < E < S < W.
"""

from collections.abc import Iterable, Sequence

from .directions import Direction, parse_direction

# 4**14 table/state entries (~268M) is the default ceiling; anything larger
# must be requested explicitly.
DEFAULT_N_CAP = 14


def path_length(start, end) -> int:
    """Step budget for a start/end pair: twice the Manhattan distance.

    Generous on purpose: walks stop as soon as they reach the end, so extra
    slots are harmless, and a perfect maze usually needs the slack.
    """
    sr, sc = start
    er, ec = end
    return 2 * (abs(er - sr) + abs(ec - sc))


def path_to_index(steps: Sequence[Direction], n: int | None = None) -> int:
    """Pack a direction sequence into its path index."""
    if n is not None and len(steps) != n:
        raise ValueError(f"expected {n} steps, got {len(steps)}")
    index = 0
    for step in steps:
        code = int(step)
        if not 0 <= code <= 3:
            raise ValueError(f"invalid direction code {code}")
        index = index << 2 | code
    return index


def index_to_path(index: int, n: int) -> tuple[Direction, ...]:
    """Unpack a path index into its n directions (inverse of path_to_index)."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    if not 0 <= index < 4**n:
        raise ValueError(f"index {index} out of range for length {n}")
    return tuple(Direction(index >> 2 * (n - 1 - k) & 3) for k in range(n))


def parse_path(text: str) -> tuple[Direction, ...]:
    """Parse a string like 'EENN' into directions."""
    return tuple(parse_direction(ch) for ch in text.strip())


def format_path(steps: Iterable[Direction]) -> str:
    return "".join(Direction(s).name for s in steps)
