"""Cardinal directions and their fixed 2-bit codes."""

from enum import IntEnum


class Direction(IntEnum):
    """One step / door direction. The integer value doubles as the 2-bit code."""

    N = 0
    E = 1
    S = 2
    W = 3

    @property
    def delta(self) -> tuple[int, int]:
        """(row, col) displacement of one step in this direction."""
        return _DELTAS[self]

    @property
    def opposite(self) -> "Direction":
        return Direction((self + 2) & 3)


# Row 0 is the top row: N decreases the row, S increases it, E/W move the column.
_DELTAS = ((-1, 0), (0, 1), (1, 0), (0, -1))

DIRECTIONS = (Direction.N, Direction.E, Direction.S, Direction.W)


def parse_direction(ch: str) -> Direction:
    """Turn a single letter N/E/S/W (any case) into a Direction."""
    try:
        return Direction[ch.upper()]
    except KeyError:
        raise ValueError(f"unknown direction {ch!r}") from None
