from dataclasses import dataclass

from boxball.constants import EMPTY_CHARS, BALL_CHAR, RE_STATE
from boxball.errors import UsageError, DomainError


def parse_cells(text):
    """'.11..1' -> (0, 1, 1, 0, 0, 1). '0' is accepted for an empty box."""
    text = text.strip()
    if not RE_STATE.fullmatch(text):
        raise UsageError(f"invalid state string '{text}': use '.', '0' or '1'")
    return tuple(0 if ch in EMPTY_CHARS else 1 for ch in text)


def render_cells(cells):
    return "".join(BALL_CHAR if c else "." for c in cells)


@dataclass(frozen=True)
class BBSState:
    """Non-periodic state: cells[k] is box offset + k, every box outside the window is empty."""

    offset: int
    cells: tuple

    @classmethod
    def parse(cls, text, offset=0):
        return cls(offset, parse_cells(text))

    @property
    def balls(self):
        return sum(self.cells)

    def value(self, n):
        k = n - self.offset
        return self.cells[k] if 0 <= k < len(self.cells) else 0

    def window(self, start, stop):
        return tuple(self.value(n) for n in range(start, stop))

    def ball_positions(self):
        return [self.offset + k for k, c in enumerate(self.cells) if c]

    def __str__(self):
        return render_cells(self.cells)


@dataclass(frozen=True)
class PBBSState:
    """Periodic state of system-size L = len(cells)."""

    cells: tuple

    def __post_init__(self):
        if 2 * sum(self.cells) >= max(len(self.cells), 1) and sum(self.cells) > 0:
            raise DomainError(
                f"overfull periodic state: {sum(self.cells)} ball(s) in {len(self.cells)} boxes"
            )

    @classmethod
    def parse(cls, text):
        return cls(parse_cells(text))

    @property
    def L(self):
        return len(self.cells)

    @property
    def balls(self):
        return sum(self.cells)

    def value(self, n):
        return self.cells[n % self.L]

    def to_bbs(self, offset=0):
        return BBSState(offset, self.cells)

    def __str__(self):
        return render_cells(self.cells)
