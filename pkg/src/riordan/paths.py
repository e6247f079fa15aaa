"""Brute-force combinatorial oracles: Motzkin paths, grand Motzkin paths, and
domino/square tilings, counted by the statistic attached to each triangle.

These never touch the series machinery, so they serve as independent checks
of the closed forms.  Motzkin paths take steps U=(1,1), D=(1,-1), H=(1,0)
from height 0 back to height 0; the plain variant never dips below 0, the
grand variant may.  Enumeration is memoized on (remaining, height, count).
"""

from __future__ import annotations

from dataclasses import dataclass

VARIANTS = ("motzkin", "grand_motzkin")
STATISTICS = ("level_steps", "up_steps", "up_plus_level_steps")

MAX_PATH_LENGTH = 16
MAX_BOARD_LENGTH = 20


@dataclass(frozen=True)
class PathClass:
    variant: str
    statistic: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.statistic not in STATISTICS:
            raise ValueError(f"statistic must be one of {STATISTICS}")


def _step_weights(statistic: str) -> tuple[int, int, int]:
    """How much (U, D, H) each add to the statistic."""
    if statistic == "level_steps":
        return 0, 0, 1
    if statistic == "up_steps":
        return 1, 0, 0
    return 1, 0, 1  # up_plus_level_steps


def count_paths(cls: PathClass, n: int, k: int) -> int:
    """Paths of length n whose statistic equals k, by exhaustive generation."""
    if n < 0 or n > MAX_PATH_LENGTH:
        raise ValueError(f"path length must be in 0..{MAX_PATH_LENGTH}, got {n}")
    if k < 0:
        raise ValueError(f"statistic value must be >= 0, got {k}")
    grand = cls.variant == "grand_motzkin"
    wu, wd, wh = _step_weights(cls.statistic)
    memo: dict[tuple[int, int, int], int] = {}

    def rec(rem: int, h: int, c: int) -> int:
        if c > k or abs(h) > rem:
            return 0
        if rem == 0:
            return 1 if h == 0 and c == k else 0
        key = (rem, h, c)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = rec(rem - 1, h + 1, c + wu)  # U
        if grand or h > 0:
            total += rec(rem - 1, h - 1, c + wd)  # D
        total += rec(rem - 1, h, c + wh)  # H
        memo[key] = total
        return total

    return rec(n, 0, 0)


def count_tilings(n: int, k: int) -> int:
    """Tilings of a 1 x n board by dominoes and exactly k unit squares,
    generated left to right."""
    if n < 0 or n > MAX_BOARD_LENGTH:
        raise ValueError(f"board length must be in 0..{MAX_BOARD_LENGTH}, got {n}")
    if k < 0:
        raise ValueError(f"square count must be >= 0, got {k}")
    memo: dict[tuple[int, int], int] = {}

    def rec(rem: int, squares: int) -> int:
        if squares > k or rem < 0:
            return 0
        if rem == 0:
            return 1 if squares == k else 0
        key = (rem, squares)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = rec(rem - 1, squares + 1) + rec(rem - 2, squares)
        memo[key] = total
        return total

    return rec(n, 0)
