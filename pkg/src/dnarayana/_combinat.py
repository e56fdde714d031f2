"""Small shared helpers: the enumeration guard, compositions, subsets, sort keys."""

from __future__ import annotations

from itertools import combinations

DEFAULT_GUARD = 10**6

_STEP_ORDER = str.maketrans("UDH", "012")


class GuardExceeded(RuntimeError):
    """An enumerator produced more objects than its guard allows."""


class Guard:
    """Counts produced objects and trips once ``limit`` is passed."""

    __slots__ = ("limit", "count")

    def __init__(self, limit: int | None = DEFAULT_GUARD):
        self.limit = limit
        self.count = 0

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.limit is not None and self.count > self.limit:
            raise GuardExceeded(f"more than {self.limit} objects requested")


def step_key(steps: str) -> str:
    """Sort key giving the U < D < H step order."""
    return steps.translate(_STEP_ORDER)


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts, lexicographic."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def subsets(ground: int, size: int) -> list[tuple[int, ...]]:
    """``size``-element subsets of {1..ground} as sorted tuples, in sorted-vector order."""
    return list(combinations(range(1, ground + 1), size))


def check_d(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"arity d must be an integer >= 2, got {d!r}")
