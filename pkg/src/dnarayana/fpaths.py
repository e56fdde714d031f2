"""Lattice paths with steps (l, 1), labelled by compositions: the family F_d.

A step is stored as ``(run, label)``: ``run`` is the x-increment l >= 0 and
``label`` is a composition of l-1 into d-1 parts, or ``None`` for a (0,1)
step.  The path must stay on or above y = x.

Text form: ``"(0,1) (1,1)[0,0] (4,1)[1,2]"``; labels are left out for d = 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from ._combinat import DEFAULT_GUARD, Guard, check_d, compositions

__all__ = [
    "FPath",
    "FPathStats",
    "FPathError",
    "fpath_stats",
    "height",
    "in_F_d",
    "enumerate_F",
    "format_fpath",
    "parse_fpath",
]


class FPathError(ValueError):
    pass


@dataclass(frozen=True)
class FPath:
    steps: tuple  # of (run, label)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((r, lab) for r, lab in self.steps))

    def __len__(self):
        return len(self.steps)

    def runs(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.steps)


@dataclass(frozen=True)
class FPathStats:
    length: int
    north: int
    height: int


def height(steps) -> int:
    """y - x at the end point."""
    return sum(1 - r for r, _ in steps)


def fpath_stats(f: FPath) -> FPathStats:
    return FPathStats(len(f.steps), sum(1 for r, _ in f.steps if r == 0), height(f.steps))


def in_F_d(f: FPath, d: int) -> bool:
    check_d(d)
    total = 0
    for i, (r, lab) in enumerate(f.steps, 1):
        if not isinstance(r, int) or r < 0:
            return False
        total += r
        if total > i:
            return False
        if r == 0:
            if lab is not None:
                return False
        elif not (isinstance(lab, tuple) and len(lab) == d - 1
                  and all(isinstance(x, int) and x >= 0 for x in lab) and sum(lab) == r - 1):
            return False
    return True


def _sort_key(f: FPath):
    return tuple((r, lab or ()) for r, lab in f.steps)


def enumerate_F(d: int, n: int, k: int, limit: int | None = DEFAULT_GUARD) -> list[FPath]:
    """Paths in F_d with n steps, k of them (0,1)."""
    check_d(d)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    guard = Guard(limit)
    out = []
    runs: list[int] = []

    def rec(i, total, north_left):
        if i == n:
            if north_left == 0:
                choices = [[None] if r == 0 else compositions(r - 1, d - 1) for r in runs]
                for labs in product(*choices):
                    guard.tick()
                    out.append(FPath(tuple(zip(runs, labs))))
            return
        if north_left:
            runs.append(0)
            rec(i + 1, total, north_left - 1)
            runs.pop()
        # n - i - north_left non-north steps remain, this one included
        if n - i > north_left:
            for r in range(1, i + 2 - total):
                runs.append(r)
                rec(i + 1, total + r, north_left)
                runs.pop()

    rec(0, 0, k)
    out.sort(key=_sort_key)
    return out


def format_fpath(f: FPath, d: int) -> str:
    parts = []
    for r, lab in f.steps:
        if r == 0 or d == 2:
            parts.append(f"({r},1)")
        else:
            parts.append(f"({r},1)[" + ",".join(map(str, lab)) + "]")
    return " ".join(parts)


_STEP = re.compile(r"\(\s*(\d+)\s*,\s*1\s*\)(?:\s*\[([\d,\s]*)\])?")


def parse_fpath(text: str, d: int) -> FPath:
    check_d(d)
    steps = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in " ,\t":
            pos += 1
            continue
        m = _STEP.match(text, pos)
        if m is None:
            raise FPathError(f"bad step at {pos} in {text!r}")
        pos = m.end()
        r = int(m.group(1))
        if m.group(2) is not None:
            lab = tuple(int(x) for x in m.group(2).replace(" ", "").split(",") if x)
        elif r == 0:
            lab = None
        elif d == 2:
            lab = (r - 1,)
        else:
            raise FPathError(f"step ({r},1) in {text!r} needs a label")
        steps.append((r, lab))
    f = FPath(tuple(steps))
    if not in_F_d(f, d):
        raise FPathError(f"{text!r} is not in F_{d}")
    return f
