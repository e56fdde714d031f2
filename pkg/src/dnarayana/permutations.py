"""Pattern containment, decreasing runs and the family P_d.

``P_d``: nonempty 231-avoiding permutations whose decreasing runs (maximal
contiguous decreasing blocks) all have length 1 mod d-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ._combinat import DEFAULT_GUARD, Guard, check_d

__all__ = [
    "Permutation",
    "PermutationError",
    "contains_pattern",
    "avoids_231",
    "decreasing_runs",
    "in_P_d",
    "enumerate_P",
    "format_permutation",
    "parse_permutation",
]


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.word)
        object.__setattr__(self, "word", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise PermutationError(f"{w} is not a permutation of 1..{len(w)}")

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return format_permutation(self)


def _word(p):
    return p.word if isinstance(p, Permutation) else tuple(p)


def _pattern_of(values):
    order = sorted(values)
    return tuple(order.index(v) for v in values)


def contains_pattern(p, pattern) -> bool:
    """Brute force over index subsets."""
    w = _word(p)
    target = _pattern_of(_word(pattern))
    return any(_pattern_of(sub) == target for sub in combinations(w, len(target)))


def avoids_231(p) -> bool:
    """Linear-time stack test; agrees with ``not contains_pattern(p, 231)``."""
    low = 0
    stack = []
    for x in _word(p):
        if x < low:
            return False
        while stack and stack[-1] < x:
            low = stack.pop()
        stack.append(x)
    return True


def decreasing_runs(p) -> list[tuple[int, ...]]:
    w = _word(p)
    runs = []
    for x in w:
        if runs and runs[-1][-1] > x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(r) for r in runs]


def in_P_d(p, d: int) -> bool:
    check_d(d)
    w = _word(p)
    if not w:
        return False
    return avoids_231(w) and all((len(r) - 1) % (d - 1) == 0 for r in decreasing_runs(w))


@lru_cache(maxsize=None)
def _gen(m: int, size: int, runs: int, off: int) -> tuple:
    """231-avoiders of [size] with ``runs`` runs, every run 1 mod m except the
    first, whose length plus ``off`` must be 1 mod m.

    A 231-avoider with maximum ``size`` splits as alpha, size, beta with every
    value of alpha below every value of beta; ``size`` joins beta's first run.
    """
    off %= m
    if size == 0 or runs < 1 or runs > size:
        return ()
    out = []
    top = size
    if size == 1:
        return ((1,),) if runs == 1 and off == 0 else ()
    # alpha empty: the run starting at ``top`` is 1 + beta's first run
    for beta in _gen(m, size - 1, runs, off + 1):
        out.append((top,) + beta)
    for j in range(1, size):
        rest = size - 1 - j
        for ra in range(1, runs):
            rb = runs - ra
            alphas = _gen(m, j, ra, off)
            if not alphas:
                continue
            if rest == 0:
                if rb == 1:
                    out.extend(a + (top,) for a in alphas)
                continue
            betas = [tuple(x + j for x in b) for b in _gen(m, rest, rb, 1)]
            for a in alphas:
                for b in betas:
                    out.append(a + (top,) + b)
    return tuple(out)


def enumerate_P(d: int, size: int, runs: int,
                limit: int | None = DEFAULT_GUARD) -> list[Permutation]:
    """Members of P_d on [size] with exactly ``runs`` decreasing runs, sorted."""
    check_d(d)
    if size < 1:
        return []
    words = _gen(d - 1, size, runs, 0)
    Guard(limit).tick(len(words))
    return [Permutation(w) for w in sorted(words)]


def format_permutation(p) -> str:
    w = _word(p)
    if len(w) <= 9:
        return "".join(map(str, w))
    return " ".join(map(str, w))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    try:
        if " " in text or "," in text:
            w = tuple(int(x) for x in text.replace(",", " ").split())
        else:
            w = tuple(int(c) for c in text)
    except ValueError as exc:
        raise PermutationError(f"bad permutation text {text!r}") from exc
    return Permutation(w)
