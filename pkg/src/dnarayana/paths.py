"""Schroeder and Dyck paths, plain and with labelled descents.

Steps are the letters U = (1,1), D = (1,-1), H = (2,0).  A path is stored as
its step string.  Families handled here:

* ``S_d``  -- nonempty Schroeder paths whose total H count, and the H count
  strictly inside every matched U...D pair, are congruent to 1 mod d-1;
* ``Q_d``  -- nonempty Dyck paths whose ascents have length 1 mod d-1;
* ``~S_d`` -- Schroeder paths (possibly empty) with descents of length at
  most d-1, a descent of length l labelled by an (l-1)-subset of [d-2];
* ``~Q_d`` -- nonempty Dyck paths whose non-final descents of length l are
  labelled by a composition of l-1 into d-1 parts.

Text forms: descent labels follow their descent, ``{1,2}`` for subsets and
``(1,0)`` for compositions, e.g. ``UUUDHHDD{2}H`` (d = 4) or ``UUD(0,0)UUUDDDD(1,2)UUDD``.
Labels that admit only one value are left out when printing and filled in
when parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby, product

from ._combinat import DEFAULT_GUARD, Guard, check_d, compositions, step_key, subsets

__all__ = [
    "LatticePath",
    "DescentLabeledPath",
    "PathStats",
    "PathError",
    "matching_down",
    "matching_pairs",
    "stats_path",
    "descent_spans",
    "in_S_d",
    "in_Q_d",
    "in_labeled_S",
    "in_labeled_Q",
    "enumerate_S",
    "enumerate_Q",
    "enumerate_dyck",
    "enumerate_labeled_S",
    "enumerate_labeled_Q",
    "format_labeled_S",
    "parse_labeled_S",
    "format_labeled_Q",
    "parse_labeled_Q",
]


class PathError(ValueError):
    """Not a well-formed path, or not in the requested family."""


@dataclass(frozen=True, order=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        h = 0
        for c in self.steps:
            if c == "U":
                h += 1
            elif c == "D":
                h -= 1
                if h < 0:
                    raise PathError(f"{self.steps!r} goes below the axis")
            elif c != "H":
                raise PathError(f"bad step {c!r} in {self.steps!r}")
        if h:
            raise PathError(f"{self.steps!r} does not end on the axis")

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class DescentLabeledPath:
    """A path with one entry in ``labels`` per maximal descent, left to right.

    Subset labels (``~S_d``) and composition labels (``~Q_d``) are tuples of
    ints; the unlabelled final descent of a ``~Q_d`` path holds ``None``.
    """

    base: LatticePath
    labels: tuple

    def __str__(self):
        return self.base.steps


@dataclass(frozen=True)
class PathStats:
    semilength: int
    up_count: int
    h_count: int
    peaks: int
    ascent_lengths: tuple[int, ...]
    descent_lengths: tuple[int, ...]
    uu_count: int
    hdd: int


def _steps(p) -> str:
    if isinstance(p, DescentLabeledPath):
        return p.base.steps
    if isinstance(p, LatticePath):
        return p.steps
    return p


def matching_pairs(p) -> dict[int, int]:
    """Map each U position to the position of its matching D."""
    s = _steps(p)
    stack = []
    out = {}
    for i, c in enumerate(s):
        if c == "U":
            stack.append(i)
        elif c == "D":
            if not stack:
                raise PathError(f"{s!r} is not a path")
            out[stack.pop()] = i
    if stack:
        raise PathError(f"{s!r} is not a path")
    return out


def matching_down(p, up_index: int) -> int:
    """Position of the D matching the U at position ``up_index``."""
    s = _steps(p)
    if not 0 <= up_index < len(s) or s[up_index] != "U":
        raise PathError(f"position {up_index} of {s!r} is not an up step")
    h = 0
    for i in range(up_index, len(s)):
        c = s[i]
        if c == "U":
            h += 1
        elif c == "D":
            h -= 1
            if h == 0:
                return i
    raise PathError(f"{s!r} is not a path")


def _runs(s: str, letter: str) -> list[int]:
    return [len(list(g)) for c, g in groupby(s) if c == letter]


def stats_path(p) -> PathStats:
    s = _steps(p)
    ups = s.count("U")
    hs = s.count("H")
    dd = sum(1 for a, b in zip(s, s[1:]) if a == b == "D")
    return PathStats(
        semilength=ups + hs,
        up_count=ups,
        h_count=hs,
        peaks=s.count("UD"),
        ascent_lengths=tuple(_runs(s, "U")),
        descent_lengths=tuple(_runs(s, "D")),
        uu_count=sum(1 for a, b in zip(s, s[1:]) if a == b == "U"),
        hdd=hs + dd,
    )


def descent_spans(s: str) -> list[tuple[int, int]]:
    """(start, end) of each maximal run of D's, end exclusive."""
    out = []
    i = 0
    while i < len(s):
        if s[i] == "D":
            j = i
            while j < len(s) and s[j] == "D":
                j += 1
            out.append((i, j))
            i = j
        else:
            i += 1
    return out


def _is_path(s: str) -> bool:
    try:
        LatticePath(s)
    except PathError:
        return False
    return True


def in_S_d(p, d: int) -> bool:
    check_d(d)
    s = _steps(p)
    if not s or not _is_path(s):
        return False
    m = d - 1
    if (s.count("H") - 1) % m:
        return False
    # H count before each position
    hbefore = [0]
    for c in s:
        hbefore.append(hbefore[-1] + (c == "H"))
    for u, dn in matching_pairs(s).items():
        inside = hbefore[dn] - hbefore[u]
        if inside < 1 or (inside - 1) % m:
            return False
    return True


def in_Q_d(p, d: int) -> bool:
    check_d(d)
    s = _steps(p)
    if not s or "H" in s or not _is_path(s):
        return False
    return all((a - 1) % (d - 1) == 0 for a in _runs(s, "U"))


def in_labeled_S(p: DescentLabeledPath, d: int) -> bool:
    check_d(d)
    s = p.base.steps
    spans = descent_spans(s)
    if len(p.labels) != len(spans):
        return False
    for (a, b), lab in zip(spans, p.labels):
        length = b - a
        if length > d - 1 or not isinstance(lab, tuple) or len(lab) != length - 1:
            return False
        if list(lab) != sorted(set(lab)) or any(not 1 <= x <= d - 2 for x in lab):
            return False
    return True


def _is_composition(lab, total, parts):
    return (isinstance(lab, tuple) and len(lab) == parts
            and all(isinstance(x, int) and x >= 0 for x in lab) and sum(lab) == total)


def in_labeled_Q(p: DescentLabeledPath, d: int) -> bool:
    check_d(d)
    s = p.base.steps
    if not s or "H" in s:
        return False
    spans = descent_spans(s)
    if len(p.labels) != len(spans) or p.labels[-1] is not None:
        return False
    return all(_is_composition(lab, b - a - 1, d - 1)
               for (a, b), lab in zip(spans[:-1], p.labels[:-1]))


# -- enumeration -----------------------------------------------------------

def _sorted_paths(strings):
    return [LatticePath(s) for s in sorted(strings, key=step_key)]


def enumerate_S(d: int, n: int, k: int, limit: int | None = DEFAULT_GUARD) -> list[LatticePath]:
    """Paths in S_d with semilength (n-k)(d-1)+k+1 and exactly k up steps."""
    check_d(d)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    m = d - 1
    guard = Guard(limit)
    n_h = (n - k) * m + 1
    out: list[str] = []
    buf: list[str] = []
    opened: list[int] = []  # H count seen when each open U was placed

    def need(h_now):
        # H steps still required to close every open U legally
        total = 0
        base = h_now
        for h0 in reversed(opened):
            inside = base - h0
            extra = 1 - inside if inside < 1 else (1 - inside) % m
            total += extra
            base += extra
        return total

    def rec(ups_left, h_left, h_now):
        if ups_left == 0 and h_left == 0 and not opened:
            guard.tick()
            out.append("".join(buf))
            return
        if need(h_now) > h_left:
            return
        if ups_left:
            buf.append("U")
            opened.append(h_now)
            rec(ups_left - 1, h_left, h_now)
            opened.pop()
            buf.pop()
        if opened:
            inside = h_now - opened[-1]
            if inside >= 1 and (inside - 1) % m == 0:
                h0 = opened.pop()
                buf.append("D")
                rec(ups_left, h_left, h_now)
                buf.pop()
                opened.append(h0)
        if h_left:
            buf.append("H")
            rec(ups_left, h_left - 1, h_now + 1)
            buf.pop()

    rec(k, n_h, 0)
    return _sorted_paths(out)


def _dyck_by_runs(semilength, ascent_ok, n_ascents, guard):
    """Dyck paths built ascent by ascent; ``ascent_ok(a)`` filters ascent lengths."""
    out = []
    buf = []

    def rec(height, ups_left, asc_left):
        if ups_left == 0:
            if height == 0 and asc_left == 0:
                guard.tick()
                out.append("".join(buf))
            return
        if asc_left == 0 or asc_left > ups_left:
            return
        for a in range(1, ups_left + 1):
            if not ascent_ok(a):
                continue
            top = height + a
            last = ups_left == a
            lo = top if last else 1
            for b in range(lo, top + 1):
                buf.append("U" * a + "D" * b)
                rec(top - b, ups_left - a, asc_left - 1)
                buf.pop()

    rec(0, semilength, n_ascents)
    return out


def enumerate_Q(d: int, m: int, peaks: int, limit: int | None = DEFAULT_GUARD) -> list[LatticePath]:
    """Paths in Q_d with semilength ``m`` and ``peaks`` peaks."""
    check_d(d)
    if m < 1 or peaks < 1:
        return []
    step = d - 1
    return _sorted_paths(_dyck_by_runs(m, lambda a: (a - 1) % step == 0, peaks, Guard(limit)))


def enumerate_dyck(m: int, limit: int | None = DEFAULT_GUARD) -> list[LatticePath]:
    """All Dyck paths of semilength ``m`` (the empty path when m = 0)."""
    if m == 0:
        return [LatticePath("")]
    guard = Guard(limit)
    out = []
    for p in range(1, m + 1):
        out.extend(_dyck_by_runs(m, lambda a: True, p, guard))
    return _sorted_paths(out)


def enumerate_labeled_S(d: int, n: int, k: int,
                        limit: int | None = DEFAULT_GUARD) -> list[DescentLabeledPath]:
    """Paths in ~S_d with semilength n and exactly k occurrences of H and DD."""
    check_d(d)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    guard = Guard(limit)
    bases: list[str] = []
    buf: list[str] = []
    width = 2 * n

    def rec(x, height, hdd, run):
        # run: length of the D-run ending at the current position
        if x == width:
            if height == 0 and hdd == k:
                bases.append("".join(buf))
            return
        left = width - x
        if height + 1 <= left - 1:
            buf.append("U")
            rec(x + 1, height + 1, hdd, 0)
            buf.pop()
        if height >= 1 and run < d - 1:
            extra = 1 if run >= 1 else 0
            if hdd + extra <= k:
                buf.append("D")
                rec(x + 1, height - 1, hdd + extra, run + 1)
                buf.pop()
        if left >= 2 + height and hdd < k:
            buf.append("H")
            rec(x + 2, height, hdd + 1, 0)
            buf.pop()

    rec(0, 0, 0, 0)
    out = []
    for s in sorted(bases, key=step_key):
        choices = [subsets(d - 2, b - a - 1) for a, b in descent_spans(s)]
        base = LatticePath(s)
        for labs in product(*choices):
            guard.tick()
            out.append(DescentLabeledPath(base, tuple(labs)))
    return out


def enumerate_labeled_Q(d: int, n: int, k: int,
                        limit: int | None = DEFAULT_GUARD) -> list[DescentLabeledPath]:
    """Paths in ~Q_d with semilength n+1 and exactly k instances of UU."""
    check_d(d)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    guard = Guard(limit)
    m = n + 1
    # every U is followed by U or D, so UU count + peaks = semilength
    bases = _dyck_by_runs(m, lambda a: True, m - k, Guard(limit))
    out = []
    for s in sorted(bases, key=step_key):
        spans = descent_spans(s)
        choices = [compositions(b - a - 1, d - 1) for a, b in spans[:-1]] + [[None]]
        base = LatticePath(s)
        for labs in product(*choices):
            guard.tick()
            out.append(DescentLabeledPath(base, tuple(labs)))
    return out


# -- text forms ------------------------------------------------------------

def _forced_subset(length, d):
    opts = subsets(d - 2, length - 1)
    return opts[0] if len(opts) == 1 else None


def format_labeled_S(p: DescentLabeledPath, d: int) -> str:
    s = p.base.steps
    out = []
    prev = 0
    for (a, b), lab in zip(descent_spans(s), p.labels):
        out.append(s[prev:b])
        if _forced_subset(b - a, d) is None:
            out.append("{" + ",".join(map(str, lab)) + "}")
        prev = b
    out.append(s[prev:])
    return "".join(out)


def format_labeled_Q(p: DescentLabeledPath, d: int) -> str:
    s = p.base.steps
    out = []
    prev = 0
    for (a, b), lab in zip(descent_spans(s), p.labels):
        out.append(s[prev:b])
        if lab is not None and d > 2:
            out.append("(" + ",".join(map(str, lab)) + ")")
        prev = b
    out.append(s[prev:])
    return "".join(out)


_LABELED = re.compile(r"([UDH]+)|\{([\d,\s]*)\}|\(([\d,\s]*)\)|(\S)")


def _split_labeled(text: str, open_char: str):
    """Steps and {descent-end position: label} from labelled text."""
    steps = []
    labels = {}
    for m in _LABELED.finditer(text.strip()):
        if m.group(1):
            steps.append(m.group(1))
            continue
        if m.group(4):
            raise PathError(f"unexpected {m.group(4)!r} in {text!r}")
        body = m.group(2) if m.group(2) is not None else m.group(3)
        if (m.group(2) is not None) != (open_char == "{"):
            raise PathError(f"wrong label bracket in {text!r}")
        pos = sum(map(len, steps))
        if not steps or steps[-1][-1] != "D":
            raise PathError(f"label not attached to a descent in {text!r}")
        if pos in labels:
            raise PathError(f"two labels on one descent in {text!r}")
        body = body.replace(" ", "")
        labels[pos] = tuple(int(x) for x in body.split(",")) if body else ()
    return "".join(steps), labels


def parse_labeled_S(text: str, d: int) -> DescentLabeledPath:
    check_d(d)
    s, given = _split_labeled(text, "{")
    base = LatticePath(s)
    labs = []
    for a, b in descent_spans(s):
        if b in given:
            labs.append(given.pop(b))
        else:
            forced = _forced_subset(b - a, d)
            if forced is None:
                raise PathError(f"descent at {a} of {text!r} needs a label")
            labs.append(forced)
    if given:
        raise PathError(f"label inside a descent in {text!r}")
    p = DescentLabeledPath(base, tuple(labs))
    if not in_labeled_S(p, d):
        raise PathError(f"{text!r} is not in ~S_{d}")
    return p


def parse_labeled_Q(text: str, d: int) -> DescentLabeledPath:
    check_d(d)
    s, given = _split_labeled(text, "(")
    base = LatticePath(s)
    spans = descent_spans(s)
    labs = []
    for i, (a, b) in enumerate(spans):
        if i == len(spans) - 1:
            if b in given:
                raise PathError(f"the last descent of {text!r} must be unlabelled")
            labs.append(None)
        elif b in given:
            labs.append(given.pop(b))
        elif d == 2:
            labs.append((b - a - 1,))
        elif b - a == 1:
            labs.append((0,) * (d - 1))
        else:
            raise PathError(f"descent at {a} of {text!r} needs a label")
    if given:
        raise PathError(f"label inside a descent in {text!r}")
    p = DescentLabeledPath(base, tuple(labs))
    if not in_labeled_Q(p, d):
        raise PathError(f"{text!r} is not in ~Q_{d}")
    return p
