"""The eight bijections between operator monomials and the path, tree and
permutation families, their inverses, and two monomial injections.

Every map checks that its input lies in the family it is defined on and
raises ``ValueError`` otherwise.  Route (all maps go left to right)::

    monomials --f1--> S_d
    monomials --f2--> T_d --f3--> Q_d --f4--> P_d
    monomials --f5--> ~S_d
    monomials --f6--> F_d --f7--> ~Q_d --f8--> ~T_d
"""

from __future__ import annotations

from .fpaths import FPath, height, in_F_d
from .monomials import LEAF, Lin, Monomial, lofi
from .paths import (
    DescentLabeledPath,
    LatticePath,
    descent_spans,
    in_labeled_Q,
    in_labeled_S,
    in_Q_d,
    in_S_d,
    matching_pairs,
)
from .permutations import Permutation, in_P_d
from .trees import LabeledOrderedTree, OrderedTree, in_labeled_T, in_T_d

__all__ = [
    "f1", "f1_inv",
    "f2", "f2_inv",
    "f3", "f3_inv",
    "f4", "f4_inv",
    "f5", "f5_inv",
    "f6", "f6_inv",
    "f7", "f7_inv",
    "f8", "f8_inv",
    "inject_2_to_d",
    "reparse_d_to_2",
]


def _infer_d(labels, default=2):
    for lab in labels:
        if lab is not None:
            return len(lab) + 1
    return default


# -- f1: monomials -> S_d ----------------------------------------------------

def f1(m: Monomial) -> LatticePath:
    """L( -> U, indeterminate -> H, ) -> D."""
    out = []

    def walk(factors):
        for f in factors:
            if f is LEAF:
                out.append("H")
            else:
                out.append("U")
                walk(f.factors)
                out.append("D")

    walk(m.factors)
    return LatticePath("".join(out))


def f1_inv(p: LatticePath, d: int) -> Monomial:
    if not in_S_d(p, d):
        raise ValueError(f"{p} is not in S_{d}")
    stack: list[list] = [[]]
    for c in p.steps:
        if c == "H":
            stack[-1].append(LEAF)
        elif c == "U":
            stack.append([])
        else:
            inner = stack.pop()
            stack[-1].append(Lin(tuple(inner)))
    return Monomial(d, tuple(stack[0]))


# -- f2: monomials -> T_d ----------------------------------------------------

def _encode(factors, out):
    out.append(len(factors))
    for f in factors:
        if f is LEAF:
            out.append(0)
        else:
            _encode(f.factors, out)


def f2(m: Monomial) -> OrderedTree:
    """The root has one child per factor; L(M') becomes the subtree f2(M')."""
    out: list[int] = []
    _encode(m.factors, out)
    return OrderedTree(tuple(out))


def f2_inv(t: OrderedTree, d: int) -> Monomial:
    if not in_T_d(t, d):
        raise ValueError(f"{t} is not in T_{d}")
    seq = t.preorder_outdegrees
    pos = 0

    def node():
        # factors of the product rooted at seq[pos]
        nonlocal pos
        j = seq[pos]
        pos += 1
        factors = []
        for _ in range(j):
            if seq[pos] == 0:
                pos += 1
                factors.append(LEAF)
            else:
                factors.append(Lin(node()))
        return tuple(factors)

    return Monomial(d, node())


# -- f3: T_d -> Q_d ----------------------------------------------------------

def _outdegrees_to_path(seq) -> str:
    return "".join("U" * j + "D" for j in seq)


def f3(t: OrderedTree) -> LatticePath:
    """Preorder outdegrees (j1, ..., j_{n-1}, 0) -> U^j1 D ... U^j_{n-1} D."""
    if not any(t.preorder_outdegrees):
        raise ValueError("a tree with no internal node has no image")
    return LatticePath(_outdegrees_to_path(t.preorder_outdegrees[:-1]))


def _path_to_outdegrees(s: str) -> tuple[int, ...]:
    seq = []
    run = 0
    for c in s:
        if c == "U":
            run += 1
        else:
            seq.append(run)
            run = 0
    return tuple(seq)


def f3_inv(p: LatticePath, d: int) -> OrderedTree:
    if not in_Q_d(p, d):
        raise ValueError(f"{p} is not in Q_{d}")
    return OrderedTree(_path_to_outdegrees(p.steps) + (0,))


# -- f4: Q_d -> P_d ----------------------------------------------------------

def f4(p: LatticePath) -> Permutation:
    """P_i = j when the i-th U is matched by the j-th D."""
    s = p.steps
    if not s or "H" in s:
        raise ValueError(f"{s!r} is not a nonempty Dyck path")
    up_no = {}
    down_no = {}
    for i, c in enumerate(s):
        (up_no if c == "U" else down_no)[i] = len(up_no if c == "U" else down_no) + 1
    word = [0] * len(up_no)
    for u, dn in matching_pairs(s).items():
        word[up_no[u] - 1] = down_no[dn]
    return Permutation(tuple(word))


def f4_inv(q: Permutation, d: int = 2) -> LatticePath:
    if not in_P_d(q, d):
        raise ValueError(f"{q} is not in P_{d}")
    n = len(q)
    up_of = [0] * (n + 1)  # up_of[j] = i with P_i = j
    for i, j in enumerate(q.word, 1):
        up_of[j] = i
    out = []
    stack = []
    emitted = 0
    for j in range(1, n + 1):
        u = up_of[j]
        while emitted < u:
            emitted += 1
            stack.append(emitted)
            out.append("U")
        if not stack or stack[-1] != u:  # pragma: no cover - excluded by the 231 check
            raise ValueError(f"{q} contains 231")
        stack.pop()
        out.append("D")
    return LatticePath("".join(out))


# -- f5: monomials -> ~S_d ---------------------------------------------------

def _f5(factors, d, steps, labels):
    """Append f5 of the monomial with these factors to ``steps``/``labels``."""
    if len(factors) == 1:
        f = factors[0]
        if f is not LEAF:
            _f5(f.factors, d, steps, labels)
            steps.append("H")
        return
    split = len(factors) - (d - 1)
    _f5(factors[:split], d, steps, labels)
    tail = factors[split:]
    chosen = tuple(i for i in range(1, d - 1) if tail[i - 1] is not LEAF)
    for i in chosen:
        steps.append("U")
        _f5(tail[i - 1].factors, d, steps, labels)
    steps.append("U")
    _f5(tail[-1:], d, steps, labels)
    steps.append("D" * (len(chosen) + 1))
    labels.append(chosen)


def f5(m: Monomial) -> DescentLabeledPath:
    steps: list[str] = []
    labels: list[tuple] = []
    _f5(m.factors, m.d, steps, labels)
    return DescentLabeledPath(LatticePath("".join(steps)), tuple(labels))


def _f5_inv(s: str, labels: tuple, d: int) -> tuple:
    """Factor sequence of f5^-1; ``labels`` are the labels of the descents in ``s``."""
    if not s:
        return (LEAF,)
    if s[-1] == "H":
        return (Lin(_f5_inv(s[:-1], labels, d)),)
    label = labels[-1]
    rest = labels[:-1]
    start = len(s)
    while s[start - 1] == "D":
        start -= 1
    ell = len(s) - start
    # the U's matched by the final descent cut s into S0 U S1 ... U S_ell D^ell
    ups = sorted(u for u, dn in matching_pairs(s).items() if dn >= start)
    ends = ups[1:] + [start]
    segs = [s[: ups[0]]] + [s[u + 1: e] for u, e in zip(ups, ends)]
    # the remaining labels belong to the segments' descents, in order
    seg_labels = []
    for seg in segs:
        cnt = len(descent_spans(seg))
        seg_labels.append(rest[:cnt])
        rest = rest[cnt:]
    m0 = _f5_inv(segs[0], seg_labels[0], d)
    tail: list = [LEAF] * (d - 1)
    for j, i in enumerate(label, 1):
        tail[i - 1] = Lin(_f5_inv(segs[j], seg_labels[j], d))
    last = _f5_inv(segs[ell], seg_labels[ell], d)
    tail[-1] = last[0]
    return m0 + tuple(tail)


def f5_inv(s: DescentLabeledPath, d: int) -> Monomial:
    if not in_labeled_S(s, d):
        raise ValueError(f"{s} is not in ~S_{d}")
    return Monomial(d, _f5_inv(s.base.steps, s.labels, d))


# -- f6: monomials -> F_d ----------------------------------------------------

def _f6(factors, d, out):
    if len(factors) == 1:
        f = factors[0]
        if f is not LEAF:
            _f6(f.factors, d, out)
            out.append((0, None))
        return
    split = len(factors) - (d - 1)
    _f6(factors[:split], d, out)
    label = []
    for f in factors[split:]:
        if f is LEAF:
            label.append(0)
        else:
            out.append((0, None))
            _f6(f.factors, d, out)
            label.append(lofi((f,)))
    out.append((1 + sum(label), tuple(label)))


def f6(m: Monomial) -> FPath:
    out: list = []
    _f6(m.factors, m.d, out)
    return FPath(tuple(out))


def _f6_inv(steps: tuple, d: int) -> tuple:
    if not steps:
        return (LEAF,)
    run, label = steps[-1]
    head = steps[:-1]
    if run == 0:
        return (Lin(_f6_inv(head, d)),)
    h = height(steps)
    # height reached after each step of head, and the start of each (0,1)
    starts = []
    level = h
    for part in label:
        if part == 0:
            starts.append(None)
        else:
            y = 0
            last = None
            for pos, (r, _) in enumerate(head):
                if r == 0 and y == level:
                    last = pos
                y += 1 - r
            if last is None:
                raise ValueError("no (0,1) step at the required height")
            starts.append(last)
        level += part
    cuts = [p for p in starts if p is not None]
    if cuts != sorted(cuts):
        raise ValueError("segments out of order")
    first = cuts[0] if cuts else len(head)
    m0 = _f6_inv(head[:first], d)
    tail = []
    for i, p in enumerate(starts):
        if p is None:
            tail.append(LEAF)
            continue
        nxt = next((q for q in starts[i + 1:] if q is not None), len(head))
        tail.append(Lin(_f6_inv(head[p + 1: nxt], d)))
    return m0 + tuple(tail)


def f6_inv(f: FPath, d: int) -> Monomial:
    if not in_F_d(f, d):
        raise ValueError(f"path is not in F_{d}")
    return Monomial(d, _f6_inv(f.steps, d))


# -- f7: F_d -> ~Q_d ---------------------------------------------------------

def f7(f: FPath) -> DescentLabeledPath:
    """(l1,1)...(ln,1) -> U D^l1 ... U D^ln U D^(n+1-sum l)."""
    d = _infer_d([lab for _, lab in f.steps])
    if not in_F_d(f, d):
        raise ValueError("path is not in F_d")
    runs = f.runs()
    s = "".join("U" + "D" * r for r in runs) + "U" + "D" * (len(runs) + 1 - sum(runs))
    labels = tuple(lab for r, lab in f.steps if r) + (None,)
    return DescentLabeledPath(LatticePath(s), labels)


def f7_inv(q: DescentLabeledPath, d: int) -> FPath:
    if not in_labeled_Q(q, d):
        raise ValueError(f"{q} is not in ~Q_{d}")
    s = q.base.steps
    runs = [len(chunk) for chunk in s.split("U")[1:]]
    labels = iter(q.labels)
    steps = tuple((r, next(labels) if r else None) for r in runs[:-1])
    return FPath(steps)


# -- f8: ~Q_d -> ~T_d --------------------------------------------------------

def f8(q: DescentLabeledPath) -> LabeledOrderedTree:
    """U D^l1 ... U D^ln -> the tree with preorder outdegrees (ln, ..., l1, 0)."""
    d = _infer_d(q.labels)
    if not in_labeled_Q(q, d):
        raise ValueError(f"{q} is not in ~Q_d")
    runs = [len(chunk) for chunk in q.base.steps.split("U")[1:]]
    tree = OrderedTree(tuple(reversed(runs)) + (0,))
    return LabeledOrderedTree(tree, tuple(reversed(q.labels[:-1])))


def f8_inv(t: LabeledOrderedTree, d: int) -> DescentLabeledPath:
    """Path of the outdegrees (last 0 dropped), then reflected."""
    if not in_labeled_T(t, d):
        raise ValueError(f"{t} is not in ~T_{d}")
    forward = _outdegrees_to_path(t.tree.preorder_outdegrees[:-1])
    reflected = forward[::-1].translate(str.maketrans("UD", "DU"))
    return DescentLabeledPath(LatticePath(reflected), tuple(reversed(t.labels)) + (None,))


# -- injections between arities -----------------------------------------------

def _pad(factors, extra):
    out = [_pad_factor(factors[0], extra)]
    for f in factors[1:]:
        out.append(_pad_factor(f, extra))
        out.extend([LEAF] * extra)
    return tuple(out)


def _pad_factor(f, extra):
    return f if f is LEAF else Lin(_pad(f.factors, extra))


def inject_2_to_d(m: Monomial, d: int) -> Monomial:
    """Binary monomial -> d-ary monomial with the same topt and lopt.

    Each factor after the first in every product is followed by d-2 new
    indeterminates, turning each binary product into one d-ary product.
    """
    if m.d != 2:
        raise ValueError("expected a binary monomial")
    return Monomial(d, _pad(m.factors, d - 2))


def reparse_d_to_2(m: Monomial) -> Monomial:
    """Read the same expression with a binary operation."""
    return Monomial(2, m.factors)
