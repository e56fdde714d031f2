"""Ordered rooted trees stored as preorder outdegree sequences.

``T_d``: trees with at least one internal node whose nonzero outdegrees are
all 1 mod d-1.  ``~T_d``: trees with an internal root in which every other
internal node of outdegree l carries a composition of l-1 into d-1 parts.

Text forms: ``"5 0 0 0 0 0"``; labelled trees append ``;(m1,...)`` per
non-root internal node in preorder, e.g. ``"1 2 0 0;(1,0)"``.  For d = 2 the
labels are forced and left out of the text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from ._combinat import DEFAULT_GUARD, Guard, check_d, compositions

__all__ = [
    "OrderedTree",
    "LabeledOrderedTree",
    "TreeStats",
    "TreeError",
    "tree_stats",
    "in_T_d",
    "in_labeled_T",
    "enumerate_trees",
    "enumerate_T",
    "enumerate_labeled_T",
    "format_tree",
    "parse_tree",
    "format_labeled_tree",
    "parse_labeled_tree",
]


class TreeError(ValueError):
    """Not a valid preorder outdegree word, or not in the requested family."""


@dataclass(frozen=True, order=True)
class OrderedTree:
    preorder_outdegrees: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.preorder_outdegrees)
        object.__setattr__(self, "preorder_outdegrees", seq)
        if not seq:
            raise TreeError("a tree has at least one node")
        slots = 1
        for i, j in enumerate(seq):
            if not isinstance(j, int) or j < 0:
                raise TreeError(f"bad outdegree {j!r}")
            if slots == 0:
                raise TreeError(f"{seq} closes before position {i}")
            slots += j - 1
        if slots:
            raise TreeError(f"{seq} leaves {slots} children unfilled")

    def __str__(self):
        return format_tree(self)

    def __len__(self):
        return len(self.preorder_outdegrees)


@dataclass(frozen=True)
class LabeledOrderedTree:
    tree: OrderedTree
    labels: tuple  # one composition per non-root internal node, preorder

    def __str__(self):
        return format_tree(self.tree)


@dataclass(frozen=True)
class TreeStats:
    edges: int
    internal_nodes: int
    leaves: int
    outdegrees: tuple[int, ...]


def tree_stats(t: OrderedTree) -> TreeStats:
    seq = t.preorder_outdegrees
    internal = sum(1 for j in seq if j)
    return TreeStats(len(seq) - 1, internal, len(seq) - internal, seq)


def in_T_d(t: OrderedTree, d: int) -> bool:
    check_d(d)
    seq = t.preorder_outdegrees
    return any(seq) and all(j == 0 or (j - 1) % (d - 1) == 0 for j in seq)


def in_labeled_T(t: LabeledOrderedTree, d: int) -> bool:
    check_d(d)
    seq = t.tree.preorder_outdegrees
    if seq[0] == 0:
        return False
    inner = [j for j in seq[1:] if j]
    if len(inner) != len(t.labels):
        return False
    for j, lab in zip(inner, t.labels):
        if not (isinstance(lab, tuple) and len(lab) == d - 1
                and all(isinstance(x, int) and x >= 0 for x in lab) and sum(lab) == j - 1):
            return False
    return True


def _trees(edges, internal, allowed, guard):
    """Preorder words with ``edges`` edges and ``internal`` nonzero entries.

    ``allowed`` filters the nonzero outdegrees.
    """
    size = edges + 1
    out = []
    buf = []

    def rec(slots, edges_left, internal_left):
        pos = len(buf)
        left = size - pos
        if left == 0:
            if slots == 0 and edges_left == 0 and internal_left == 0:
                guard.tick()
                out.append(tuple(buf))
            return
        # every remaining node fills one slot; leaves must cover the rest
        if internal_left > left or slots > left:
            return
        if left - internal_left >= 1:
            if slots - 1 > 0 or left == 1:
                buf.append(0)
                rec(slots - 1, edges_left, internal_left)
                buf.pop()
        if internal_left:
            for j in range(1, edges_left + 1):
                if allowed(j):
                    buf.append(j)
                    rec(slots - 1 + j, edges_left - j, internal_left - 1)
                    buf.pop()

    if edges >= 0 and internal >= 0:
        rec(1, edges, internal)
    return sorted(out)


def enumerate_trees(edges: int, limit: int | None = DEFAULT_GUARD) -> list[OrderedTree]:
    """All ordered trees with ``edges`` edges."""
    guard = Guard(limit)
    out = []
    for i in range(edges + 1):
        out.extend(_trees(edges, i, lambda j: True, guard))
    return [OrderedTree(s) for s in sorted(out)]


def enumerate_T(d: int, edges: int, internal: int,
                limit: int | None = DEFAULT_GUARD) -> list[OrderedTree]:
    """Trees in T_d with the given edge and internal-node counts."""
    check_d(d)
    if internal < 1:
        return []
    seqs = _trees(edges, internal, lambda j: (j - 1) % (d - 1) == 0, Guard(limit))
    return [OrderedTree(s) for s in seqs]


def enumerate_labeled_T(d: int, edges: int, leaves: int,
                        limit: int | None = DEFAULT_GUARD) -> list[LabeledOrderedTree]:
    """Trees in ~T_d with the given edge and leaf counts."""
    check_d(d)
    guard = Guard(limit)
    if edges < 1:
        return []
    out = []
    for seq in _trees(edges, edges + 1 - leaves, lambda j: True, Guard(limit)):
        t = OrderedTree(seq)
        choices = [compositions(j - 1, d - 1) for j in seq[1:] if j]
        for labs in product(*choices):
            guard.tick()
            out.append(LabeledOrderedTree(t, tuple(labs)))
    return out


# -- text forms ------------------------------------------------------------

def format_tree(t: OrderedTree) -> str:
    return " ".join(map(str, t.preorder_outdegrees))


def parse_tree(text: str) -> OrderedTree:
    try:
        seq = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise TreeError(f"bad tree text {text!r}") from exc
    return OrderedTree(seq)


def format_labeled_tree(t: LabeledOrderedTree, d: int) -> str:
    head = format_tree(t.tree)
    if d == 2:
        return head
    return head + "".join(";(" + ",".join(map(str, lab)) + ")" for lab in t.labels)


_LABEL = re.compile(r"\s*\(([\d,\s]*)\)\s*")


def parse_labeled_tree(text: str, d: int) -> LabeledOrderedTree:
    check_d(d)
    head, *rest = text.split(";")
    t = parse_tree(head)
    inner = [j for j in t.preorder_outdegrees[1:] if j]
    if d == 2 and not rest:
        labs = tuple((j - 1,) for j in inner)
    else:
        labs = []
        for part in rest:
            m = _LABEL.fullmatch(part)
            if m is None:
                raise TreeError(f"bad label {part!r} in {text!r}")
            labs.append(tuple(int(x) for x in m.group(1).replace(" ", "").split(",") if x))
        labs = tuple(labs)
    out = LabeledOrderedTree(t, labs)
    if not in_labeled_T(out, d):
        raise TreeError(f"{text!r} is not in ~T_{d}")
    return out
