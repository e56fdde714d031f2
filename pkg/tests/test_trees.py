import pytest
from hypothesis import given, strategies as st

from dnarayana.numbers import narayana
from dnarayana.trees import (
    LabeledOrderedTree,
    OrderedTree,
    TreeError,
    enumerate_labeled_T,
    enumerate_T,
    enumerate_trees,
    format_labeled_tree,
    in_labeled_T,
    in_T_d,
    parse_labeled_tree,
    parse_tree,
    tree_stats,
)
import oracles
from reference_tables import TERNARY_TOPT2_CHAIN, TREES_T3_5


@pytest.mark.parametrize("seq,expected", [
    ((5, 0, 0, 0, 0, 0), (5, 1, 5)),
    ((1, 1, 1, 1, 1, 0), (5, 5, 1)),
    ((0,), (0, 0, 1)),
])
def test_stats(seq, expected):
    s = tree_stats(OrderedTree(seq))
    assert (s.edges, s.internal_nodes, s.leaves) == expected


@pytest.mark.parametrize("bad", [(), (1,), (0, 0), (2, 0), (1, 0, 0), (-1, 0)])
def test_invalid_words(bad):
    with pytest.raises(TreeError):
        OrderedTree(bad)


def test_listed_ternary_trees():
    assert all(in_T_d(OrderedTree(t), 3) for t in TREES_T3_5)
    got = {t.preorder_outdegrees for i in range(1, 6) for t in enumerate_T(3, 5, i)}
    assert got == set(TREES_T3_5)


def test_membership():
    assert not in_T_d(OrderedTree((0,)), 3)
    assert not in_T_d(OrderedTree((2, 0, 0)), 3)
    assert in_T_d(OrderedTree((2, 0, 0)), 2)
    assert not in_T_d(OrderedTree((1, 2, 0, 0)), 3)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_single_edge(d):
    assert [t.preorder_outdegrees for t in enumerate_T(d, 1, 1)] == [(1, 0)]


def test_labeled_ternary_three_edges():
    got = [format_labeled_tree(t, 3) for leaves in range(1, 4) for t in enumerate_labeled_T(3, 3, leaves)]
    assert sorted(got) == sorted(row[3] for row in TERNARY_TOPT2_CHAIN)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("edges", [1, 2, 3, 4, 5])
def test_oracle(d, edges):
    for i in range(edges + 1):
        got = [t.preorder_outdegrees for t in enumerate_T(d, edges, i)]
        assert got == oracles.trees(d, edges, i)
    for leaves in range(edges + 1):
        got = {(t.tree.preorder_outdegrees, t.labels) for t in enumerate_labeled_T(d, edges, leaves)}
        assert got == oracles.labeled_trees(d, edges, leaves)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_counts(d):
    for n in range(6):
        for k in range(n + 1):
            edges = (n - k) * (d - 1) + k + 1
            assert len(enumerate_T(d, edges, k + 1)) == narayana(d, n, k)
            assert len(enumerate_labeled_T(d, n + 1, k + 1)) == narayana(d, n, k)


def test_binary_labels_are_forced():
    for edges in range(1, 6):
        for leaves in range(1, edges + 1):
            plain = [t for t in enumerate_trees(edges) if t.preorder_outdegrees[0]
                     and tree_stats(t).leaves == leaves]
            assert len(enumerate_labeled_T(2, edges, leaves)) == len(plain)


def test_all_trees_catalan():
    assert [len(enumerate_trees(e)) for e in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_text_forms():
    assert str(parse_tree("5 0 0 0 0 0")) == "5 0 0 0 0 0"
    t = parse_labeled_tree("1 2 0 0;(1,0)", 3)
    assert t.labels == ((1, 0),)
    assert format_labeled_tree(t, 3) == "1 2 0 0;(1,0)"
    assert format_labeled_tree(parse_labeled_tree("1 2 0 0", 2), 2) == "1 2 0 0"


@pytest.mark.parametrize("text", ["1 2 0 0", "1 2 0 0;(0,0)", "0", "1 2 0 0;(1,0);(0,0)", "2 0 0;x"])
def test_labeled_rejects(text):
    with pytest.raises(TreeError):
        parse_labeled_tree(text, 3)


def test_labeled_membership():
    t = OrderedTree((1, 2, 0, 0))
    assert in_labeled_T(LabeledOrderedTree(t, ((0, 1),)), 3)
    assert not in_labeled_T(LabeledOrderedTree(t, ((0, 0),)), 3)
    assert not in_labeled_T(LabeledOrderedTree(OrderedTree((0,)), ()), 3)


def _random_tree(draw_sizes):
    seq = []

    def build(children):
        seq.append(len(children))
        for c in children:
            build(c)
    build(draw_sizes)
    return tuple(seq)


nested = st.recursive(st.just([]), lambda inner: st.lists(inner, max_size=4), max_leaves=12)


@given(nested)
def test_random_preorder_words(shape):
    seq = _random_tree(shape)
    t = OrderedTree(seq)
    s = tree_stats(t)
    assert s.edges == sum(seq) == len(seq) - 1
    assert s.internal_nodes + s.leaves == len(seq)
    assert parse_tree(str(t)) == t
