"""Registry of the nine families counted by N_d(n,k).

Each entry knows how to enumerate its members for given (d, n, k), how far
its natural size parameter sits from (n, k), and how to print, parse,
serialize and recognize its members.  The CLI and the verification sweeps
both go through this table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import bijections as bj
from . import fpaths, monomials, paths, permutations, trees

__all__ = ["Family", "FAMILIES", "BIJECTIONS", "get_family", "route", "natural_cells"]


@dataclass(frozen=True)
class Family:
    name: str
    symbol: str
    enumerate: Callable[..., list]  # (d, n, k, limit) in cell parameters
    size: Callable[[int, int, int], int]  # natural size for cell (n, k)
    size_name: str
    member: Callable[[Any, int], bool]
    format: Callable[[Any, int], str]
    parse: Callable[[str, int], Any]
    to_json: Callable[[Any], Any]
    stat: Callable[[Any, int], tuple[int, int]]  # recover cell (n, k) from a member


def _reduced(d, n, k):
    return (n - k) * (d - 1) + k + 1


def _path_json(p):
    if isinstance(p, paths.DescentLabeledPath):
        return {"steps": p.base.steps, "labels": [None if x is None else list(x) for x in p.labels]}
    return {"steps": p.steps}


def _tree_json(t):
    if isinstance(t, trees.LabeledOrderedTree):
        return {"preorder_outdegrees": list(t.tree.preorder_outdegrees),
                "labels": [list(x) for x in t.labels]}
    return {"preorder_outdegrees": list(t.preorder_outdegrees)}


def _fpath_json(f):
    return {"steps": [{"run": r, "label": None if lab is None else list(lab)} for r, lab in f.steps]}


def _unreduce(d, size, k):
    """Cell n for a reduced-family member of natural size ``size`` with
    secondary statistic k, i.e. the n with (n-k)(d-1)+k+1 = size."""
    return k + (size - 1 - k) // (d - 1)


def _monomial_stat(m, d):
    s = monomials.stats(m)
    return s.topt, s.lopt


def _schroder_stat(p, d):
    st = paths.stats_path(p)
    return _unreduce(d, st.semilength, st.up_count), st.up_count


def _tree_stat(t, d):
    st = trees.tree_stats(t)
    k = st.internal_nodes - 1
    return _unreduce(d, st.edges, k), k


def _dyck_stat(p, d):
    st = paths.stats_path(p)
    k = st.peaks - 1
    return _unreduce(d, st.semilength, k), k


def _perm_stat(p, d):
    k = len(permutations.decreasing_runs(p)) - 1
    return _unreduce(d, len(p), k), k


def _lschroder_stat(p, d):
    st = paths.stats_path(p)
    return st.semilength, st.hdd


def _fpath_stat(f, d):
    st = fpaths.fpath_stats(f)
    return st.length, st.north


def _ldyck_stat(p, d):
    st = paths.stats_path(p)
    return st.semilength - 1, st.uu_count


def _ltree_stat(t, d):
    st = trees.tree_stats(t.tree)
    return st.edges - 1, st.leaves - 1


FAMILIES: dict[str, Family] = {
    "monomials": Family(
        "monomials", "M_d",
        lambda d, n, k, limit=None: monomials.enumerate_monomials(d, n, k, limit),
        lambda d, n, k: n, "topt",
        lambda m, d: isinstance(m, monomials.Monomial) and m.d == d,
        lambda m, d: monomials.to_text(m),
        monomials.parse,
        monomials.to_json,
        _monomial_stat,
    ),
    "schroder": Family(
        "schroder", "S_d",
        lambda d, n, k, limit=None: paths.enumerate_S(d, n, k, limit),
        _reduced, "semilength",
        paths.in_S_d,
        lambda p, d: p.steps,
        lambda s, d: paths.LatticePath(s.strip()),
        _path_json,
        _schroder_stat,
    ),
    "trees": Family(
        "trees", "T_d",
        lambda d, n, k, limit=None: trees.enumerate_T(d, _reduced(d, n, k), k + 1, limit),
        _reduced, "edges",
        trees.in_T_d,
        lambda t, d: trees.format_tree(t),
        lambda s, d: trees.parse_tree(s),
        _tree_json,
        _tree_stat,
    ),
    "dyck": Family(
        "dyck", "Q_d",
        lambda d, n, k, limit=None: paths.enumerate_Q(d, _reduced(d, n, k), k + 1, limit),
        _reduced, "semilength",
        paths.in_Q_d,
        lambda p, d: p.steps,
        lambda s, d: paths.LatticePath(s.strip()),
        _path_json,
        _dyck_stat,
    ),
    "perms": Family(
        "perms", "P_d",
        lambda d, n, k, limit=None: permutations.enumerate_P(d, _reduced(d, n, k), k + 1, limit),
        _reduced, "size",
        permutations.in_P_d,
        lambda p, d: permutations.format_permutation(p),
        lambda s, d: permutations.parse_permutation(s),
        lambda p: {"word": list(p.word)},
        _perm_stat,
    ),
    "lschroder": Family(
        "lschroder", "~S_d",
        lambda d, n, k, limit=None: paths.enumerate_labeled_S(d, n, k, limit),
        lambda d, n, k: n, "semilength",
        paths.in_labeled_S,
        paths.format_labeled_S,
        paths.parse_labeled_S,
        _path_json,
        _lschroder_stat,
    ),
    "fpaths": Family(
        "fpaths", "F_d",
        lambda d, n, k, limit=None: fpaths.enumerate_F(d, n, k, limit),
        lambda d, n, k: n, "length",
        fpaths.in_F_d,
        fpaths.format_fpath,
        fpaths.parse_fpath,
        _fpath_json,
        _fpath_stat,
    ),
    "ldyck": Family(
        "ldyck", "~Q_d",
        lambda d, n, k, limit=None: paths.enumerate_labeled_Q(d, n, k, limit),
        lambda d, n, k: n + 1, "semilength",
        paths.in_labeled_Q,
        paths.format_labeled_Q,
        paths.parse_labeled_Q,
        _path_json,
        _ldyck_stat,
    ),
    "ltrees": Family(
        "ltrees", "~T_d",
        lambda d, n, k, limit=None: trees.enumerate_labeled_T(d, n + 1, k + 1, limit),
        lambda d, n, k: n + 1, "edges",
        trees.in_labeled_T,
        trees.format_labeled_tree,
        trees.parse_labeled_tree,
        _tree_json,
        _ltree_stat,
    ),
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None


def natural_cells(d: int, name: str, size: int) -> list[tuple[int, int]]:
    """Cells (n, k) whose members have natural size ``size``."""
    fam = get_family(name)
    out = []
    for n in range(size + 1):
        for k in range(n + 1):
            if fam.size(d, n, k) == size:
                out.append((n, k))
    return out


# edges of the bijection diagram: (source, target, name, forward, inverse)
BIJECTIONS = [
    ("monomials", "schroder", "f1", lambda x, d: bj.f1(x), bj.f1_inv),
    ("monomials", "trees", "f2", lambda x, d: bj.f2(x), bj.f2_inv),
    ("trees", "dyck", "f3", lambda x, d: bj.f3(x), bj.f3_inv),
    ("dyck", "perms", "f4", lambda x, d: bj.f4(x), bj.f4_inv),
    ("monomials", "lschroder", "f5", lambda x, d: bj.f5(x), bj.f5_inv),
    ("monomials", "fpaths", "f6", lambda x, d: bj.f6(x), bj.f6_inv),
    ("fpaths", "ldyck", "f7", lambda x, d: bj.f7(x), bj.f7_inv),
    ("ldyck", "ltrees", "f8", lambda x, d: bj.f8(x), bj.f8_inv),
]


def route(src: str, dst: str) -> list[tuple[str, Callable]]:
    """The unique chain of maps from ``src`` to ``dst`` in the bijection tree.

    Returns ``(label, fn)`` pairs where ``fn(obj, d)`` applies one step and the
    label is ``"f3"`` or ``"f3^-1"``.
    """
    get_family(src)
    get_family(dst)
    adj: dict[str, list] = {name: [] for name in FAMILIES}
    for a, b, label, fwd, inv in BIJECTIONS:
        adj[a].append((b, label, fwd))
        adj[b].append((a, label + "^-1", inv))
    prev: dict[str, tuple] = {src: None}
    queue = [src]
    for node in queue:
        for nxt, label, fn in adj[node]:
            if nxt not in prev:
                prev[nxt] = (node, label, fn)
                queue.append(nxt)
    steps = []
    node = dst
    while prev[node] is not None:
        node, label, fn = prev[node][0], prev[node][1], prev[node][2]
        steps.append((label, fn))
    return steps[::-1]
