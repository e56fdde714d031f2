"""Exhaustive verification sweeps and the report they produce.

Three suites:

* ``counts`` -- every family, enumerated under its parameter map, has
  narayana(d, n, k) members;
* ``bijections`` -- every map and inverse roundtrips, lands in its target
  family, transports statistics, and hits the whole target; plus fixed
  anchor values and the two injections between arities;
* ``identities`` -- numeric identities of the closed form.

The default ranges keep every enumerated cell at or below 20000 objects.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from . import bijections as bj
from ._combinat import GuardExceeded
from .families import FAMILIES, get_family
from .fpaths import FPathStats, fpath_stats, parse_fpath
from .monomials import enumerate_monomials, parse, stats, to_text
from .numbers import lagrange_narayana, narayana, series_narayana
from .paths import LatticePath, enumerate_dyck, parse_labeled_Q, stats_path
from .permutations import decreasing_runs
from .trees import OrderedTree, format_labeled_tree, tree_stats

__all__ = [
    "Cell",
    "VerificationReport",
    "DEFAULT_N_MAX",
    "CELL_LIMIT",
    "verify_counts",
    "verify_bijections",
    "verify_identities",
    "verify_all",
]

# largest n per arity with every cell of rows 0..n at most CELL_LIMIT
DEFAULT_N_MAX = {2: 10, 3: 8, 4: 7, 5: 7}
CELL_LIMIT = 20_000


@dataclass
class Cell:
    check: str
    d: int | None
    n: int | None
    k: int | None
    expected: Any
    actual: Any
    passed: bool
    skipped: bool = False
    detail: str = ""


@dataclass
class VerificationReport:
    cells: list[Cell] = field(default_factory=list)
    header: dict = field(default_factory=dict)

    def add(self, check, d, n, k, expected, actual, passed=None, detail="", skipped=False):
        if passed is None:
            passed = expected == actual
        self.cells.append(Cell(check, d, n, k, expected, actual, bool(passed) or skipped,
                               skipped, detail))

    def extend(self, other: "VerificationReport"):
        self.cells.extend(other.cells)
        self.header.update(other.header)

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.cells),
            "failed": sum(1 for c in self.cells if not c.passed),
            "skipped": sum(1 for c in self.cells if c.skipped),
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.passed]

    def to_jsonl(self) -> str:
        lines = [json.dumps({"header": self.header, "summary": self.summary})]
        lines.extend(json.dumps(asdict(c)) for c in self.cells)
        return "\n".join(lines) + "\n"

    def summary_table(self) -> str:
        groups: dict[str, list[int]] = {}
        for c in self.cells:
            g = groups.setdefault(c.check.split(":")[0], [0, 0, 0])
            g[0] += 1
            g[1] += not c.passed
            g[2] += c.skipped
        width = max([len(k) for k in groups] + [5])
        rows = [f"{'check':<{width}}  {'cells':>6}  {'failed':>6}  {'skipped':>7}"]
        for name, (tot, bad, skip) in groups.items():
            rows.append(f"{name:<{width}}  {tot:>6}  {bad:>6}  {skip:>7}")
        s = self.summary
        rows.append(f"{'total':<{width}}  {s['total']:>6}  {s['failed']:>6}  {s['skipped']:>7}")
        for c in self.failures()[:20]:
            rows.append(f"FAIL {c.check} d={c.d} n={c.n} k={c.k}: "
                        f"expected {c.expected}, got {c.actual} {c.detail}".rstrip())
        return "\n".join(rows)


def _cells(d_range, n_max):
    for d in d_range:
        top = n_max if n_max is not None else DEFAULT_N_MAX.get(d, 6)
        for n in range(top + 1):
            for k in range(n + 1):
                yield d, n, k


# -- counts ------------------------------------------------------------------

def verify_counts(d_range: Iterable[int] = (2, 3, 4, 5), n_max: int | None = None,
                  families: Iterable[str] | None = None,
                  cell_limit: int = CELL_LIMIT) -> VerificationReport:
    """Compare enumeration sizes with narayana(d, n, k).

    Cells above ``cell_limit`` or that trip the enumeration guard are
    recorded as skipped.
    """
    names = list(families) if families is not None else list(FAMILIES)
    report = VerificationReport(header={"counts": {"d": list(d_range), "n_max": n_max,
                                                   "cell_limit": cell_limit}})
    for d, n, k in _cells(d_range, n_max):
        expected = narayana(d, n, k)
        for name in names:
            fam = get_family(name)
            check = f"count:{name}"
            if expected > cell_limit:
                report.add(check, d, n, k, expected, None, skipped=True, detail="above cell limit")
                continue
            try:
                objs = fam.enumerate(d, n, k, cell_limit)
            except GuardExceeded:
                report.add(check, d, n, k, expected, None, skipped=True, detail="guard")
                continue
            bad = next((o for o in objs if not fam.member(o, d)), None)
            detail = "" if bad is None else f"non-member {fam.format(bad, d)}"
            report.add(check, d, n, k, expected, len(objs),
                       passed=len(objs) == expected and bad is None, detail=detail)
    return report


# -- bijections --------------------------------------------------------------

def _transport_checks(d, n, k):
    """Expected statistics on each image, keyed by map name."""
    reduced = (n - k) * (d - 1) + k + 1

    def path(attrs, want):
        def check(p):
            st = stats_path(p)
            return tuple(getattr(st, a) for a in attrs) == want
        return check

    def tree(want):
        def check(t):
            st = tree_stats(t)
            return (st.edges, st.internal_nodes, st.leaves) == want
        return check

    return {
        "f1": path(("semilength", "up_count"), (reduced, k)),
        "f2": tree((reduced, k + 1, reduced - k)),
        "f3": path(("semilength", "peaks"), (reduced, k + 1)),
        "f4": lambda w: (len(w), len(decreasing_runs(w))) == (reduced, k + 1),
        "f5": path(("semilength", "hdd"), (n, k)),
        "f6": None,  # height depends on the monomial, checked inline
        "f7": path(("semilength", "uu_count"), (n + 1, k)),
        "f8": lambda t: tree((n + 1, n + 1 - k, k + 1))(t.tree),
    }


def _chain(m):
    """Images of m along every edge, keyed by map name, with their sources."""
    t = bj.f2(m)
    q = bj.f3(t)
    f = bj.f6(m)
    lq = bj.f7(f)
    return {
        "f1": (m, bj.f1(m)),
        "f2": (m, t),
        "f3": (t, q),
        "f4": (q, bj.f4(q)),
        "f5": (m, bj.f5(m)),
        "f6": (m, f),
        "f7": (f, lq),
        "f8": (lq, bj.f8(lq)),
    }


_EDGE = {
    "f1": ("monomials", "schroder", bj.f1_inv),
    "f2": ("monomials", "trees", bj.f2_inv),
    "f3": ("trees", "dyck", bj.f3_inv),
    "f4": ("dyck", "perms", bj.f4_inv),
    "f5": ("monomials", "lschroder", bj.f5_inv),
    "f6": ("monomials", "fpaths", bj.f6_inv),
    "f7": ("fpaths", "ldyck", bj.f7_inv),
    "f8": ("ldyck", "ltrees", bj.f8_inv),
}


def _describe(obj, family, d):
    try:
        return FAMILIES[family].format(obj, d)
    except Exception:  # noqa: BLE001 - best effort for a reproducer string
        return repr(obj)


def _sweep_cell(report, d, n, k, cell_limit):
    expected = narayana(d, n, k)
    if expected > cell_limit:
        for name in _EDGE:
            report.add(f"bijection:{name}", d, n, k, expected, None, skipped=True,
                       detail="above cell limit")
        return
    ms = enumerate_monomials(d, n, k, cell_limit)
    transport = _transport_checks(d, n, k)
    good = {name: 0 for name in _EDGE}
    first_bad: dict[str, str] = {}
    images: dict[str, set] = {name: set() for name in _EDGE}
    for m in ms:
        lofi = stats(m).lofi
        for name, (src, img) in _chain(m).items():
            src_fam, dst_fam, inv = _EDGE[name]
            images[name].add(img)
            ok = FAMILIES[dst_fam].member(img, d)
            ok = ok and inv(img, d) == src
            if name == "f6":
                ok = ok and fpath_stats(img) == FPathStats(n, k, lofi)
            else:
                ok = ok and transport[name](img)
            if ok:
                good[name] += 1
            elif name not in first_bad:
                first_bad[name] = (f"{to_text(m)} -> {_describe(img, dst_fam, d)}")
    for name, (src_fam, dst_fam, _) in _EDGE.items():
        report.add(f"bijection:{name}", d, n, k, len(ms), good[name],
                   detail=first_bad.get(name, ""))
        target = set(FAMILIES[dst_fam].enumerate(d, n, k, cell_limit))
        report.add(f"image:{name}", d, n, k, len(target), len(images[name]),
                   passed=images[name] == target)


def _anchor_cells(report):
    def add(label, expected, actual):
        report.add(f"anchor:{label}", 3, None, None, expected, actual)

    add("f1", "UHUUHDDHDHH", str(bj.f1(parse("L(a1L(L(a2))a3)a4a5", 3))))
    add("f2_inv", "L(L(a1)a2L(a3a4a5))",
        to_text(bj.f2_inv(OrderedTree((1, 3, 1, 0, 0, 3, 0, 0, 0)), 3)))
    add("f4", "421365", str(bj.f4(LatticePath("UUUDDUDDUUDD"))))
    add("f6", "(0,1) (1,1)[0,0] (0,1) (0,1) (4,1)[1,2] (0,1)",
        FAMILIES["fpaths"].format(bj.f6(parse("L(a1L(a2a3a4)L(L(a5)))", 3)), 3))
    add("f7", "UUD(0,0)UUUDDDD(1,2)UUDD",
        FAMILIES["ldyck"].format(
            bj.f7(parse_fpath("(0,1) (1,1)[0,0] (0,1) (0,1) (4,1)[1,2] (0,1)", 3)), 3))
    pairs = [
        ("UD(0,0)UD(0,0)UD", "1 1 1 0;(0,0);(0,0)"),
        ("UD(0,0)UUDD", "2 0 1 0;(0,0)"),
        ("UUD(0,0)UDD", "2 1 0 0;(0,0)"),
        ("UUDD(1,0)UD", "1 2 0 0;(1,0)"),
        ("UUDD(0,1)UD", "1 2 0 0;(0,1)"),
        ("UUUDDD", "3 0 0 0"),
    ]
    for i, (q, t) in enumerate(pairs, 1):
        add(f"f8_{i}", t, format_labeled_tree(bj.f8(parse_labeled_Q(q, 3)), 3))


def _injection_cells(report, d_range, n_max):
    for d in d_range:
        if d == 2:
            continue
        top = n_max if n_max is not None else min(DEFAULT_N_MAX.get(d, 6), 7)
        for n in range(top + 1):
            for k in range(n + 1):
                src = enumerate_monomials(2, n, k)
                img = {bj.inject_2_to_d(m, d) for m in src}
                ok = len(img) == len(src) and all(
                    (stats(x).topt, stats(x).lopt) == (n, k) for x in img)
                report.add("injection:2_to_d", d, n, k, len(src), len(img), passed=ok)
                if narayana(d, n, k) > CELL_LIMIT:
                    continue
                src = enumerate_monomials(d, n, k)
                img = {bj.reparse_d_to_2(m) for m in src}
                target = ((n - k) * (d - 1) + k, k)
                ok = len(img) == len(src) and all(
                    (stats(x).topt, stats(x).lopt) == target for x in img)
                report.add("injection:d_to_2", d, n, k, len(src), len(img), passed=ok)


def verify_bijections(d_range: Iterable[int] = (2, 3, 4, 5), n_max: int | None = None,
                      cell_limit: int = CELL_LIMIT) -> VerificationReport:
    d_range = list(d_range)
    report = VerificationReport(header={"bijections": {"d": d_range, "n_max": n_max,
                                                       "cell_limit": cell_limit}})
    for d, n, k in _cells(d_range, n_max):
        _sweep_cell(report, d, n, k, cell_limit)
    _anchor_cells(report)
    _injection_cells(report, d_range, n_max)
    return report


# -- identities --------------------------------------------------------------

def verify_identities(d_max: int = 6, n_max: int = 10, agreement_n_max: int = 12,
                      symmetry_n_max: int = 12, dyck_n_max: int = 8) -> VerificationReport:
    report = VerificationReport(header={"identities": {
        "d_max": d_max, "n_max": n_max, "agreement_n_max": agreement_n_max,
        "symmetry_n_max": symmetry_n_max, "dyck_n_max": dyck_n_max}})
    for d in range(2, d_max + 1):
        for n in range(n_max + 1):
            for k in range(n + 1):
                lo = narayana(2, n, k)
                mid = narayana(d, n, k)
                hi = narayana(2, (n - k) * (d - 1) + k, k)
                report.add("sandwich", d, n, k, (lo, hi), mid, passed=lo <= mid <= hi)
    for n in range(symmetry_n_max + 1):
        for k in range(n + 1):
            report.add("symmetry", 2, n, k, narayana(2, n, n - k), narayana(2, n, k))
    for d in range(2, d_max + 1):
        table = series_narayana(d, agreement_n_max)
        for n in range(agreement_n_max + 1):
            for k in range(n + 1):
                f = narayana(d, n, k)
                s = table.coeff[n][k]
                g = lagrange_narayana(d, n, k)
                report.add("agreement", d, n, k, f, (s, g), passed=f == s == g)
    for n in range(dyck_n_max + 1):
        counts = [0] * (n + 1)
        for p in enumerate_dyck(n + 1):
            counts[stats_path(p).uu_count] += 1
        for k in range(n + 1):
            report.add("dyck_uu", 2, n, k, narayana(2, n, k), counts[k])
    return report


def verify_all(d_max: int | None = None, n_max: int | None = None) -> VerificationReport:
    d_range = list(range(2, (d_max or 5) + 1))
    report = verify_counts(d_range, n_max)
    report.extend(verify_bijections(d_range, n_max))
    report.extend(verify_identities(d_max=max(6, d_max or 6)))
    return report
