"""Exact values of the generalized Narayana numbers N_d(n,k) and Catalan numbers C_d(n).

Three independent routes are provided:

* ``narayana`` -- the closed form
  ``N_d(n,k) = 1/(n+1) * C(n+1, k+1) * C(n + (n-k)(d-2) + 1, k)``;
* ``series_narayana`` -- truncated fixed-point iteration of the functional
  equation ``A = (1 + xyA)(1 + xA(1 + xyA)^(d-2))`` for the bivariate
  generating function;
* ``lagrange_narayana`` -- coefficient extraction from ``Phi(t)^(n+1)`` with
  ``Phi(t) = (1+t)(y + t(1+t)^(d-2))``.

Everything is plain Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from ._combinat import check_d

__all__ = [
    "BivariateSeriesTable",
    "binomial",
    "narayana",
    "catalan",
    "narayana_row",
    "series_narayana",
    "series_catalan",
    "lagrange_narayana",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def narayana(d: int, n: int, k: int) -> int:
    check_d(d)
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be nonnegative, got n={n}, k={k}")
    if k > n:
        return 0
    num = binomial(n + 1, k + 1) * binomial(n + (n - k) * (d - 2) + 1, k)
    q, r = divmod(num, n + 1)
    assert r == 0, f"inexact division for N_{d}({n},{k})"
    return q


def narayana_row(d: int, n: int) -> list[int]:
    return [narayana(d, n, k) for k in range(n + 1)]


def catalan(d: int, n: int) -> int:
    return sum(narayana_row(d, n))


# -- truncated power series ------------------------------------------------

@dataclass(frozen=True)
class BivariateSeriesTable:
    """Coefficients ``coeff[n][k]`` of A_d(x, y) for ``n <= max_n``.

    Rows have length ``max_n + 1``; entries with ``k > n`` are zero.
    """

    d: int
    max_n: int
    coeff: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> list[int]:
        return list(self.coeff[n][: n + 1])

    def univariate(self) -> list[int]:
        """Specialization at y = 1."""
        return [sum(r) for r in self.coeff]


def _bmul(a, b, size):
    out = [[0] * size for _ in range(size)]
    for i, ra in enumerate(a):
        for j, rb in enumerate(b[: size - i]):
            orow = out[i + j]
            for p, ca in enumerate(ra):
                if not ca:
                    continue
                for q, cb in enumerate(rb[: size - p]):
                    if cb:
                        orow[p + q] += ca * cb
    return out


def _badd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _bone(size):
    one = [[0] * size for _ in range(size)]
    one[0][0] = 1
    return one


def _bshift(a, dx, dy, size):
    """Multiply by x^dx y^dy and truncate."""
    out = [[0] * size for _ in range(size)]
    for i in range(size - dx):
        for j in range(size - dy):
            out[i + dx][j + dy] = a[i][j]
    return out


def series_narayana(d: int, max_n: int) -> BivariateSeriesTable:
    """Iterate the functional equation from A = 1 until the truncation is stable."""
    check_d(d)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    size = max_n + 1
    one = _bone(size)
    a = one
    for _ in range(size + 2):
        b = _badd(one, _bshift(a, 1, 1, size))  # 1 + xyA
        p = one
        for _ in range(d - 2):
            p = _bmul(p, b, size)
        inner = _badd(one, _bshift(_bmul(a, p, size), 1, 0, size))
        new = _bmul(b, inner, size)
        if new == a:
            break
        a = new
    else:  # pragma: no cover - each pass fixes one more x-degree
        raise RuntimeError("fixed-point iteration did not stabilize")
    return BivariateSeriesTable(d, max_n, tuple(tuple(r) for r in a))


def _umul(a, b, size):
    out = [0] * size
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b[: size - i]):
                out[i + j] += ca * cb
    return out


def series_catalan(d: int, max_n: int) -> list[int]:
    """Coefficients of u = (1 + xu)(1 + xu(1 + xu)^(d-2)) up to x^max_n."""
    check_d(d)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    size = max_n + 1
    one = [1] + [0] * max_n
    u = one
    for _ in range(size + 2):
        xu = [0] + u[:-1]
        b = [x + y for x, y in zip(one, xu)]
        p = one
        for _ in range(d - 2):
            p = _umul(p, b, size)
        xup = [0] + _umul(u, p, size)[:-1]
        new = _umul(b, [x + y for x, y in zip(one, xup)], size)
        if new == u:
            break
        u = new
    else:  # pragma: no cover
        raise RuntimeError("fixed-point iteration did not stabilize")
    return u


# -- Lagrange inversion ----------------------------------------------------

@lru_cache(maxsize=None)
def _phi_power_tn(d: int, n: int) -> tuple[int, ...]:
    """[t^n] Phi(t)^(n+1) as a polynomial in y (index = y-degree).

    Phi(t) = (1 + t)(y + t(1+t)^(d-2)) is expanded as a dict keyed by
    (t-degree, y-degree); powers are truncated above t^n.
    """
    phi: dict[tuple[int, int], int] = {}
    # (1+t) * y
    phi[(0, 1)] = 1
    phi[(1, 1)] = 1
    # (1+t)^(d-1) * t
    for i in range(d):
        phi[(i + 1, 0)] = phi.get((i + 1, 0), 0) + comb(d - 1, i)

    power: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(n + 1):
        nxt: dict[tuple[int, int], int] = {}
        for (ta, ya), ca in power.items():
            for (tb, yb), cb in phi.items():
                t = ta + tb
                if t > n:
                    continue
                key = (t, ya + yb)
                nxt[key] = nxt.get(key, 0) + ca * cb
        power = nxt
    coeffs = [0] * (n + 2)
    for (t, y), c in power.items():
        if t == n:
            coeffs[y] += c
    return tuple(coeffs)


def lagrange_narayana(d: int, n: int, k: int) -> int:
    """[x^(n+1)][y^(k+1)] v where v = x Phi(v), via (1/(n+1)) [y^(k+1)][t^n] Phi(t)^(n+1)."""
    check_d(d)
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be nonnegative, got n={n}, k={k}")
    if k > n:
        return 0
    q, r = divmod(_phi_power_tn(d, n)[k + 1], n + 1)
    assert r == 0
    return q
