"""d-ary operator monomials in associativity normal form.

A monomial is a nonempty sequence of irreducible factors.  An irreducible
factor is either an indeterminate (``LEAF``) or ``Lin(factors)``, the unary
operator L applied to another monomial.  Because the d-ary product is
associative, parentheses inside a pure product carry no information, so a
product is stored as the flat factor sequence and structural equality is
monomial equality.  Every factor sequence has length congruent to 1 mod d-1.

Text notation (parse / print)::

    Monomial      := Factor+
    Factor        := Indeterminate | "L" ["^" digits] "(" Monomial ")"
    Indeterminate := "a" digits

Printing numbers indeterminates a1, a2, ... from left to right and never
emits the ``L^k`` shorthand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from ._combinat import Guard, check_d, DEFAULT_GUARD

__all__ = [
    "LEAF",
    "Lin",
    "Monomial",
    "MonomialStats",
    "ArityError",
    "MonomialSyntaxError",
    "stats",
    "is_irreducible",
    "parse",
    "to_text",
    "to_json",
    "from_json",
    "enumerate_monomials",
    "enumerate_topt",
]


class ArityError(ValueError):
    """A factor sequence has a length not congruent to 1 mod d-1."""


class MonomialSyntaxError(SyntaxError):
    """Malformed monomial text."""


class _Leaf:
    __slots__ = ()

    def __repr__(self):
        return "LEAF"

    def __reduce__(self):
        return (_leaf, ())


def _leaf():
    return LEAF


LEAF = _Leaf()


@dataclass(frozen=True, slots=True)
class Lin:
    """L applied to the monomial whose factor sequence is ``factors``."""

    factors: tuple


Factor = Union[_Leaf, Lin]


def _check_factors(factors, d):
    if not factors:
        raise ArityError("empty factor sequence")
    if (len(factors) - 1) % (d - 1):
        raise ArityError(
            f"{len(factors)} factors in a product, expected 1 mod {d - 1}")
    for f in factors:
        if isinstance(f, Lin):
            _check_factors(f.factors, d)
        elif f is not LEAF:
            raise TypeError(f"not a factor: {f!r}")


@dataclass(frozen=True)
class Monomial:
    d: int
    factors: tuple

    def __post_init__(self):
        check_d(self.d)
        if not isinstance(self.factors, tuple):
            object.__setattr__(self, "factors", tuple(self.factors))
        _check_factors(self.factors, self.d)

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class MonomialStats:
    topt: int
    lopt: int
    deg: int
    lofi: int


def lofi(factors) -> int:
    """Number of L's enclosing the leftmost indeterminate."""
    count = 0
    f = factors[0]
    while f is not LEAF:
        count += 1
        f = f.factors[0]
    return count


def stats(m: Monomial) -> MonomialStats:
    d = m.d

    def walk(factors):
        products = (len(factors) - 1) // (d - 1)
        lopt = deg = 0
        for f in factors:
            if f is LEAF:
                deg += 1
            else:
                p, l, g = walk(f.factors)
                products += p
                lopt += 1 + l
                deg += g
        return products, lopt, deg

    products, lopt, deg = walk(m.factors)
    return MonomialStats(products + lopt, lopt, deg, lofi(m.factors))


def is_irreducible(m: Monomial) -> bool:
    return len(m.factors) == 1


# -- text form -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(L)(?:\s*\^\s*(\d+))?\s*\(|(a)(\d*)|(\))|(\S))")


def parse(text: str, d: int, allow_any_names: bool = False) -> Monomial:
    """Parse monomial notation such as ``"L(a1L^2(a2)a3)a4a5"``.

    Indeterminates must be numbered a1, a2, ... left to right unless
    ``allow_any_names`` is set, in which case subscripts are ignored.
    """
    check_d(d)
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches something
            break
        pos = m.end()
        if m.group(1):
            power = int(m.group(2)) if m.group(2) is not None else 1
            if power < 1:
                raise MonomialSyntaxError(f"L^{power} is not allowed")
            tokens.append(("L", power))
        elif m.group(3):
            if not m.group(4) and not allow_any_names:
                raise MonomialSyntaxError(f"indeterminate without subscript at {m.start(3)}")
            tokens.append(("a", int(m.group(4)) if m.group(4) else None))
        elif m.group(5):
            tokens.append((")", None))
        else:
            raise MonomialSyntaxError(f"unexpected character {m.group(6)!r} at {m.start(6)}")

    counter = [0]
    i = 0

    def parse_seq():
        nonlocal i
        factors = []
        while i < len(tokens) and tokens[i][0] != ")":
            kind, val = tokens[i]
            i += 1
            if kind == "a":
                counter[0] += 1
                if not allow_any_names and val != counter[0]:
                    raise MonomialSyntaxError(
                        f"expected a{counter[0]}, found a{val} (indeterminates must be numbered in order)")
                factors.append(LEAF)
            else:
                inner = parse_seq()
                if i >= len(tokens) or tokens[i][0] != ")":
                    raise MonomialSyntaxError("unbalanced parentheses: missing ')'")
                i += 1
                if not inner:
                    raise MonomialSyntaxError("L() has an empty argument")
                _check_arity(inner)
                f = Lin(tuple(inner))
                for _ in range(val - 1):
                    f = Lin((f,))
                factors.append(f)
        return factors

    def _check_arity(factors):
        if (len(factors) - 1) % (d - 1):
            raise ArityError(f"{len(factors)} factors in a product, expected 1 mod {d - 1}")

    factors = parse_seq()
    if i != len(tokens):
        raise MonomialSyntaxError("unbalanced parentheses: unexpected ')'")
    if not factors:
        raise MonomialSyntaxError("empty monomial")
    _check_arity(factors)
    return Monomial(d, tuple(factors))


def _emit(factors, out, counter):
    for f in factors:
        if f is LEAF:
            counter[0] += 1
            out.append(f"a{counter[0]}")
        else:
            out.append("L(")
            _emit(f.factors, out, counter)
            out.append(")")


def to_text(m: Monomial) -> str:
    out: list[str] = []
    _emit(m.factors, out, [0])
    return "".join(out)


def factors_text(factors) -> str:
    out: list[str] = []
    _emit(factors, out, [0])
    return "".join(out)


def _factors_to_json(factors):
    return [0 if f is LEAF else {"L": _factors_to_json(f.factors)} for f in factors]


def _factors_from_json(items):
    out = []
    for it in items:
        if it == 0:
            out.append(LEAF)
        elif isinstance(it, dict) and set(it) == {"L"}:
            out.append(Lin(tuple(_factors_from_json(it["L"]))))
        else:
            raise ValueError(f"bad factor encoding: {it!r}")
    return tuple(out)


def to_json(m: Monomial) -> dict:
    """``{"d": 3, "factors": [0, {"L": [0, 0, 0]}, 0]}``; 0 is an indeterminate."""
    return {"d": m.d, "factors": _factors_to_json(m.factors)}


def from_json(obj: dict) -> Monomial:
    return Monomial(int(obj["d"]), _factors_from_json(obj["factors"]))


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _monomials(d: int, n: int, k: int) -> tuple:
    """All factor sequences with topt = n and lopt = k."""
    out = []
    for j in range(n - k + 1):
        out.extend(_sequences(d, j * (d - 1) + 1, n - j, k))
    return tuple(out)


@lru_cache(maxsize=None)
def _irreducibles(d: int, n: int, k: int) -> tuple:
    if n == 0 and k == 0:
        return (LEAF,)
    if n < 1 or k < 1 or k > n:
        return ()
    return tuple(Lin(s) for s in _monomials(d, n - 1, k - 1))


@lru_cache(maxsize=None)
def _sequences(d: int, length: int, n: int, k: int) -> tuple:
    """Sequences of ``length`` irreducibles whose topt and lopt sum to n and k."""
    if length == 0:
        return ((),) if n == 0 and k == 0 else ()
    if k > n:
        return ()
    out = []
    for a in range(n + 1):
        for b in range(min(a, k) + 1):
            heads = _irreducibles(d, a, b)
            if not heads:
                continue
            tails = _sequences(d, length - 1, n - a, k - b)
            for h in heads:
                for t in tails:
                    out.append((h,) + t)
    return tuple(out)


@lru_cache(maxsize=None)
def _count(d, n, k, length=None):
    # same recursion as the generators, counting only
    if length is None:
        return sum(_count(d, n - j, k, j * (d - 1) + 1) for j in range(n - k + 1))
    if length == 0:
        return int(n == 0 and k == 0)
    if k > n:
        return 0
    total = 0
    for a in range(n + 1):
        for b in range(min(a, k) + 1):
            if a == 0 and b == 0:
                heads = 1
            elif a >= 1 and b >= 1:
                heads = _count(d, a - 1, b - 1)
            else:
                continue
            total += heads * _count(d, n - a, k - b, length - 1)
    return total


def enumerate_monomials(d: int, n: int, k: int, limit: int | None = DEFAULT_GUARD) -> list[Monomial]:
    """Every monomial with topt = n and lopt = k, sorted by printed form."""
    check_d(d)
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    Guard(limit).tick(_count(d, n, k))
    seqs = _monomials(d, n, k)
    keyed = sorted((factors_text(s), s) for s in seqs)
    return [Monomial(d, s) for _, s in keyed]


def enumerate_topt(d: int, n: int, limit: int | None = DEFAULT_GUARD) -> list[Monomial]:
    """All monomials with topt = n, over every lopt, in increasing lopt."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_monomials(d, n, k, limit))
    return out
