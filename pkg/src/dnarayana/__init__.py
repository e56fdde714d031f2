"""Generalized Narayana numbers N_d(n,k) and the objects they count."""

from .numbers import catalan, lagrange_narayana, narayana, narayana_row, series_narayana
from .monomials import Monomial, enumerate_monomials, parse, stats, to_text

__version__ = "0.1.0"

__all__ = [
    "catalan",
    "lagrange_narayana",
    "narayana",
    "narayana_row",
    "series_narayana",
    "Monomial",
    "enumerate_monomials",
    "parse",
    "stats",
    "to_text",
]
