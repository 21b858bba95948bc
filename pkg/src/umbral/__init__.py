"""Exact umbral-calculus engine: series, umbrae, identities and congruences."""

from .poly import Poly, poly_ring
from .rat import Rat, Valuation, rat, rat_congruent, rat_str, rat_valuation
from .series import Series, SeriesError, SeriesRing, VarSpec

__all__ = [
    "Poly",
    "Rat",
    "Series",
    "SeriesError",
    "SeriesRing",
    "Valuation",
    "VarSpec",
    "poly_ring",
    "rat",
    "rat_congruent",
    "rat_str",
    "rat_valuation",
]
