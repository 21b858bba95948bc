"""Exact rationals and p-adic valuations.

Rationals are ``gmpy2.mpq`` values: always reduced, denominator positive,
zero stored as 0/1.  Everything in this package funnels through :func:`rat`
so callers may pass ints, strings like ``"-691/2730"``, ``Fraction`` or
``mpq`` interchangeably.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

import gmpy2
from gmpy2 import mpq, mpz

Rat = type(mpq(0))
RatLike = Union[int, str, Fraction, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)


def rat(value: RatLike, den: int | None = None) -> Rat:
    """Coerce ``value`` (optionally ``value/den``) to a normalized rational."""
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(rat(value)) / mpq(den)
    if isinstance(value, Rat):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int) or type(value) is type(mpz(0)):
        return mpq(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(a: RatLike) -> str:
    """Serialize as ``"p/q"`` (or ``"p"`` when integral); never a float."""
    a = rat(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p, 50))


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


@total_ordering
class Valuation:
    """An integer p-adic valuation or the marker for +infinity (value of 0)."""

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        # None encodes +infinity
        self.value = value

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, Valuation):
            return self.value == other.value
        if isinstance(other, int):
            return self.value is not None and self.value == other
        if other == float("inf"):
            return self.value is None
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Valuation):
            if self.value is None:
                return False
            return other.value is None or self.value < other.value
        if isinstance(other, int):
            return self.value is not None and self.value < other
        return NotImplemented

    def __ge__(self, other):
        lt = self.__lt__(other)
        return lt if lt is NotImplemented else not lt

    def __hash__(self):
        return hash(("val", self.value))

    def __add__(self, other: "Valuation") -> "Valuation":
        if self.value is None or other.value is None:
            return INFINITY
        return Valuation(self.value + other.value)

    def __int__(self):
        if self.value is None:
            raise OverflowError("infinite valuation")
        return self.value

    def __repr__(self):
        return "Valuation(+inf)" if self.value is None else f"Valuation({self.value})"

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITY = Valuation(None)


def rat_valuation(a: RatLike, p: int) -> Valuation:
    """Largest e such that a / p**e is p-integral; +infinity for a == 0."""
    _check_prime(p)
    a = rat(a)
    if a == 0:
        return INFINITY
    num_v = gmpy2.remove(a.numerator, p)[1] if a.numerator % p == 0 else 0
    den_v = gmpy2.remove(a.denominator, p)[1] if a.denominator % p == 0 else 0
    return Valuation(int(num_v) - int(den_v))


def is_p_integral(a: RatLike, p: int) -> bool:
    return rat_valuation(a, p) >= 0


def rat_congruent(a: RatLike, b: RatLike, p: int, r: int) -> bool:
    """True iff ``(a - b) / p**r`` is p-integral, i.e. a = b (mod p^r)."""
    return rat_valuation(rat(a) - rat(b), p) >= r


def rat_mod(a: RatLike, p: int, r: int) -> int:
    """Residue of a p-integral rational modulo p**r, in ``range(p**r)``."""
    a = rat(a)
    if not is_p_integral(a, p):
        raise ValueError(f"{rat_str(a)} is not {p}-integral")
    m = p**r
    return int(a.numerator * pow(int(a.denominator), -1, m)) % m
