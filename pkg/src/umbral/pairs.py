"""Sequence pairs (c_n, d_n) with d_n = sum_i C(n,i) c_i, i.e. d^n = (c+1)^n.

Some pairs have rational-function terms (Eulerian, Chu-Vandermonde).  Every
pair therefore exposes values scaled by a common factor s_N for the largest
index N used in an identity; scaling both sides of a linear identity by s_N
keeps everything polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from . import sequences as seq
from .poly import Poly
from .rat import rat

PAIR_SYMBOLS = ("t", "alpha", "beta")

_t, _alpha, _beta = (Poly.var(s, PAIR_SYMBOLS) for s in PAIR_SYMBOLS)


def _lift(v) -> Poly:
    if isinstance(v, Poly):
        return v.extend(PAIR_SYMBOLS)
    return Poly.const(rat(v), PAIR_SYMBOLS)


def _rising(a: Poly, n: int) -> Poly:
    out = Poly.const(1, PAIR_SYMBOLS)
    for i in range(n):
        out = out * (a + i)
    return out


def _unit(i: int, N: int):
    return 1


@dataclass(frozen=True)
class CDPair:
    """c(i, N) and d(i, N) are the i-th terms times the scale s_N."""

    name: str
    c_raw: Callable[[int, int], object]
    d_raw: Callable[[int, int], object]
    description: str = ""

    def c(self, i: int, N: int) -> Poly:
        return _lift(self.c_raw(i, N))

    def d(self, i: int, N: int) -> Poly:
        return _lift(self.d_raw(i, N))


def _kron(i: int, k: int) -> int:
    return 1 if i == k else 0


def lucas_standard(n: int) -> int:
    """Lucas numbers with L_0 = 2, L_1 = 1 (F_n + F_{n-2} with F_0 = F_1 = 1)."""
    return seq.fibonacci(n) + seq.fibonacci(n - 2)


def _lucas_c(i: int) -> object:
    return rat(lucas_standard(i) + lucas_standard(2 * i), (-2) ** i)


STIRLING_M = 4
FIB_M = 3

PAIRS: tuple[CDPair, ...] = (
    CDPair("bernoulli", lambda i, N: seq.bernoulli(i), lambda i, N: (-1) ** i * seq.bernoulli(i),
           "c = B_n, d = (-1)^n B_n"),
    CDPair("derangement", lambda i, N: seq.derangement(i), lambda i, N: factorial(i),
           "c = D_n, d = n!"),
    CDPair("stirling", lambda i, N: factorial(i) * seq.stirling2(STIRLING_M, i),
           lambda i, N: i**STIRLING_M, "c = n! S(4,n), d = n^4"),
    CDPair("euler", lambda i, N: seq.euler(i), lambda i, N: _kron(i, 0) + seq.tangent(i),
           "c = E_n, d = delta_n + T_n"),
    CDPair("genocchi", lambda i, N: seq.genocchi(i), lambda i, N: 2 * _kron(i, 1) - seq.genocchi(i),
           "c = g_n, d = 2 delta_{n-1} - g_n"),
    CDPair("eulerian", lambda i, N: seq.eulerian(i).extend(PAIR_SYMBOLS) * (1 - _t) ** (N - i),
           lambda i, N: seq.eulerian_tilde(i).extend(PAIR_SYMBOLS) * (1 - _t) ** (N - i),
           "c = A_n(t)/(1-t)^n, d = A~_n(t)/(1-t)^n, scaled by (1-t)^N"),
    CDPair("fibonacci-up", lambda i, N: seq.fibonacci(FIB_M + i), lambda i, N: seq.fibonacci(FIB_M + 2 * i),
           "c = F_{3+n}, d = F_{3+2n}"),
    CDPair("fibonacci-down", lambda i, N: seq.fibonacci(FIB_M - i), lambda i, N: seq.fibonacci(FIB_M + i),
           "c = F_{3-n}, d = F_{3+n}"),
    CDPair("chu-vandermonde",
           lambda i, N: (-1) ** i * _rising(_alpha, i) * _rising(_beta + i, N - i),
           lambda i, N: _rising(_beta - _alpha, i) * _rising(_beta + i, N - i),
           "c = (-1)^n (alpha)_n/(beta)_n, d = (beta-alpha)_n/(beta)_n, scaled by (beta)_N"),
    CDPair("genocchi-shift", lambda i, N: rat(seq.genocchi(i + 1), i + 1),
           lambda i, N: (-1) ** i * rat(seq.genocchi(i + 1), i + 1),
           "c = g_{n+1}/(n+1), d = (-1)^n c_n"),
    CDPair("lucas", lambda i, N: _lucas_c(i), lambda i, N: (-1) ** i * _lucas_c(i),
           "c = (-2)^{-n}(L_n + L_{2n}) with standard Lucas numbers, d = (-1)^n c_n"),
)


def pair(name: str) -> CDPair:
    for p in PAIRS:
        if p.name == name:
            return p
    raise KeyError(name)


def cd_defect(p: CDPair, n: int) -> Poly:
    """d_n - sum_i C(n,i) c_i, all at scale s_n (zero for a genuine pair)."""
    s = p.d(n, n)
    for i in range(n + 1):
        s = s - p.c(i, n) * comb(n, i)
    return s


def cd_inverse_defect(p: CDPair, n: int) -> Poly:
    """c_n - sum_i (-1)^{n-i} C(n,i) d_i."""
    s = p.c(n, n)
    for i in range(n + 1):
        s = s - p.d(i, n) * ((-1) ** (n - i) * comb(n, i))
    return s
