"""Number and polynomial sequences, each with two independent routes.

The primary route of every sequence is a recurrence, closed form, or finite
sum; the secondary route (``*_egf`` or similar) extracts the same values from
a generating function with the series engine.  :data:`DUAL_ROUTES` pairs them
for cross-checking.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .poly import Poly, rising
from .rat import ONE, ZERO, Rat, rat
from .series import SeriesRing

_lock = threading.Lock()


class _Table:
    """Grow-on-demand memo table driven by a step function."""

    def __init__(self, step: Callable[[list, int], object]):
        self._step = step
        self._vals: list = []

    def __call__(self, n: int):
        if n < 0:
            raise ValueError(f"index must be >= 0, got {n}")
        if n >= len(self._vals):
            with _lock:
                while len(self._vals) <= n:
                    self._vals.append(self._step(self._vals, len(self._vals)))
        return self._vals[n]


def _egf_values(expr: Callable, n_max: int, extra: int = 0) -> list:
    """n! [x^n] of expr(x) for n <= n_max; expr gets x in a ring capped at n_max+extra."""
    ring = SeriesRing.of({"x": n_max + extra})
    f = expr(ring.gen("x"))
    return [f.egf_coeff((n,)).to_rat() for n in range(n_max + 1)]


# Bernoulli numbers, B_1 = -1/2.  (B+1)^{n+1} = B^{n+1} for n >= 1.


def _bern_step(vals, n):
    if n == 0:
        return ONE
    s = sum((comb(n + 1, k) * vals[k] for k in range(n)), ZERO)
    return -s / (n + 1)


bernoulli = _Table(_bern_step)
bernoulli.__doc__ = "Bernoulli number B_n (B_1 = -1/2)."


def bernoulli_egf(n_max: int) -> list[Rat]:
    # x/(e^x - 1): divide (e^x - 1) by x exactly, then invert
    def expr(x):
        return (x.exp() - 1).divide_by_var("x").invert()

    ring = SeriesRing.of({"x": n_max + 1})
    f = expr(ring.gen("x"))
    return [f.egf_coeff((n,)).to_rat() for n in range(n_max + 1)]


def kaneko_tilde(n: int) -> Rat:
    """(n+1) B_n."""
    return (n + 1) * bernoulli(n)


def zagier_bstar(n: int) -> Rat:
    """B*_n = sum_r C(n+r, 2r) B_r / (n+r), defined for n > 0."""
    if n <= 0:
        raise ValueError("B*_n needs n > 0")
    return sum((rat(comb(n + r, 2 * r), n + r) * bernoulli(r) for r in range(n + 1)), ZERO)


# Bell numbers: B_{n+1} = sum C(n,k) B_k


def _bell_step(vals, n):
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * vals[k] for k in range(n))


bell = _Table(_bell_step)


def bell_egf(n_max: int) -> list[int]:
    return [int(v) for v in _egf_values(lambda x: (x.exp() - 1).exp(), n_max)]


# Euler numbers (sech x), signed tangent numbers (tanh x)


def _euler_step(vals, n):
    if n == 0:
        return 1
    if n % 2:
        return 0
    return -sum(comb(n, k) * vals[n - k] for k in range(2, n + 1, 2))


euler = _Table(_euler_step)


def _cosh(x):
    return ((x.exp() + (-x).exp()) * rat(1, 2))


def _sinh(x):
    return ((x.exp() - (-x).exp()) * rat(1, 2))


def euler_egf(n_max: int) -> list[int]:
    return [int(v) for v in _egf_values(lambda x: _cosh(x).invert(), n_max)]


def _tangent_step(vals, n):
    # tanh' = 1 - tanh^2, tanh(0) = 0
    if n == 0:
        return 0
    m = n - 1
    return (1 if m == 0 else 0) - sum(comb(m, k) * vals[k] * vals[m - k] for k in range(m + 1))


tangent = _Table(_tangent_step)


def tangent_egf(n_max: int) -> list[int]:
    return [int(v) for v in _egf_values(lambda x: _sinh(x) * _cosh(x).invert(), n_max)]


def xsech(n: int) -> int:
    """F_n = n E_{n-1}, the coefficients of x sech x."""
    return 0 if n == 0 else n * euler(n - 1)


def xsech_egf(n_max: int) -> list[int]:
    return [int(v) for v in _egf_values(lambda x: x * _cosh(x).invert(), n_max)]


@lru_cache(maxsize=None)
def _gen_euler_table(m: int) -> _Table:
    def step(vals, n):
        if n == 0:
            return 1
        return -sum(comb(m * n, m * k) * vals[k] for k in range(n))

    return _Table(step)


def gen_euler(m: int, n: int) -> int:
    """e^{(m)}_n: sum e_n x^{mn}/(mn)! = 1 / sum x^{mn}/(mn)!."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _gen_euler_table(m)(n)


def gen_euler_egf(m: int, n_max: int) -> list[int]:
    ring = SeriesRing.of({"x": m * n_max})
    x = ring.gen("x")
    den = ring.zero
    for k in range(n_max + 1):
        den = den + (x ** (m * k)) * rat(1, factorial(m * k))
    inv = den.invert()
    return [int(inv.egf_coeff((m * n,)).to_rat()) for n in range(n_max + 1)]


@lru_cache(maxsize=None)
def _fm_table(m: int) -> _Table:
    def step(vals, N):
        # sum_{n+k=N} C((2N+1)m, (2n+1)m) f_n = delta_{N,0}
        s = sum(comb((2 * N + 1) * m, (2 * n + 1) * m) * vals[n] for n in range(N))
        return (1 if N == 0 else 0) - s

    return _Table(step)


def f_m(m: int, n: int) -> int:
    """f^{(m)}_n: sum f_n x^{(2n+1)m}/((2n+1)m)! = (x^m/m!) / sum x^{2nm}/(2nm)!."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _fm_table(m)(n)


def f_m_egf(m: int, n_max: int) -> list[int]:
    top = (2 * n_max + 1) * m
    ring = SeriesRing.of({"x": top})
    x = ring.gen("x")
    den = ring.zero
    for k in range(n_max + 1):
        den = den + (x ** (2 * m * k)) * rat(1, factorial(2 * m * k))
    f = (x**m) * rat(1, factorial(m)) * den.invert()
    return [int(f.egf_coeff(((2 * n + 1) * m,)).to_rat()) for n in range(n_max + 1)]


# Genocchi numbers 2x/(e^x+1), median Genocchi numbers, Dellac configurations


def _genocchi_step(vals, n):
    # from (e^x + 1) G(x) = 2x:  2 g_n + sum_{k<n} C(n,k) g_k = 2 [n == 1]
    s = sum(comb(n, k) * vals[k] for k in range(n))
    return rat((2 if n == 1 else 0) - s, 2)


_genocchi = _Table(_genocchi_step)


def genocchi(n: int) -> int:
    return int(_genocchi(n))


def genocchi_egf(n_max: int) -> list[int]:
    ring = SeriesRing.of({"x": n_max + 1})
    x = ring.gen("x")
    f = (x * 2) * (x.exp() + 1).invert()
    f = f.truncate({"x": n_max})
    return [int(f.egf_coeff((n,)).to_rat()) for n in range(n_max + 1)]


def genocchi_from_xsech(n: int) -> int:
    """g^n = 2((F-1)/2)^n with e^{Fx} = x sech x."""
    s = sum(comb(n, i) * xsech(i) * (-1) ** (n - i) for i in range(n + 1))
    v = rat(2 * s, 2**n)
    return int(v)


def median_genocchi(n: int) -> int:
    """H_{2n+1} = sum_k C(n,k) g_{n+k+1} (signed; |H_{2n+1}| = (-1)^n H_{2n+1})."""
    return sum(comb(n, k) * genocchi(n + k + 1) for k in range(n + 1))


def median_genocchi_lemma(n: int) -> int:
    """2^{-2n} sum (-1)^{n-i} C(n,i) F_{2i+1}."""
    s = sum((-1) ** (n - i) * comb(n, i) * xsech(2 * i + 1) for i in range(n + 1))
    v = rat(s, 4**n)
    if v.denominator != 1:
        raise ArithmeticError("median Genocchi value is not an integer")
    return int(v)


def median_genocchi_lemma_euler(n: int) -> int:
    """2^{-2n} sum (-1)^{n-i} C(n,i) (2i+1) E_{2i}."""
    s = sum((-1) ** (n - i) * comb(n, i) * (2 * i + 1) * euler(2 * i) for i in range(n + 1))
    return int(rat(s, 4**n))


def dellac_count(n: int) -> int:
    """Brute-force count of Dellac configurations.

    Cells of column i (1..n) are rows i..i+n of a 2n-row array; count the
    subsets with two cells per column and one per row.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = [0] * (n + 1)

    def place(row: int) -> int:
        if row > 2 * n:
            return 1
        total = 0
        for col in range(max(1, row - n), min(n, row) + 1):
            if counts[col] < 2:
                # a column whose last row passed must already be full
                counts[col] += 1
                ok = all(counts[c] == 2 for c in range(1, n + 1) if c + n == row)
                if ok:
                    total += place(row + 1)
                counts[col] -= 1
        return total

    return place(1)


def dellac_from_genocchi(n: int) -> int:
    v = rat(abs(median_genocchi(n + 1)), 2**n)
    return int(v)


# permutation numbers


def _derangement_step(vals, n):
    return 1 if n == 0 else n * vals[n - 1] + (-1) ** n


derangement = _Table(_derangement_step)


def derangement_egf(n_max: int) -> list[int]:
    return [int(v) for v in _egf_values(lambda x: (-x).exp() * (1 - x).invert(), n_max)]


@lru_cache(maxsize=None)
def stirling2(m: int, n: int) -> int:
    if m == 0 and n == 0:
        return 1
    if m == 0 or n == 0:
        return 0
    return n * stirling2(m - 1, n) + stirling2(m - 1, n - 1)


def stirling2_explicit(m: int, n: int) -> int:
    s = sum((-1) ** (n - i) * comb(n, i) * i**m for i in range(n + 1))
    return s // factorial(n)


# Fibonacci with F_0 = F_1 = 1 over all integers, Lucas L_n = F_{n+1} + F_{n-1}


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n in (0, 1):
        return 1
    if n > 1:
        return fibonacci(n - 1) + fibonacci(n - 2)
    # F_{n} = F_{n+2} - F_{n+1}
    return fibonacci(n + 2) - fibonacci(n + 1)


def _fib_standard(k: int) -> tuple[int, int]:
    """(Fib(k), Fib(k+1)) for k >= 0 by fast doubling."""
    if k == 0:
        return 0, 1
    a, b = _fib_standard(k // 2)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if k % 2 else (c, d)


def fibonacci_closed(n: int) -> int:
    # F_n = Fib(n+1); Fib(-k) = (-1)^{k+1} Fib(k)
    k = n + 1
    if k >= 0:
        return _fib_standard(k)[0]
    return (-1) ** (-k + 1) * _fib_standard(-k)[0]


def lucas(n: int) -> int:
    return fibonacci(n + 1) + fibonacci(n - 1)


# polynomial families


CHARLIER_SYMBOLS = ("u", "alpha")


@lru_cache(maxsize=None)
def charlier(n: int) -> Poly:
    """C_n(u, alpha) = sum_i C(n,i) (alpha)_i u^{n-i}."""
    u, a = (Poly.var(s, CHARLIER_SYMBOLS) for s in CHARLIER_SYMBOLS)
    return sum((rising(a, i) * u ** (n - i) * comb(n, i) for i in range(n + 1)),
               Poly.const(0, CHARLIER_SYMBOLS))


def charlier_egf(n_max: int) -> list[Poly]:
    ring = SeriesRing.of({"x": n_max}, CHARLIER_SYMBOLS)
    x, u, a = ring.gens()
    f = (u * x).exp() * (1 - x).pow_sym(-a)
    return [f.egf_coeff((n,)) for n in range(n_max + 1)]


HERMITE_SYMBOLS = ("u",)


@lru_cache(maxsize=None)
def hermite(n: int) -> Poly:
    """H_n(u) by H_{n+1} = 2u H_n - 2n H_{n-1}."""
    u = Poly.var("u", HERMITE_SYMBOLS)
    if n == 0:
        return Poly.const(1, HERMITE_SYMBOLS)
    if n == 1:
        return u * 2
    return u * 2 * hermite(n - 1) - hermite(n - 2) * (2 * (n - 1))


def hermite_egf(n_max: int) -> list[Poly]:
    ring = SeriesRing.of({"x": n_max}, HERMITE_SYMBOLS)
    x, u = ring.gens()
    f = (u * x * 2 - x * x).exp()
    return [f.egf_coeff((n,)) for n in range(n_max + 1)]


CARLITZ_SYMBOLS = ("u", "v")


@lru_cache(maxsize=None)
def carlitz_hermite(m: int, n: int) -> Poly:
    u, v = (Poly.var(s, CARLITZ_SYMBOLS) for s in CARLITZ_SYMBOLS)
    return sum(
        (u ** (m - k) * v ** (n - k) * (comb(m, k) * comb(n, k) * factorial(k))
         for k in range(min(m, n) + 1)),
        Poly.const(0, CARLITZ_SYMBOLS),
    )


def carlitz_hermite_egf(m_max: int, n_max: int) -> dict[tuple[int, int], Poly]:
    ring = SeriesRing.of({"x": m_max, "y": n_max}, CARLITZ_SYMBOLS)
    x, y, u, v = ring.gens()
    f = (u * x + v * y + x * y).exp()
    return {(m, n): f.egf_coeff((m, n)) for m in range(m_max + 1) for n in range(n_max + 1)}


ZEIL_SYMBOLS = ("w",)


@lru_cache(maxsize=None)
def zeil_hermite(m: int, n: int) -> Poly:
    w = Poly.var("w", ZEIL_SYMBOLS)
    return sum(
        (w**k * (comb(m, k) * comb(n, k) * factorial(k)) for k in range(min(m, n) + 1)),
        Poly.const(0, ZEIL_SYMBOLS),
    )


def zeil_hermite_egf(m_max: int, n_max: int) -> dict[tuple[int, int], Poly]:
    ring = SeriesRing.of({"x": m_max, "y": n_max}, ZEIL_SYMBOLS)
    x, y, w = ring.gens()
    f = (x + y + w * x * y).exp()
    return {(m, n): f.egf_coeff((m, n)) for m in range(m_max + 1) for n in range(n_max + 1)}


QPOLY_SYMBOLS = ("u", "q")


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> Poly:
    """[n choose k]_q as an exact polynomial in q (Pascal recurrence)."""
    if k < 0 or k > n:
        return Poly.const(0, ("q",))
    if k == 0 or k == n:
        return Poly.const(1, ("q",))
    q = Poly.var("q", ("q",))
    return gaussian_binomial(n - 1, k - 1) + q**k * gaussian_binomial(n - 1, k)


@lru_cache(maxsize=None)
def rogers_szego(n: int) -> Poly:
    """R_n(u) = sum_k [n choose k]_q u^k, a Poly in (u, q)."""
    u = Poly.var("u", QPOLY_SYMBOLS)
    return sum(
        (gaussian_binomial(n, k).extend(QPOLY_SYMBOLS) * u**k for k in range(n + 1)),
        Poly.const(0, QPOLY_SYMBOLS),
    )


@lru_cache(maxsize=None)
def rogers_szego_recurrence(n: int) -> Poly:
    """R_{n+1} = (1+u) R_n - (1-q^n) u R_{n-1}."""
    u, q = (Poly.var(s, QPOLY_SYMBOLS) for s in QPOLY_SYMBOLS)
    if n == 0:
        return Poly.const(1, QPOLY_SYMBOLS)
    if n == 1:
        return u + 1
    m = n - 1
    return (u + 1) * rogers_szego_recurrence(m) - (1 - q**m) * u * rogers_szego_recurrence(m - 1)


EULERIAN_SYMBOLS = ("t",)


@lru_cache(maxsize=None)
def eulerian(n: int) -> Poly:
    """A_n(t) = sum_k A(n,k) t^{k+1} (n >= 1), A_0 = 1."""
    t = Poly.var("t", EULERIAN_SYMBOLS)
    if n == 0:
        return Poly.const(1, EULERIAN_SYMBOLS)
    out = Poly.const(0, EULERIAN_SYMBOLS)
    for k in range(n):
        a = sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))
        out = out + t ** (k + 1) * a
    return out


def eulerian_egf(n_max: int) -> list[Poly]:
    ring = SeriesRing.of({"x": n_max}, EULERIAN_SYMBOLS)
    x, t = ring.gens()
    # (1-t)/(1 - t e^{(1-t)x}) = 1/(1 - t (e^{(1-t)x} - 1)/(1-t)); the inner
    # quotient is sum (1-t)^{n-1} x^n/n!, a polynomial series
    inner = ring.zero
    for n in range(1, n_max + 1):
        inner = inner + (x**n) * ((1 - t) ** (n - 1)) * rat(1, factorial(n))
    f = (1 - t * inner).invert()
    return [f.egf_coeff((n,)) for n in range(n_max + 1)]


def eulerian_tilde(n: int) -> Poly:
    """A~_n(t) = A_n(t)/t for n > 0 (divisibility checked), A~_0 = 1."""
    if n == 0:
        return Poly.const(1, EULERIAN_SYMBOLS)
    a = eulerian(n)
    terms = {}
    for (e,), c in a.terms.items():
        if e == 0:
            raise ArithmeticError(f"A_{n}(t) is not divisible by t")
        terms[(e - 1,)] = c
    return Poly(EULERIAN_SYMBOLS, terms)


# dispatchers keyed by the names used in reports and the cli


def euler_family(kind: str, n: int, m: int | None = None):
    if kind == "euler":
        return euler(n)
    if kind == "tangent":
        return tangent(n)
    if kind == "F":
        return xsech(n)
    if kind == "gen_euler":
        return gen_euler(m, n)
    if kind == "f":
        return f_m(m, n)
    raise ValueError(f"unknown euler-family id {kind!r}")


def genocchi_family(kind: str, n: int) -> int:
    if kind == "genocchi":
        return genocchi(n)
    if kind == "median":
        return median_genocchi(n)
    if kind == "dellac_count":
        return dellac_count(n)
    raise ValueError(f"unknown genocchi-family id {kind!r}")


def classical_polys(kind: str, n: int, m: int | None = None) -> Poly:
    if kind == "charlier":
        return charlier(n)
    if kind == "hermite":
        return hermite(n)
    if kind == "carlitz_hermite":
        return carlitz_hermite(n, m)
    if kind == "zeil_hermite":
        return zeil_hermite(n, m)
    if kind == "rogers_szego":
        return rogers_szego(n)
    if kind == "eulerian":
        return eulerian(n)
    if kind == "derangement":
        return Poly.const(derangement(n))
    if kind == "stirling2":
        return Poly.const(stirling2(m, n))
    if kind == "fibonacci":
        return Poly.const(fibonacci(n))
    raise ValueError(f"unknown polynomial family {kind!r}")


def _first_routes(f, n_max):
    return [f(n) for n in range(n_max + 1)]


# name -> (primary values, secondary values) for indices 0..n_max
DUAL_ROUTES: dict[str, Callable[[int], tuple[list, list]]] = {
    "bernoulli": lambda N: (_first_routes(bernoulli, N), bernoulli_egf(N)),
    "bell": lambda N: (_first_routes(bell, N), bell_egf(N)),
    "euler": lambda N: (_first_routes(euler, N), euler_egf(N)),
    "tangent": lambda N: (_first_routes(tangent, N), tangent_egf(N)),
    "F": lambda N: (_first_routes(xsech, N), xsech_egf(N)),
    "gen_euler_3": lambda N: (_first_routes(lambda n: gen_euler(3, n), N), gen_euler_egf(3, N)),
    "gen_euler_4": lambda N: (_first_routes(lambda n: gen_euler(4, n), N), gen_euler_egf(4, N)),
    "f_2": lambda N: (_first_routes(lambda n: f_m(2, n), N), f_m_egf(2, N)),
    "f_1": lambda N: (_first_routes(lambda n: f_m(1, n), N), [xsech(2 * n + 1) for n in range(N + 1)]),
    "genocchi": lambda N: (_first_routes(genocchi, N), genocchi_egf(N)),
    "genocchi_umbral": lambda N: (_first_routes(genocchi, N), _first_routes(genocchi_from_xsech, N)),
    "median": lambda N: (_first_routes(median_genocchi, N), _first_routes(median_genocchi_lemma, N)),
    "median_euler": lambda N: (_first_routes(median_genocchi, N), _first_routes(median_genocchi_lemma_euler, N)),
    "derangement": lambda N: (_first_routes(derangement, N), derangement_egf(N)),
    "stirling2_5": lambda N: (_first_routes(lambda n: stirling2(5, n), N), _first_routes(lambda n: stirling2_explicit(5, n), N)),
    "fibonacci": lambda N: ([fibonacci(n) for n in range(-N, N + 1)], [fibonacci_closed(n) for n in range(-N, N + 1)]),
    "charlier": lambda N: (_first_routes(charlier, N), charlier_egf(N)),
    "hermite": lambda N: (_first_routes(hermite, N), hermite_egf(N)),
    "rogers_szego": lambda N: (_first_routes(rogers_szego, N), _first_routes(rogers_szego_recurrence, N)),
    "eulerian": lambda N: (_first_routes(eulerian, N), eulerian_egf(N)),
}


# routes producing Poly values; these are checked to a lower index
POLY_ROUTES = frozenset({"charlier", "hermite", "rogers_szego", "eulerian"})


def dual_route_mismatches(name: str, n_max: int) -> list[int]:
    a, b = DUAL_ROUTES[name](n_max)
    return [i for i, (x, y) in enumerate(zip(a, b)) if x != y]


