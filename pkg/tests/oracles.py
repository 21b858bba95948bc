"""Independent reference computations for the tests.

Everything here uses ``fractions.Fraction`` and plain lists, and none of it
imports the package, so agreement with the library is a genuine second route.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial


def bernoulli(n: int) -> Fraction:
    """Akiyama-Tanigawa, which yields B_1 = +1/2; flip it to -1/2."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return -a[0] if n == 1 else a[0]


def egf_inverse(coeffs: list[Fraction]) -> list[Fraction]:
    """Ordinary power series reciprocal of a coefficient list."""
    n = len(coeffs)
    out = [Fraction(0)] * n
    out[0] = 1 / Fraction(coeffs[0])
    for k in range(1, n):
        s = sum(coeffs[i] * out[k - i] for i in range(1, k + 1))
        out[k] = -s / coeffs[0]
    return out


def euler(n: int) -> int:
    cosh = [Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(n + 1)]
    return int(egf_inverse(cosh)[n] * factorial(n))


def gen_euler(m: int, n: int) -> int:
    N = m * n
    base = [Fraction(1, factorial(k)) if k % m == 0 else Fraction(0) for k in range(N + 1)]
    return int(egf_inverse(base)[N] * factorial(N))


def xsech(n: int) -> int:
    return n * euler(n - 1) if n > 0 else 0


def stirling2(n: int, k: int) -> int:
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k] if k <= n else 0


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def genocchi(n: int) -> int:
    return int(2 * (1 - 2**n) * bernoulli(n))


def median_genocchi(n: int) -> int:
    return sum(comb(n, k) * genocchi(n + k + 1) for k in range(n + 1))


def derangement(n: int) -> int:
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))


def fibonacci(n: int) -> int:
    """F_0 = F_1 = 1, extended to negative n by F_{n-2} = F_n - F_{n-1}."""
    a, b = 1, 1  # F_0, F_1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def hermite(n: int) -> dict[int, int]:
    """H_n(u) as {power: coeff} via H_{n+1} = 2u H_n - 2n H_{n-1}."""
    prev, cur = {}, {0: 1}
    for k in range(n):
        nxt: dict[int, int] = {}
        for e, c in cur.items():
            nxt[e + 1] = nxt.get(e + 1, 0) + 2 * c
        for e, c in prev.items():
            nxt[e] = nxt.get(e, 0) - 2 * k * c
        prev, cur = cur, {e: c for e, c in nxt.items() if c}
    return cur


def gaussian_binomial(n: int, k: int) -> dict[int, int]:
    """q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]."""

    @lru_cache(maxsize=None)
    def go(n, k):
        if k < 0 or k > n:
            return ()
        if k == 0 or k == n:
            return ((0, 1),)
        out: dict[int, int] = {}
        for e, c in go(n - 1, k - 1):
            out[e] = out.get(e, 0) + c
        for e, c in go(n - 1, k):
            out[e + k] = out.get(e + k, 0) + c
        return tuple(sorted(out.items()))

    return dict(go(n, k))


def zagier_bstar(n: int) -> Fraction:
    return sum((Fraction(comb(n + r, 2 * r)) * bernoulli(r) / (n + r) for r in range(n + 1)),
               Fraction(0))


def dellac_brute(n: int) -> int:
    """Subsets of the staircase (rows i..i+n of column i, 2n rows) with two
    cells per column and one per row."""
    count = 0

    def place(col: int, used: frozenset) -> None:
        nonlocal count
        if col > n:
            count += 1
            return
        rows = [r for r in range(col, col + n + 1) if r not in used]
        for a, b in combinations(rows, 2):
            place(col + 1, used | {a, b})

    place(1, frozenset())
    return count


def alt_sum(values, n: int, stride: int, offset: int) -> Fraction:
    return sum((Fraction((-1) ** (n - i) * comb(n, i)) * Fraction(values(i * stride + offset))
                for i in range(n + 1)), Fraction(0))


def nu(a: Fraction, p: int):
    """p-adic valuation; None for zero."""
    a = Fraction(a)
    if a == 0:
        return None
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
