"""Bernoulli umbra identities, Kaneko's identity and the (c, d) pair identities.

These are statements about number sequences, so each side is packed as an
ordinary generating function in index variables: the coefficient of n^e is
the value at n = e.  Some indices start at 1 or 2; the entry says so.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb

from .. import sequences as seq
from ..pairs import PAIR_SYMBOLS, PAIRS
from ..poly import Poly, binom_poly
from ..rat import rat
from ..series import SeriesRing
from ..umbra import family, ueval
from ..umbrae import bernoulli_umbra
from .registry import indexed, register

SECTION = "bernoulli"

_B = Poly.var("B", ("B",))
_ONE = Poly.const(1, ("B",))


@lru_cache(maxsize=1)
def _fam():
    return family(bernoulli_umbra("B"))


def ev(p: Poly):
    """The Bernoulli functional B^n -> B_n on a polynomial in B."""
    return ueval(p, _fam()).to_rat()


def _shift(f: Poly, a, scale=1) -> Poly:
    """f(scale*B + a)."""
    return f.substitute({"B": _B * scale + a})


def _deriv_at(f: Poly, x) -> object:
    return f.derivative("B").evaluate({"B": x})


def random_polys(count: int, degree: int = 8, seed: int = 20240611) -> list[Poly]:
    """Reproducible integer-coefficient test polynomials of exact degree."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        out.append(Poly(("B",), {(i,): c for i, c in enumerate(coeffs) if c}))
    return out


N_RANDOM = 6


@register("bernoulli-egf", section=SECTION, anchor="e:bgf",
          description="e^{Bx} = x/(e^x - 1)",
          quick={"x": 12}, full={"x": 20}, floor={"x": 2})
def bernoulli_egf(caps):
    c = caps["x"]
    ring = SeriesRing.of({"x": c}, ("B",))
    x, B = ring.gens()
    lhs = ueval((B * x).exp(), _fam())
    wide = SeriesRing.of({"x": c + 1})
    xw = wide.gen("x")
    rhs = (xw.exp() - 1).divide_by_var("x").invert()
    return lhs, rhs


@register("bernoulli-b1", section=SECTION, anchor="e:b1",
          description="(B+1)^n = B^n + delta_{n-1}",
          quick={"n": 20}, full={"n": 40}, floor={"n": 2})
def bernoulli_b1(caps):
    lhs = indexed(caps, lambda n: ev((_B + 1) ** n))
    rhs = indexed(caps, lambda n: ev(_B**n) + (1 if n == 1 else 0))
    return lhs, rhs


@register("bernoulli-b2", section=SECTION, anchor="e:b2",
          description="f(B+1) = f(B) + f'(0) for reproducible random integer f of degree 8 (s indexes f)",
          quick={"s": N_RANDOM - 1}, full={"s": 2 * N_RANDOM - 1}, floor={"s": 0})
def bernoulli_b2(caps):
    fs = random_polys(caps["s"] + 1)
    lhs = indexed(caps, lambda s: ev(_shift(fs[s], 1)))
    rhs = indexed(caps, lambda s: ev(fs[s]) + _deriv_at(fs[s], 0))
    return lhs, rhs


def _b3_rhs(m: int, k: int):
    # f = z^m, f'(i) = m i^{m-1}
    if m == 0:
        return ev(_B**0)
    return ev(_B**m) + sum(m * i ** (m - 1) for i in range(k))


@register("bernoulli-b3", section=SECTION, anchor="e:b3",
          description="f(B+k) = f(B) + f'(0) + ... + f'(k-1) for f = z^m, m <= M, k <= 5",
          quick={"m": 12, "k": 5}, full={"m": 20, "k": 8}, floor={"m": 1, "k": 1})
def bernoulli_b3(caps):
    lhs = indexed(caps, lambda m, k: ev((_B + k) ** m))
    rhs = indexed(caps, _b3_rhs)
    return lhs, rhs


@register("b3-i", section=SECTION, anchor="T:b3(i)",
          description="(B+1)^n = (-B)^n",
          quick={"n": 20}, full={"n": 40}, floor={"n": 2})
def b3_i(caps):
    return (indexed(caps, lambda n: ev((_B + 1) ** n)),
            indexed(caps, lambda n: ev((-_B) ** n)))


@register("b3-ii", section=SECTION, anchor="T:b3(ii)",
          description="(-B)^n = B^n for n != 1, B_1 = -1/2, and B_n = 0 for odd n > 1",
          quick={"n": 20}, full={"n": 40}, floor={"n": 3})
def b3_ii(caps):
    def rhs(n):
        if n == 1:
            return rat(1, 2)
        if n % 2:
            return 0
        return ev(_B**n)

    return indexed(caps, lambda n: ev((-_B) ** n)), indexed(caps, rhs)


@register("b3-iii", section=SECTION, anchor="T:b3(iii)",
          description="k B^n = (kB)^n + (kB+1)^n + ... + (kB+k-1)^n; exponent e of k means k = e+1",
          quick={"k": 4, "n": 12}, full={"k": 7, "n": 20}, floor={"k": 0, "n": 1})
def b3_iii(caps):
    lhs = indexed(caps, lambda e, n: (e + 1) * ev(_B**n))
    rhs = indexed(caps, lambda e, n: sum(ev((_B * (e + 1) + i) ** n) for i in range(e + 1)))
    return lhs, rhs


@register("b4", section=SECTION, anchor="e:b4",
          description="f(B+k) - f(-B) = sum_{i=1}^{k-1} f'(i), random f of degree 8; k = e+1 for exponent e",
          quick={"s": N_RANDOM - 1, "k": 4}, full={"s": 2 * N_RANDOM - 1, "k": 7},
          floor={"s": 0, "k": 0})
def b4(caps):
    fs = random_polys(caps["s"] + 1, seed=7)
    lhs = indexed(caps, lambda s, e: ev(_shift(fs[s], e + 1)) - ev(_shift(fs[s], 0, -1)))
    rhs = indexed(caps, lambda s, e: sum((_deriv_at(fs[s], i) for i in range(1, e + 1)), rat(0)))
    return lhs, rhs


@register("bdouble", section=SECTION, anchor="e:double",
          description="f(B) = f(2B) + f'(0) for f(u) = (u^2-u)^k, which satisfies f(u+1) = f(-u)",
          quick={"k": 6}, full={"k": 10}, floor={"k": 1})
def bdouble(caps):
    base = _B * _B - _B
    lhs = indexed(caps, lambda k: ev(base**k))
    rhs = indexed(caps, lambda k: ev(_shift(base**k, 0, 2)) + _deriv_at(base**k, 0))
    return lhs, rhs


@register("linearized-bx1", section=SECTION, anchor="e:bx1",
          description="f(B+1) = f(-B) for random f of degree 8",
          quick={"s": N_RANDOM - 1}, full={"s": 2 * N_RANDOM - 1}, floor={"s": 0})
def bx1(caps):
    fs = random_polys(caps["s"] + 1, seed=11)
    return (indexed(caps, lambda s: ev(_shift(fs[s], 1))),
            indexed(caps, lambda s: ev(_shift(fs[s], 0, -1))))


@register("linearized-bx2", section=SECTION, anchor="e:bx2",
          description="f(-B) = f(B) + f'(0) for random f of degree 8",
          quick={"s": N_RANDOM - 1}, full={"s": 2 * N_RANDOM - 1}, floor={"s": 0})
def bx2(caps):
    fs = random_polys(caps["s"] + 1, seed=13)
    return (indexed(caps, lambda s: ev(_shift(fs[s], 0, -1))),
            indexed(caps, lambda s: ev(fs[s]) + _deriv_at(fs[s], 0)))


@register("linearized-bx3", section=SECTION, anchor="e:bx3",
          description="k f(B) = f(kB) + ... + f(kB+k-1) for random f of degree 8; k = e+1",
          quick={"s": N_RANDOM - 1, "k": 4}, full={"s": 2 * N_RANDOM - 1, "k": 7},
          floor={"s": 0, "k": 0})
def bx3(caps):
    fs = random_polys(caps["s"] + 1, seed=17)
    lhs = indexed(caps, lambda s, e: (e + 1) * ev(fs[s]))
    rhs = indexed(caps, lambda s, e: sum(ev(_shift(fs[s], i, e + 1)) for i in range(e + 1)))
    return lhs, rhs


# Kaneko


def _bt(n: int):
    return seq.kaneko_tilde(n)


@register("kaneko", section=SECTION, anchor="e:Kaneko",
          description="sum_{i=0}^{n+1} C(n+1,i) B~_{n+i} = 0, B~_n = (n+1) B_n",
          quick={"n": 20}, full={"n": 40}, floor={"n": 1})
def kaneko(caps):
    lhs = indexed(caps, lambda n: sum((comb(n + 1, i) * _bt(n + i) for i in range(n + 2)), rat(0)))
    return lhs, indexed(caps, lambda n: 0)


@register("kaneko-key", section=SECTION, anchor="e:Kkey",
          description="C(n+1,i) B~_{n+i} = (n+1)[C(n+1,i) + C(n,i-1)] B_{n+i}",
          quick={"n": 20, "i": 21}, full={"n": 30, "i": 31}, floor={"n": 1, "i": 1})
def kaneko_key(caps):
    def rhs(n, i):
        cn = comb(n, i - 1) if i >= 1 else 0
        return (n + 1) * (comb(n + 1, i) + cn) * seq.bernoulli(n + i)

    return indexed(caps, lambda n, i: comb(n + 1, i) * _bt(n + i)), indexed(caps, rhs)


@register("kaneko-lemma", section=SECTION, anchor="L:Kaneko",
          description="sum_i C(m,i) B_{n+i} = (-1)^{m+n} sum_j C(n,j) B_{m+j}",
          quick={"m": 12, "n": 12}, full={"m": 20, "n": 20}, floor={"m": 1, "n": 1})
def kaneko_lemma(caps):
    b = seq.bernoulli
    lhs = indexed(caps, lambda m, n: sum((comb(m, i) * b(n + i) for i in range(m + 1)), rat(0)))
    rhs = indexed(caps, lambda m, n: (-1) ** (m + n) * sum((comb(n, j) * b(m + j) for j in range(n + 1)), rat(0)))
    return lhs, rhs


def _genk_lhs(k: int, n: int):
    s = sum((k ** (n + 1 - i) * comb(n + 1, i) * _bt(n + i) for i in range(n + 2)), rat(0))
    return s / (n + 1)


def _genk_rhs(k: int, n: int):
    return sum((((2 * n + 1) * i - (n + 1) * k) * rat(i) ** n * rat(i - k) ** (n - 1)
                for i in range(1, k)), rat(0))


@register("kaneko-gen", section=SECTION, anchor="e:genK",
          description="(1/(n+1)) sum_i k^{n+1-i} C(n+1,i) B~_{n+i} = sum_{i=1}^{k-1} ((2n+1)i-(n+1)k) i^n (i-k)^{n-1}; k = e+1",
          quick={"k": 4, "n": 12}, full={"k": 7, "n": 20}, floor={"k": 0, "n": 1})
def kaneko_gen(caps):
    return (indexed(caps, lambda e, n: _genk_lhs(e + 1, n)),
            indexed(caps, lambda e, n: _genk_rhs(e + 1, n)))


def _genk_closed(k: int, n: int):
    if k == 2:
        return (-1) ** n
    if k == 3:
        return rat(-2) ** (n - 1) * (n - 4)
    return (-1) ** n * (4**n + (2 - rat(4, 3) * n) * 3**n)


@register("kaneko-gen-closed", section=SECTION, anchor="e:genK displayed cases",
          description="the displayed k = 2, 3, 4 closed forms; k = e+2",
          quick={"k": 2, "n": 12}, full={"k": 2, "n": 24}, floor={"k": 2, "n": 1})
def kaneko_gen_closed(caps):
    return (indexed(caps, lambda e, n: _genk_lhs(e + 2, n)),
            indexed(caps, lambda e, n: _genk_closed(e + 2, n)))


@register("kaneko-gen-umbral", section=SECTION, anchor="e:genK proof",
          description="the e:genK left side equals (B+k)^{n+1} B^n + B^{n+1} (B+k)^n; k = e+1",
          quick={"k": 4, "n": 12}, full={"k": 7, "n": 20}, floor={"k": 0, "n": 1})
def kaneko_gen_umbral(caps):
    def rhs(e, n):
        k = e + 1
        return ev((_B + k) ** (n + 1) * _B**n + _B ** (n + 1) * (_B + k) ** n)

    return indexed(caps, lambda e, n: _genk_lhs(e + 1, n)), indexed(caps, rhs)


# (c, d) pairs

P_CAP = len(PAIRS) - 1
CD_SYMBOLS = ("a", "b") + PAIR_SYMBOLS
_a, _b = (Poly.var(s, CD_SYMBOLS) for s in ("a", "b"))


def _c(p: int, i: int, N: int) -> Poly:
    return PAIRS[p].c(i, N).extend(CD_SYMBOLS)


def _d(p: int, i: int, N: int) -> Poly:
    return PAIRS[p].d(i, N).extend(CD_SYMBOLS)


def _zero():
    return Poly.const(0, CD_SYMBOLS)


@register("cd-pairs", section=SECTION, anchor="e:cd",
          description="d_n = sum_i C(n,i) c_i and c_n = sum_i (-1)^{n-i} C(n,i) d_i for every registered pair (p indexes the pair)",
          quick={"p": P_CAP, "n": 20, "r": 1}, full={"p": P_CAP, "n": 30, "r": 1},
          floor={"p": P_CAP, "n": 1, "r": 1})
def cd_pairs(caps):
    """r = 0 is the forward relation, r = 1 the inversion."""

    def lhs(p, n, r):
        return _d(p, n, n) if r == 0 else _c(p, n, n)

    def rhs(p, n, r):
        s = _zero()
        for i in range(n + 1):
            if r == 0:
                s = s + _c(p, i, n) * comb(n, i)
            else:
                s = s + _d(p, i, n) * ((-1) ** (n - i) * comb(n, i))
        return s

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


@register("cd0", section=SECTION, anchor="T:cd0",
          description="sum_i C(m,i) c_{n+i} = sum_j C(n,j) (-1)^{n-j} d_{m+j}",
          quick={"p": P_CAP, "m": 6, "n": 6}, full={"p": P_CAP, "m": 9, "n": 9},
          floor={"p": P_CAP, "m": 1, "n": 1})
def cd0(caps):
    def lhs(p, m, n):
        N = m + n
        return sum((_c(p, n + i, N) * comb(m, i) for i in range(m + 1)), _zero())

    def rhs(p, m, n):
        N = m + n
        return sum((_d(p, m + j, N) * ((-1) ** (n - j) * comb(n, j)) for j in range(n + 1)), _zero())

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


@register("cd1", section=SECTION, anchor="e:cd1",
          description="sum_i C(a,i) C(b,n-i) d_i = sum_j C(a,j) C(a+b-j,n-j) c_j, symbolic a, b",
          quick={"p": P_CAP, "n": 10}, full={"p": P_CAP, "n": 12}, floor={"p": P_CAP, "n": 1})
def cd1(caps):
    def lhs(p, n):
        return sum((binom_poly(_a, i) * binom_poly(_b, n - i) * _d(p, i, n) for i in range(n + 1)), _zero())

    def rhs(p, n):
        return sum((binom_poly(_a, j) * binom_poly(_a + _b - j, n - j) * _c(p, j, n)
                    for j in range(n + 1)), _zero())

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


@register("cd2", section=SECTION, anchor="e:cd2",
          description="sum_i C(a,i) C(2a-2i,n-i) (-2)^i d_i = sum_j C(a,n-j) C(n-j,j) (-2)^{n-2j} c_{n-2j}",
          quick={"p": P_CAP, "n": 10}, full={"p": P_CAP, "n": 12}, floor={"p": P_CAP, "n": 1})
def cd2(caps):
    def lhs(p, n):
        return sum((binom_poly(_a, i) * binom_poly(2 * _a - 2 * i, n - i) * (-2) ** i * _d(p, i, n)
                    for i in range(n + 1)), _zero())

    def rhs(p, n):
        return sum((binom_poly(_a, n - j) * comb(n - j, j) * (-2) ** (n - 2 * j) * _c(p, n - 2 * j, n)
                    for j in range(n // 2 + 1)), _zero())

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


@register("cd3", section=SECTION, anchor="e:cd3",
          description="sum_i C(a,i) C(2a-2i,n-i) (-4)^i d_i = (-1)^n sum_j C(a,j) C(2a-2j,n-j) 4^j c_j",
          quick={"p": P_CAP, "n": 10}, full={"p": P_CAP, "n": 12}, floor={"p": P_CAP, "n": 1})
def cd3(caps):
    def lhs(p, n):
        return sum((binom_poly(_a, i) * binom_poly(2 * _a - 2 * i, n - i) * (-4) ** i * _d(p, i, n)
                    for i in range(n + 1)), _zero())

    def rhs(p, n):
        return sum((binom_poly(_a, j) * binom_poly(2 * _a - 2 * j, n - j) * ((-1) ** n * 4**j) * _c(p, j, n)
                    for j in range(n + 1)), _zero())

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


@register("cd-a=-1", section=SECTION, anchor="e:a=-1",
          description="sum_i C(b,n-i) (-1)^i d_i = (-1)^n sum_j C(n-b,n-j) c_j",
          quick={"p": P_CAP, "n": 10}, full={"p": P_CAP, "n": 14}, floor={"p": P_CAP, "n": 1})
def cd_a_minus_1(caps):
    def lhs(p, n):
        return sum((binom_poly(_b, n - i) * (-1) ** i * _d(p, i, n) for i in range(n + 1)), _zero())

    def rhs(p, n):
        return sum((binom_poly(n - _b, n - j) * (-1) ** n * _c(p, j, n) for j in range(n + 1)), _zero())

    return indexed(caps, lhs, CD_SYMBOLS), indexed(caps, rhs, CD_SYMBOLS)


UV_SYMBOLS = ("u", "a", "b")
_u, _ua, _ub = (Poly.var(s, UV_SYMBOLS) for s in UV_SYMBOLS)
_v = 1 + _u
_uv_zero = Poly.const(0, UV_SYMBOLS)


@register("uv1", section=SECTION, anchor="e:uv1",
          description="sum_i C(a,i) C(b,n-i) v^i = sum_j C(a,j) C(a+b-j,n-j) u^j, v = 1+u",
          quick={"n": 10}, full={"n": 14}, floor={"n": 1})
def uv1(caps):
    lhs = indexed(caps, lambda n: sum((binom_poly(_ua, i) * binom_poly(_ub, n - i) * _v**i
                                       for i in range(n + 1)), _uv_zero), UV_SYMBOLS)
    rhs = indexed(caps, lambda n: sum((binom_poly(_ua, j) * binom_poly(_ua + _ub - j, n - j) * _u**j
                                       for j in range(n + 1)), _uv_zero), UV_SYMBOLS)
    return lhs, rhs


@register("uv2", section=SECTION, anchor="e:uv2",
          description="sum_i C(a,i) C(2a-2i,n-i) (-2v)^i = sum_j C(a,n-j) C(n-j,j) (-2u)^{n-2j}",
          quick={"n": 10}, full={"n": 14}, floor={"n": 1})
def uv2(caps):
    lhs = indexed(caps, lambda n: sum((binom_poly(_ua, i) * binom_poly(2 * _ua - 2 * i, n - i) * (-2 * _v) ** i
                                       for i in range(n + 1)), _uv_zero), UV_SYMBOLS)
    rhs = indexed(caps, lambda n: sum((binom_poly(_ua, n - j) * comb(n - j, j) * (-2 * _u) ** (n - 2 * j)
                                       for j in range(n // 2 + 1)), _uv_zero), UV_SYMBOLS)
    return lhs, rhs


@register("uv3", section=SECTION, anchor="e:uv3",
          description="sum_i C(a,i) C(2a-2i,n-i) (-4v)^i = (-1)^n sum_j C(a,j) C(2a-2j,n-j) (4u)^j",
          quick={"n": 10}, full={"n": 14}, floor={"n": 1})
def uv3(caps):
    lhs = indexed(caps, lambda n: sum((binom_poly(_ua, i) * binom_poly(2 * _ua - 2 * i, n - i) * (-4 * _v) ** i
                                       for i in range(n + 1)), _uv_zero), UV_SYMBOLS)
    rhs = indexed(caps, lambda n: sum((binom_poly(_ua, j) * binom_poly(2 * _ua - 2 * j, n - j) * (4 * _u) ** j
                                       for j in range(n + 1)), _uv_zero) * (-1) ** n, UV_SYMBOLS)
    return lhs, rhs


# Genocchi and Zagier


@register("seidel", section=SECTION, anchor="e:seidel",
          description="sum_j C(n,2j) g_{2n-2j} = 0 for n > 1 (n = e+2) and sum_i C(n,i) g_{n+i} = 0 for all n (r = 1)",
          quick={"n": 30, "r": 1}, full={"n": 50, "r": 1}, floor={"n": 1, "r": 1})
def seidel(caps):
    g = seq.genocchi

    def lhs(e, r):
        if r == 0:
            n = e + 2
            return sum(comb(n, 2 * j) * g(2 * n - 2 * j) for j in range(n // 2 + 1))
        return sum(comb(e, i) * g(e + i) for i in range(e + 1))

    return indexed(caps, lhs), indexed(caps, lambda e, r: 0)


ZAGIER_TABLE = {1: rat(3, 4), 3: rat(-1, 4), 5: rat(-1, 4), 7: rat(1, 4), 9: rat(1, 4), 11: rat(-3, 4)}


@register("zagier", section=SECTION, anchor="Zagier periodicity theorem",
          description="B*_n for odd n = 2e+1 follows the period-12 table 3/4, -1/4, -1/4, 1/4, 1/4, -3/4",
          quick={"n": 24}, full={"n": 40}, floor={"n": 1})
def zagier(caps):
    return (indexed(caps, lambda e: seq.zagier_bstar(2 * e + 1)),
            indexed(caps, lambda e: ZAGIER_TABLE[(2 * e + 1) % 12]))


@register("zagier-gf", section=SECTION, anchor="Zagier theorem proof",
          description="-log((1-x)^2 - Bx) = 2 sum_{n>=1} B*_n x^n",
          quick={"x": 16}, full={"x": 25}, floor={"x": 1})
def zagier_gf(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("B",))
    x, B = ring.gens()
    lhs = ueval(-(((1 - x) ** 2 - B * x).log()), _fam())
    rhs = indexed(caps, lambda n: 0 if n == 0 else 2 * seq.zagier_bstar(n))
    return lhs, rhs


@register("zagier-odd", section=SECTION, anchor="Zagier theorem proof",
          description="g(B+2) - g(-B-2) = (3x-x^3-x^5+x^7+x^9-3x^11)/(1-x^12), g(u) = -log(1-ux+x^2)",
          quick={"x": 16}, full={"x": 25}, floor={"x": 1})
def zagier_odd(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("B",))
    x, B = ring.gens()

    def g(u):
        return -((1 - u * x + x * x).log())

    lhs = ueval(g(B + 2) - g(-B - 2), _fam())
    x = lhs.ring.gen("x")
    num = 3 * x - x**3 - x**5 + x**7 + x**9 - 3 * x**11
    return lhs, num * (1 - x**12).invert()
