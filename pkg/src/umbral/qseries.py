"""q-series and the word algebra with BA = qAB, DC = qCD.

Scalars are truncated series in ``x`` and ``q`` (a :class:`SeriesRing` with
both as capped series variables).  An :class:`NCPoly` maps normal-ordered
words ``A^i B^j C^k D^l`` to scalars.  ``1/(q)_n`` is the truncated power
series of the reciprocal, never a rational function.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .poly import Poly
from .series import Series, SeriesError, SeriesRing

Word = tuple[int, int, int, int]
EMPTY: Word = (0, 0, 0, 0)
LETTERS = "ABCD"


def q_ring(x_cap: int, q_cap: int, symbols: Sequence[str] = ("u", "v")) -> SeriesRing:
    return SeriesRing.of({"x": x_cap, "q": q_cap}, symbols)


@lru_cache(maxsize=None)
def _q_power(ring: SeriesRing, s: int) -> Series:
    if s > ring.spec.cap("q"):
        return ring.zero
    return ring.gen("q") ** s


def q_pochhammer(base: Series, m: int | None) -> Series:
    """(a)_m = (1-a)(1-aq)...(1-aq^{m-1}); ``m=None`` means m = infinity.

    For m = infinity the factors with q^i beyond the q-cap are 1, so the
    product stops there.
    """
    ring = base.ring
    qcap = ring.spec.cap("q")
    top = qcap + 1 if m is None else m
    if m is None and not base:
        return ring.one
    out = ring.one
    for i in range(top):
        qi = _q_power(ring, i)
        if not qi:
            break
        out = out * (1 - base * qi)
    return out


@lru_cache(maxsize=None)
def inv_q_factorial(ring: SeriesRing, n: int) -> Series:
    """1/(q)_n as a truncated q-series."""
    return q_pochhammer(ring.gen("q"), n).invert()


def q_binomial(n: int, k: int, ring: SeriesRing | None = None) -> Series:
    """[n choose k]_q = (q)_n / ((q)_k (q)_{n-k}) by truncated-series division.

    The default ring has q-cap n(n+1)/2, the degree of (q)_n, which makes the
    division exact; the quotient is checked to be a polynomial of degree
    k(n-k).
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    exact = ring is None
    if ring is None:
        ring = SeriesRing.of({"q": n * (n + 1) // 2})
    q = ring.gen("q")
    num = q_pochhammer(q, n)
    den = q_pochhammer(q, k) * q_pochhammer(q, n - k)
    out = num * den.invert()
    if exact:
        qi = ring.spec.names.index("q")
        top = max((e[qi] for e in out.terms), default=0)
        if top > k * (n - k):
            raise ArithmeticError("q-binomial division left a remainder")
    return out


class NCPoly:
    """Finite sum of normal-ordered words with series scalars."""

    __slots__ = ("ring", "words")

    def __init__(self, ring: SeriesRing, words: Mapping[Word, Series] | None = None):
        self.ring = ring
        self.words: dict[Word, Series] = {}
        for w, c in (words or {}).items():
            if not isinstance(c, Series):
                c = ring.const(c)
            elif c.ring != ring:
                raise SeriesError("scalar ring mismatch")
            if c:
                self.words[tuple(w)] = c

    @classmethod
    def word(cls, ring: SeriesRing, letters: str, scalar=1) -> "NCPoly":
        """Word from a letter string such as ``"BA"`` (normal-ordered on entry)."""
        out = cls(ring, {EMPTY: scalar if isinstance(scalar, Series) else ring.const(scalar)})
        for ch in letters:
            e = [0, 0, 0, 0]
            e[LETTERS.index(ch)] = 1
            out = out * cls(ring, {tuple(e): ring.one})
        return out

    @classmethod
    def scalar(cls, s: Series) -> "NCPoly":
        return cls(s.ring, {EMPTY: s})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        other = self._coerce(other)
        words = dict(self.words)
        for w, c in other.words.items():
            words[w] = words[w] + c if w in words else c
        return NCPoly(self.ring, words)

    def __neg__(self):
        return NCPoly(self.ring, {w: -c for w, c in self.words.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if other.ring != self.ring:
                raise SeriesError("NCPoly rings differ")
            return other
        if isinstance(other, Series):
            return NCPoly.scalar(other)
        return NCPoly.scalar(self.ring.const(other))

    def __mul__(self, other) -> "NCPoly":
        other = self._coerce(other)
        return nc_mul(self, other)

    def __rmul__(self, other) -> "NCPoly":
        return nc_mul(self._coerce(other), self)

    def __pow__(self, n: int) -> "NCPoly":
        out = NCPoly.scalar(self.ring.one)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.ring == other.ring and self.words == other.words

    __hash__ = None

    def x_valuation(self) -> int:
        vals = [c.valuation("x") for c in self.words.values()]
        return min(vals) if vals else -1

    def as_series(self) -> Series:
        """Encode normal-ordered words as commuting symbols A,B,C,D (for reports)."""
        syms = self.ring.symbols + tuple(LETTERS)
        ring = self.ring.with_symbols(syms)
        out = ring.zero
        for w, c in self.words.items():
            mono = Poly(syms, {(0,) * len(self.ring.symbols) + w: 1})
            out = out + c.extend(syms) * mono
        return out

    def __repr__(self):
        return f"NCPoly({len(self.words)} words)"


def nc_mul(a: NCPoly, b: NCPoly) -> NCPoly:
    """Normal-ordered product: B^j A^i = q^{ij} A^i B^j and likewise D, C."""
    if a.ring != b.ring:
        raise SeriesError("cap mismatch between NCPoly operands")
    ring = a.ring
    out: dict[Word, Series] = {}
    for (i, j, k, l), ca in a.words.items():
        for (i2, j2, k2, l2), cb in b.words.items():
            s = j * i2 + l * k2
            c = ca * cb
            if s:
                c = c * _q_power(ring, s)
            if not c:
                continue
            w = (i + i2, j + j2, k + k2, l + l2)
            out[w] = out[w] + c if w in out else c
    return NCPoly(ring, out)


def q_exp(arg: NCPoly | Series) -> NCPoly:
    """e(arg) = sum arg^n / (q)_n with noncommutative powers normal-ordered."""
    if isinstance(arg, Series):
        arg = NCPoly.scalar(arg)
    if arg.x_valuation() < 1:
        raise SeriesError("q_exp needs an argument of positive x-degree")
    ring = arg.ring
    xcap = ring.spec.cap("x")
    out = NCPoly.scalar(ring.one)
    power = NCPoly.scalar(ring.one)
    for n in range(1, xcap + 1):
        power = power * arg
        if not power.words:
            break
        out = out + power * inv_q_factorial(ring, n)
    return out


def q_eval(p: NCPoly, u: str = "u", v: str = "v") -> Series:
    """eval(A^i B^j C^k D^l) = u^i v^k, scalars carried through."""
    ring = p.ring
    pu, pv = Poly.var(u, ring.symbols), Poly.var(v, ring.symbols)
    out = ring.zero
    for (i, j, k, l), c in p.words.items():
        out = out + c * (pu**i * pv**k)
    return out


def q_exp_scalar(arg: Series) -> Series:
    """Commutative e(arg) for a scalar series."""
    return q_exp(NCPoly.scalar(arg)).words.get(EMPTY, arg.ring.zero)
