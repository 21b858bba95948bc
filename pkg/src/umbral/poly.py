"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` lives over a fixed tuple of symbol names.  Two polynomials
combine only when their symbol tuples are identical; moving a polynomial into
a larger ring is explicit (:meth:`Poly.extend`).
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Mapping, Sequence, Union

from ._layout import layout_for
from .rat import ONE, ZERO, Rat, rat, rat_str


class RingMismatch(ValueError):
    """Operands live over different symbol lists."""


def _add_into(acc: dict, key: int, c) -> None:
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


class Poly:
    """Immutable sparse polynomial; coefficients are normalized rationals."""

    __slots__ = ("symbols", "_t", "_layout", "_hash")

    def __init__(self, symbols: Sequence[str], terms: Mapping[tuple, object] | None = None):
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in {symbols}")
        self.symbols = symbols
        self._layout = layout_for((None,) * len(symbols))
        t: dict = {}
        for exps, c in (terms or {}).items():
            c = rat(c)
            if c:
                _add_into(t, self._layout.pack(exps), c)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, symbols: tuple, packed: dict) -> "Poly":
        p = object.__new__(cls)
        p.symbols = symbols
        p._layout = layout_for((None,) * len(symbols))
        p._t = packed
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c, symbols: Sequence[str] = ()) -> "Poly":
        symbols = tuple(symbols)
        c = rat(c)
        return cls._raw(symbols, {0: c} if c else {})

    @classmethod
    def var(cls, name: str, symbols: Sequence[str]) -> "Poly":
        symbols = tuple(symbols)
        if name not in symbols:
            raise KeyError(name)
        exps = [0] * len(symbols)
        exps[symbols.index(name)] = 1
        return cls(symbols, {tuple(exps): 1})

    # views

    @property
    def terms(self) -> dict[tuple, Rat]:
        unpack = self._layout.unpack
        return {unpack(k): c for k, c in self._t.items()}

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> Rat:
        return self._t.get(0, ZERO)

    def to_rat(self) -> Rat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one symbol; -1 for the zero polynomial."""
        if not self._t:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.symbols.index(name)
        return max(e[i] for e in self.terms)

    def coeff(self, exps: Sequence[int]) -> Rat:
        return self._t.get(self._layout.pack(exps), ZERO)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.symbols != self.symbols:
                raise RingMismatch(f"{self.symbols} vs {other.symbols}")
            return other
        return Poly.const(other, self.symbols)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            _add_into(t, k, c)
        return Poly._raw(self.symbols, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.symbols, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = rat(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw(self.symbols, {})
            return Poly._raw(self.symbols, {k: v * c for k, v in self._t.items()})
        other = self._coerce(other)
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        t: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                _add_into(t, ka + kb, ca * cb)
        return Poly._raw(self.symbols, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by rationals only; polynomial quotients are never needed
        c = rat(other)
        return self * (ONE / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1, self.symbols)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.symbols == other.symbols and self._t == other._t
        try:
            c = rat(other)
        except TypeError:
            return NotImplemented
        return self._t == ({0: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.symbols, frozenset(self._t.items())))
        return self._hash

    # calculus and substitution

    def derivative(self, name: str) -> "Poly":
        i = self.symbols.index(name)
        unpack, pack = self._layout.unpack, self._layout.pack
        t: dict = {}
        for k, c in self._t.items():
            e = list(unpack(k))
            if e[i]:
                d = e[i]
                e[i] -= 1
                _add_into(t, pack(e), c * d)
        return Poly._raw(self.symbols, t)

    def substitute(self, mapping: Mapping[str, object]) -> "Poly":
        """Simultaneous substitution of symbols by polynomials over the same ring."""
        idx = {}
        for name, img in mapping.items():
            if name not in self.symbols:
                raise KeyError(name)
            idx[self.symbols.index(name)] = self._coerce(img)
        if not idx:
            return self
        unpack, pack = self._layout.unpack, self._layout.pack
        powers: dict = {i: [Poly.const(1, self.symbols)] for i in idx}
        out: dict = {}
        for k, c in self._t.items():
            e = list(unpack(k))
            term = None
            for i, img in idx.items():
                p = powers[i]
                while len(p) <= e[i]:
                    p.append(p[-1] * img)
                f = p[e[i]]
                term = f if term is None else term * f
                e[i] = 0
            shift = pack(e)
            for kk, cc in term._t.items():
                _add_into(out, kk + shift, cc * c)
        return Poly._raw(self.symbols, out)

    def evaluate(self, mapping: Mapping[str, object]) -> Rat:
        """Evaluate at rational values for every symbol that occurs."""
        full = {s: mapping[s] for s in self.symbols if s in mapping}
        return self.substitute(full).to_rat()

    def extend(self, symbols: Sequence[str]) -> "Poly":
        """Embed into the ring over ``symbols`` (must contain every used symbol)."""
        symbols = tuple(symbols)
        if symbols == self.symbols:
            return self
        pos = []
        for s in self.symbols:
            pos.append(symbols.index(s) if s in symbols else None)
        t = {}
        for exps, c in self.terms.items():
            new = [0] * len(symbols)
            for e, p, s in zip(exps, pos, self.symbols):
                if e:
                    if p is None:
                        raise RingMismatch(f"symbol {s!r} missing from {symbols}")
                    new[p] = e
            t[tuple(new)] = c
        return Poly(symbols, t)

    # display

    def __repr__(self):
        return f"Poly({self.symbols}, {str(self)!r})"

    def __str__(self):
        return format_terms(self.terms, self.symbols)


def monomial_str(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, s in zip(exps, names):
        if e == 1:
            parts.append(s)
        elif e:
            parts.append(f"{s}^{e}")
    return "*".join(parts) if parts else "1"


def format_terms(terms: Mapping[tuple, Rat], names: Sequence[str]) -> str:
    if not terms:
        return "0"
    out = []
    for exps in sorted(terms, key=lambda e: (sum(e), e)):
        c = terms[exps]
        mono = monomial_str(exps, names)
        neg = c < 0
        a = -c if neg else c
        if mono == "1":
            body = rat_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{rat_str(a)}*{mono}"
        out.append(("- " if neg else "+ ") + body)
    s = " ".join(out)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


PolyLike = Union[Poly, int, Rat]


def poly_ring(*symbols: str) -> tuple[Poly, ...]:
    """Generators of the polynomial ring over ``symbols``."""
    return tuple(Poly.var(s, symbols) for s in symbols)


def rising(a, n: int):
    """Rising factorial a(a+1)...(a+n-1); works for Poly and rationals."""
    out = ONE if not isinstance(a, Poly) else Poly.const(1, a.symbols)
    for i in range(n):
        out = out * (a + i)
    return out


def falling(a, n: int):
    out = ONE if not isinstance(a, Poly) else Poly.const(1, a.symbols)
    for i in range(n):
        out = out * (a - i)
    return out


def binom_poly(a, k: int):
    """Generalized binomial coefficient C(a, k) for symbolic or rational a."""
    if k < 0:
        return ZERO if not isinstance(a, Poly) else Poly.const(0, a.symbols)
    return falling(a, k) * rat(1, factorial(k))


def poly_arith(op: str, a: Poly, b=None) -> Poly:
    """Dispatcher over the ring operations (add, mul, neg, substitute, derivative)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "substitute":
        return a.substitute(b)
    if op == "derivative":
        return a.derivative(b)
    raise ValueError(f"unknown op {op!r}")


def union_symbols(polys: Iterable[Poly]) -> tuple[str, ...]:
    seen: list[str] = []
    for p in polys:
        for s in p.symbols:
            if s not in seen:
                seen.append(s)
    return tuple(seen)
