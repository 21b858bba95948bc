"""Truncated multivariate power series with polynomial coefficients.

Each series variable has its own degree cap; monomials beyond any cap are
dropped.  Coefficients are polynomials in a separate, uncapped list of
parameter symbols, which is also where umbral symbols live.  Storage is flat:
one packed integer key per (series monomial, parameter monomial) pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from ._layout import Layout, layout_for
from .poly import Poly, RingMismatch, _add_into, monomial_str
from .rat import ONE, ZERO, Rat, rat


class SeriesError(ValueError):
    """A series operation's precondition failed (constant term, caps, ...)."""


@dataclass(frozen=True)
class VarSpec:
    """Ordered series-variable names with per-variable degree caps."""

    names: tuple[str, ...]
    caps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "caps", tuple(int(c) for c in self.caps))
        if len(self.names) != len(self.caps):
            raise ValueError("names and caps differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate series variables {self.names}")
        if any(c < 0 for c in self.caps):
            raise ValueError("caps must be non-negative")

    def cap(self, name: str) -> int:
        return self.caps[self.names.index(name)]


@dataclass(frozen=True)
class SeriesRing:
    """Series variables (with caps) plus polynomial coefficient symbols."""

    spec: VarSpec
    symbols: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        clash = set(self.spec.names) & set(self.symbols)
        if clash:
            raise ValueError(f"series variables overlap parameter symbols: {sorted(clash)}")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols {self.symbols}")

    @classmethod
    def of(cls, caps: Mapping[str, int], symbols: Sequence[str] = ()) -> "SeriesRing":
        return cls(VarSpec(tuple(caps), tuple(caps.values())), tuple(symbols))

    @cached_property
    def layout(self) -> Layout:
        return layout_for(self.spec.caps + (None,) * len(self.symbols))

    @cached_property
    def nvars(self) -> int:
        return len(self.spec.names)

    @cached_property
    def series_bits(self) -> int:
        lay = self.layout
        if not self.nvars:
            return 0
        return lay.shifts[self.nvars - 1] + lay.widths[self.nvars - 1]

    @cached_property
    def max_degree(self) -> int:
        return sum(self.spec.caps)

    def gen(self, name: str) -> "Series":
        if name in self.spec.names:
            e = [0] * (self.nvars + len(self.symbols))
            e[self.spec.names.index(name)] = 1
            if self.spec.cap(name) == 0:
                return self.zero
            return Series._raw(self, {self.layout.pack(e): ONE})
        if name in self.symbols:
            e = [0] * (self.nvars + len(self.symbols))
            e[self.nvars + self.symbols.index(name)] = 1
            return Series._raw(self, {self.layout.pack(e): ONE})
        raise KeyError(name)

    def gens(self) -> tuple["Series", ...]:
        """Generators for every series variable, then every symbol."""
        return tuple(self.gen(n) for n in self.spec.names + self.symbols)

    def const(self, c) -> "Series":
        if isinstance(c, Poly):
            return Series.from_poly(self, c)
        c = rat(c)
        return Series._raw(self, {0: c} if c else {})

    @property
    def zero(self) -> "Series":
        return Series._raw(self, {})

    @property
    def one(self) -> "Series":
        return self.const(1)

    def with_caps(self, caps: Mapping[str, int] | Sequence[int]) -> "SeriesRing":
        if isinstance(caps, Mapping):
            new = tuple(caps.get(n, c) for n, c in zip(self.spec.names, self.spec.caps))
        else:
            new = tuple(caps)
        return SeriesRing(VarSpec(self.spec.names, new), self.symbols)

    def with_symbols(self, symbols: Sequence[str]) -> "SeriesRing":
        return SeriesRing(self.spec, tuple(symbols))

    def monomials(self) -> Iterator[tuple[int, ...]]:
        """All in-cap series exponent vectors, graded then lexicographic."""
        from itertools import product

        allm = product(*(range(c + 1) for c in self.spec.caps))
        return iter(sorted(allm, key=lambda e: (sum(e), e)))


def _split(ring: SeriesRing, key: int) -> tuple[int, int]:
    b = ring.series_bits
    return key & ((1 << b) - 1), key >> b


def _mul_dicts(a: dict, b: dict, lay: Layout) -> dict:
    if len(a) > len(b):
        a, b = b, a
    off, guard = lay.offset, lay.guard
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            if (k + off) & guard:
                continue
            v = get(k)
            if v is None:
                out[k] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def _accumulate(acc: dict, d: dict, scale=None) -> None:
    if scale is None:
        for k, c in d.items():
            _add_into(acc, k, c)
    else:
        for k, c in d.items():
            _add_into(acc, k, c * scale)


class Series:
    """Immutable truncated power series over a :class:`SeriesRing`."""

    __slots__ = ("ring", "_t", "__weakref__")

    def __init__(self, ring: SeriesRing, terms: Mapping[tuple, object] | None = None):
        """``terms`` maps series exponent tuples to Poly/rational coefficients."""
        self.ring = ring
        t: dict = {}
        for sexp, c in (terms or {}).items():
            for k, v in _coef_items(ring, sexp, c):
                _add_into(t, k, v)
        self._t = t

    @classmethod
    def _raw(cls, ring: SeriesRing, packed: dict) -> "Series":
        s = object.__new__(cls)
        s.ring = ring
        s._t = packed
        return s

    @classmethod
    def from_poly(cls, ring: SeriesRing, p: Poly) -> "Series":
        if p.symbols != ring.symbols:
            p = p.extend(ring.symbols)
        return cls(ring, {(0,) * ring.nvars: p})

    # views

    @property
    def spec(self) -> VarSpec:
        return self.ring.spec

    @property
    def terms(self) -> dict[tuple, Poly]:
        """Nested view: series exponent vector -> coefficient Poly."""
        ring = self.ring
        lay = ring.layout
        nv = ring.nvars
        groups: dict = {}
        for k, c in self._t.items():
            e = lay.unpack(k)
            groups.setdefault(e[:nv], {})[e[nv:]] = c
        return {s: Poly(ring.symbols, d) for s, d in groups.items()}

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def coeff(self, m: Sequence[int]) -> Poly:
        """Plain coefficient of the series monomial ``m`` (a Poly)."""
        ring = self.ring
        m = tuple(m)
        if len(m) != ring.nvars:
            raise SeriesError(f"expected {ring.nvars} exponents")
        if not ring.layout.exps_in_caps(m + (0,) * len(ring.symbols)):
            raise SeriesError(f"exponent {m} outside caps {ring.spec.caps}")
        skey = ring.layout.pack(m + (0,) * len(ring.symbols))
        b = ring.series_bits
        mask = (1 << b) - 1
        t = {k >> b: c for k, c in self._t.items() if k & mask == skey}
        return Poly._raw(ring.symbols, t)

    def egf_coeff(self, m: Sequence[int]) -> Poly:
        """(prod m_i!) times the coefficient of ``m``: the EGF normalization."""
        return self.coeff(m) * prod(factorial(e) for e in m)

    def constant_term(self) -> Poly:
        return self.coeff((0,) * self.ring.nvars)

    def graded(self) -> list[dict]:
        """Terms split by total series degree, index = degree."""
        ring = self.ring
        lay = ring.layout
        shifts, masks = lay.shifts[: ring.nvars], lay.masks[: ring.nvars]
        out: list[dict] = [dict() for _ in range(ring.max_degree + 1)]
        for k, c in self._t.items():
            d = 0
            for s, m in zip(shifts, masks):
                d += (k >> s) & m
            out[d][k] = c
        return out

    def valuation(self, name: str) -> int:
        """Lowest exponent of series variable ``name`` present (-1 if zero)."""
        if not self._t:
            return -1
        i = self.ring.spec.names.index(name)
        lay = self.ring.layout
        s, m = lay.shifts[i], lay.masks[i]
        return min((k >> s) & m for k in self._t)

    # arithmetic

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise RingMismatch(f"series rings differ: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, Poly):
            return Series.from_poly(self.ring, other)
        return self.ring.const(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._t)
        _accumulate(t, other._t)
        return Series._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self.ring, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (Series, Poly)):
            try:
                c = rat(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero
            return Series._raw(self.ring, {k: v * c for k, v in self._t.items()})
        other = self._coerce(other)
        return Series._raw(self.ring, _mul_dicts(self._t, other._t, self.ring.layout))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.invert()
        return self * (ONE / rat(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.ring == other.ring and self._t == other._t
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._t == other._t

    __hash__ = None

    # transcendental operations, all by degree-graded recurrences

    def _degree0(self) -> dict:
        return self.graded()[0]

    def exp(self) -> "Series":
        g = self.graded()
        if g[0]:
            raise SeriesError("exp needs a zero constant term")
        lay = self.ring.layout
        F: list[dict] = [{0: ONE}]
        for n in range(1, self.ring.max_degree + 1):
            acc: dict = {}
            for k in range(1, n + 1):
                if g[k] and F[n - k]:
                    _accumulate(acc, _mul_dicts(g[k], F[n - k], lay), rat(k, n))
            F.append(acc)
        out: dict = {}
        for d in F:
            out.update(d)
        return Series._raw(self.ring, out)

    def log(self) -> "Series":
        g = self.graded()
        if g[0] != {0: ONE}:
            raise SeriesError("log needs constant term exactly 1")
        lay = self.ring.layout
        L: list[dict] = [{}]
        for n in range(1, self.ring.max_degree + 1):
            acc = dict(g[n])
            for k in range(1, n):
                if L[k] and g[n - k]:
                    _accumulate(acc, _mul_dicts(L[k], g[n - k], lay), rat(-k, n))
            L.append(acc)
        out: dict = {}
        for d in L:
            out.update(d)
        return Series._raw(self.ring, out)

    def invert(self) -> "Series":
        g = self.graded()
        if len(g[0]) != 1 or 0 not in g[0]:
            raise SeriesError("invert needs a nonzero rational constant term")
        c_inv = ONE / g[0][0]
        lay = self.ring.layout
        G: list[dict] = [{0: c_inv}]
        for n in range(1, self.ring.max_degree + 1):
            acc: dict = {}
            for k in range(1, n + 1):
                if g[k] and G[n - k]:
                    _accumulate(acc, _mul_dicts(g[k], G[n - k], lay), -c_inv)
            G.append(acc)
        out: dict = {}
        for d in G:
            out.update(d)
        return Series._raw(self.ring, out)

    def pow_sym(self, e) -> "Series":
        """self ** e for a symbolic or rational exponent e, as exp(e log self)."""
        if not isinstance(e, Series):
            e = self._coerce(e)
        elif e.ring != self.ring:
            raise RingMismatch("exponent lives in another ring")
        if self._degree0() != {0: ONE}:
            raise SeriesError("pow_sym needs constant term exactly 1")
        if any(e.graded()[d] for d in range(1, self.ring.max_degree + 1)):
            raise SeriesError("exponent must not involve series variables")
        return (e * self.log()).exp()

    def substitute(self, sigma: Mapping[str, object]) -> "Series":
        """Simultaneous substitution of series variables and/or symbols.

        Images of series variables must have zero constant term.  The caller
        guarantees the caps are compatible (each image of ``v`` raises the
        degree in ``v`` or the monomials it produces are already capped).
        """
        ring = self.ring
        names = ring.spec.names + ring.symbols
        idx: dict[int, Series] = {}
        for name, img in sigma.items():
            if name not in names:
                raise KeyError(name)
            img = self._coerce(img)
            i = names.index(name)
            if i < ring.nvars and img._degree0():
                raise SeriesError(f"image of {name} has a nonzero constant term")
            idx[i] = img
        if not idx:
            return self
        lay = ring.layout
        groups: dict[tuple, dict] = {}
        order = sorted(idx)
        for k, c in self._t.items():
            e = list(lay.unpack(k))
            sub = tuple(e[i] for i in order)
            for i in order:
                e[i] = 0
            groups.setdefault(sub, {})[lay.pack(e)] = c
        powers = {i: [ring.one] for i in order}
        out: dict = {}
        for sub, rest in groups.items():
            factor = None
            for i, ei in zip(order, sub):
                p = powers[i]
                while len(p) <= ei:
                    p.append(p[-1] * idx[i])
                factor = p[ei] if factor is None else factor * p[ei]
            _accumulate(out, _mul_dicts(factor._t, rest, lay))
        return Series._raw(ring, out)

    def divide_by_var(self, name: str, k: int = 1) -> "Series":
        """Exact division by ``name**k``; the cap on ``name`` drops by k.

        Every term must be divisible, so nothing is guessed past the old cap.
        """
        ring = self.ring
        i = ring.spec.names.index(name)
        cap = ring.spec.caps[i]
        if k > cap:
            raise SeriesError(f"cannot divide by {name}^{k} with cap {cap}")
        if self._t and self.valuation(name) < k:
            raise SeriesError(f"series is not divisible by {name}^{k}")
        new = ring.with_caps({name: cap - k})
        lay, nlay = ring.layout, new.layout
        t = {}
        for key, c in self._t.items():
            e = list(lay.unpack(key))
            e[i] -= k
            t[nlay.pack(e)] = c
        return Series._raw(new, t)

    # ring changes

    def truncate(self, caps: Mapping[str, int] | Sequence[int]) -> "Series":
        new = self.ring.with_caps(caps)
        if any(a > b for a, b in zip(new.spec.caps, self.ring.spec.caps)):
            raise SeriesError("truncate can only lower caps")
        lay, nlay = self.ring.layout, new.layout
        t = {}
        for k, c in self._t.items():
            e = lay.unpack(k)
            if nlay.exps_in_caps(e):
                t[nlay.pack(e)] = c
        return Series._raw(new, t)

    def extend(self, symbols: Sequence[str]) -> "Series":
        """Move into a ring with a larger symbol list (by name)."""
        symbols = tuple(symbols)
        if symbols == self.ring.symbols:
            return self
        new = self.ring.with_symbols(symbols)
        pos = []
        for s in self.ring.symbols:
            pos.append(symbols.index(s) if s in symbols else None)
        lay, nlay, nv = self.ring.layout, new.layout, self.ring.nvars
        t = {}
        for k, c in self._t.items():
            e = lay.unpack(k)
            ne = list(e[:nv]) + [0] * len(symbols)
            for ei, p, s in zip(e[nv:], pos, self.ring.symbols):
                if ei:
                    if p is None:
                        raise RingMismatch(f"symbol {s!r} missing from {symbols}")
                    ne[nv + p] = ei
            t[nlay.pack(ne)] = c
        return Series._raw(new, t)

    def drop_symbols(self) -> "Series":
        """Shrink the symbol list to the symbols actually used."""
        used = set()
        for p in self.terms.values():
            for exps in p.terms:
                used.update(s for s, e in zip(self.ring.symbols, exps) if e)
        return self.restrict_symbols([s for s in self.ring.symbols if s in used])

    def restrict_symbols(self, symbols: Sequence[str]) -> "Series":
        symbols = tuple(symbols)
        new = self.ring.with_symbols(symbols)
        t = {}
        for sexp, p in self.terms.items():
            t[sexp] = p.extend(symbols) if p.symbols != symbols else p
        # extend() also shrinks when unused symbols are absent
        return Series(new, t)

    # display

    def monomial_str(self, m: Sequence[int]) -> str:
        return monomial_str(m, self.ring.spec.names)

    def __repr__(self):
        return f"Series({self.ring.spec.names}, caps={self.ring.spec.caps}, {len(self._t)} terms)"

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        if not items:
            return "0"
        parts = []
        for m, p in items:
            mono = self.monomial_str(m)
            parts.append(f"({p})" + ("" if mono == "1" else f"*{mono}"))
        return " + ".join(parts)


def _coef_items(ring: SeriesRing, sexp: Sequence[int], c) -> Iterator[tuple[int, Rat]]:
    sexp = tuple(sexp)
    if len(sexp) != ring.nvars:
        raise SeriesError(f"expected {ring.nvars} series exponents, got {sexp}")
    if any(e > cap for e, cap in zip(sexp, ring.spec.caps)):
        return
    lay = ring.layout
    if isinstance(c, Poly):
        if c.symbols != ring.symbols:
            c = c.extend(ring.symbols)
        for pexp, v in c.terms.items():
            yield lay.pack(sexp + pexp), v
    else:
        v = rat(c)
        if v:
            yield lay.pack(sexp + (0,) * len(ring.symbols)), v


# functional spellings of the operations


def series_arith(op: str, f: Series, g=None) -> Series:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    if op == "scale":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def series_exp(f: Series) -> Series:
    return f.exp()


def series_log(f: Series) -> Series:
    return f.log()


def series_pow_sym(f: Series, e) -> Series:
    return f.pow_sym(e)


def series_invert(f: Series) -> Series:
    return f.invert()


def series_substitute(f: Series, sigma: Mapping[str, object]) -> Series:
    return f.substitute(sigma)


def egf_coeff(f: Series, m: Sequence[int]) -> Poly:
    return f.egf_coeff(m)


def first_mismatch(lhs: Series, rhs: Series):
    """First differing series monomial in graded order, or None if equal."""
    if lhs.ring != rhs.ring:
        raise RingMismatch("cannot compare series over different rings")
    if lhs._t == rhs._t:
        return None
    a, b = lhs.terms, rhs.terms
    ring = lhs.ring
    zero = Poly(ring.symbols)
    for m in sorted(set(a) | set(b), key=lambda e: (sum(e), e)):
        pa, pb = a.get(m, zero), b.get(m, zero)
        if pa != pb:
            return m, pa, pb
    return None
