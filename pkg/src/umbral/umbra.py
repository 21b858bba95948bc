"""Umbrae as moment functionals and the evaluation map.

An umbra is a name plus a moment sequence n -> Poly.  A family groups
umbrae under one joint functional: independent products, exchangeable
copies, the delta-pair ``A^m B^n = delta(m, n) m!``, products of families,
or a custom joint moment.  :func:`ueval` replaces every umbral monomial of a
series (or polynomial) by its joint moment.

Umbral symbols are ordinary coefficient symbols of the ring, so an admissible
series is simply one whose coefficients are polynomials in them.
"""

from __future__ import annotations

import threading
from math import factorial
from typing import Callable, Mapping, Sequence

from .poly import Poly, RingMismatch, _add_into
from .rat import rat
from .series import Series, SeriesRing, _mul_dicts


class UmbralError(ValueError):
    """Unknown umbral symbol, cap exceeded, or malformed family."""


def _as_poly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly.const(v)


class Umbra:
    """A named moment sequence with memoized values.

    ``max_degree`` bounds the moments that can be queried (None = unbounded).
    """

    def __init__(self, name: str, moment: Callable[[int], object], max_degree: int | None = None):
        self.name = name
        self._moment = moment
        self.max_degree = max_degree
        self._memo: dict[int, Poly] = {}
        self._lock = threading.Lock()

    def moment(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative moment index")
        if self.max_degree is not None and n > self.max_degree:
            raise UmbralError(
                f"umbra {self.name}: moment {n} requested beyond cap {self.max_degree}"
            )
        v = self._memo.get(n)
        if v is None:
            v = _as_poly(self._moment(n))
            with self._lock:
                self._memo[n] = v
        return v

    def renamed(self, name: str) -> "Umbra":
        """An exchangeable copy: same moments, new symbol."""
        return Umbra(name, self.moment, self.max_degree)

    def __repr__(self):
        return f"Umbra({self.name!r})"


def umbra_from_egf(name: str, f: Series) -> Umbra:
    """moment(n) = n! [x^n] f for a one-variable series f."""
    if f.ring.nvars != 1:
        raise UmbralError("umbra_from_egf needs a one-variable series")
    cap = f.ring.spec.caps[0]
    return Umbra(name, lambda n: f.egf_coeff((n,)), max_degree=cap)


class UmbraFamily:
    """Joint moment functional over an ordered tuple of umbral symbols."""

    KINDS = ("independent-product", "exchangeable", "delta-pair", "product", "custom")

    def __init__(self, kind: str, symbols: Sequence[str], joint: Callable[[tuple], Poly],
                 members: Sequence = ()):
        if kind not in self.KINDS:
            raise UmbralError(f"unknown family kind {kind!r}")
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise UmbralError(f"duplicate umbral symbols {symbols}")
        self.kind = kind
        self.symbols = symbols
        self._joint = joint
        self.members = tuple(members)
        self._memo: dict[tuple, Poly] = {}
        self._lock = threading.Lock()

    def joint_moment(self, exps: Sequence[int]) -> Poly:
        exps = tuple(exps)
        if len(exps) != len(self.symbols):
            raise UmbralError(f"expected {len(self.symbols)} exponents")
        v = self._memo.get(exps)
        if v is None:
            v = _as_poly(self._joint(exps))
            with self._lock:
                self._memo[exps] = v
        return v

    def __mul__(self, other: "UmbraFamily") -> "UmbraFamily":
        return make_family("product", families=[self, other])

    def __repr__(self):
        return f"UmbraFamily({self.kind!r}, {self.symbols})"


def _mul_moments(values: Sequence[Poly]) -> Poly:
    syms: list[str] = []
    for v in values:
        for s in v.symbols:
            if s not in syms:
                syms.append(s)
    out = Poly.const(1, syms)
    for v in values:
        out = out * v.extend(syms)
    return out


def make_family(kind: str, umbrae: Sequence[Umbra] = (), names: Sequence[str] = (),
                umbra: Umbra | None = None, families: Sequence[UmbraFamily] = (),
                joint: Callable | None = None) -> UmbraFamily:
    """Build a family.

    * ``independent-product``: ``umbrae=[...]``
    * ``exchangeable``: ``umbra=M, names=("M", "N")``
    * ``delta-pair``: ``names=("A", "B")``
    * ``product``: ``families=[...]`` (mutually independent blocks)
    * ``custom``: ``names=..., joint=callable(exps) -> Poly``
    """
    if kind == "independent-product":
        umbrae = tuple(umbrae)
        return UmbraFamily(
            kind,
            [u.name for u in umbrae],
            lambda e: _mul_moments([u.moment(k) for u, k in zip(umbrae, e)]),
            umbrae,
        )
    if kind == "exchangeable":
        if umbra is None or not names:
            raise UmbralError("exchangeable needs umbra= and names=")
        copies = tuple(umbra.renamed(n) for n in names)
        return UmbraFamily(
            kind,
            names,
            lambda e: _mul_moments([u.moment(k) for u, k in zip(copies, e)]),
            copies,
        )
    if kind == "delta-pair":
        if len(names) != 2:
            raise UmbralError("a delta-pair has exactly two symbols")
        return UmbraFamily(
            kind, names, lambda e: Poly.const(factorial(e[0]) if e[0] == e[1] else 0)
        )
    if kind == "product":
        fams = tuple(families)
        syms = [s for f in fams for s in f.symbols]
        if len(set(syms)) != len(syms):
            raise UmbralError(f"duplicate umbral symbols {syms}")
        cuts = []
        pos = 0
        for f in fams:
            cuts.append((pos, pos + len(f.symbols)))
            pos += len(f.symbols)

        def joint_product(e):
            return _mul_moments([f.joint_moment(e[a:b]) for f, (a, b) in zip(fams, cuts)])

        return UmbraFamily(kind, syms, joint_product, fams)
    if kind == "custom":
        if joint is None:
            raise UmbralError("custom family needs joint=")
        return UmbraFamily(kind, names, joint)
    raise UmbralError(f"unknown family kind {kind!r}")


def family(*parts) -> UmbraFamily:
    """Independent product of umbrae and/or families, in order."""
    fams = []
    for p in parts:
        if isinstance(p, Umbra):
            fams.append(make_family("independent-product", umbrae=[p]))
        else:
            fams.append(p)
    if len(fams) == 1:
        return fams[0]
    return make_family("product", families=fams)


def _split_positions(symbols: tuple, fam: UmbraFamily):
    upos = []
    for s in fam.symbols:
        upos.append(symbols.index(s) if s in symbols else None)
    rest = [i for i, s in enumerate(symbols) if s not in fam.symbols]
    return upos, rest


def ueval(s, fam: UmbraFamily):
    """Apply the family's functional to a Series or Poly.

    Umbral symbols are removed from the ring; each umbral monomial becomes its
    joint moment (a Poly in the remaining symbols).  Umbrae of the family that
    do not occur in a term contribute their zeroth moment.
    """
    if isinstance(s, Poly):
        ring = SeriesRing.of({}, s.symbols)
        return ueval(Series.from_poly(ring, s), fam).constant_term()
    if not isinstance(s, Series):
        raise TypeError("ueval expects a Series or Poly")
    ring = s.ring
    upos, rest = _split_positions(ring.symbols, fam)
    new_symbols = tuple(ring.symbols[i] for i in rest)
    new_ring = ring.with_symbols(new_symbols)
    lay, nlay = ring.layout, new_ring.layout
    nv = ring.nvars

    groups: dict[tuple, dict] = {}
    for k, c in s._t.items():
        e = lay.unpack(k)
        params = e[nv:]
        uexp = tuple(0 if p is None else params[p] for p in upos)
        nk = nlay.pack(e[:nv] + tuple(params[i] for i in rest))
        _add_into(groups.setdefault(uexp, {}), nk, c)

    out: dict = {}
    shift = new_ring.series_bits
    for uexp, d in groups.items():
        m = fam.joint_moment(uexp)
        if not m:
            continue
        try:
            m = m.extend(new_symbols)
        except RingMismatch as exc:
            raise UmbralError(f"moment symbols {m.symbols} not in ring {new_symbols}") from exc
        mdict = {pk << shift: c for pk, c in m._t.items()}
        for k, c in _mul_dicts(d, mdict, nlay).items():
            _add_into(out, k, c)
    return Series._raw(new_ring, out)


def umbral_build(exponent: Series) -> Series:
    """e^{exponent} over a ring containing umbral symbols, umbrae kept symbolic."""
    return exponent.exp()


def check_symbols(ring: SeriesRing, fam: UmbraFamily) -> None:
    unknown = [s for s in fam.symbols if s not in ring.symbols]
    if unknown:
        raise UmbralError(f"family symbols {unknown} not in ring")


def constant_umbra(name: str, values: Mapping[int, object] | Callable[[int], object]) -> Umbra:
    if callable(values):
        return Umbra(name, values)
    return Umbra(name, lambda n: values.get(n, 0), max_degree=max(values) if values else 0)


def rising_umbra(name: str, param: str) -> Umbra:
    """A^n = (param)_n, the Charlier umbra."""
    a = Poly.var(param, (param,))

    def mom(n: int) -> Poly:
        out = Poly.const(1, (param,))
        for i in range(n):
            out = out * (a + i)
        return out

    return Umbra(name, mom)


def scalar_umbra(name: str, seq: Callable[[int], object]) -> Umbra:
    return Umbra(name, lambda n: Poly.const(rat(seq(n))))


__all__ = [
    "Umbra",
    "UmbraFamily",
    "UmbralError",
    "family",
    "make_family",
    "rising_umbra",
    "scalar_umbra",
    "ueval",
    "umbra_from_egf",
    "umbral_build",
]
