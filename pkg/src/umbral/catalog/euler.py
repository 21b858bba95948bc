"""x sech x, median Genocchi numbers and the Genocchi umbra."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .. import sequences as seq
from ..poly import Poly
from ..rat import rat
from ..series import SeriesRing
from ..umbra import family, ueval
from ..umbrae import bernoulli_umbra, genocchi_umbra, sinh_umbra, xexp_umbra, xsech_umbra
from .registry import indexed, register

SECTION = "euler"


@lru_cache(maxsize=None)
def _fams():
    return {
        "F": family(xsech_umbra("F")),
        "A": family(xexp_umbra("A")),
        "BC": family(bernoulli_umbra("B"), sinh_umbra("C")),
        "g": family(genocchi_umbra("g")),
    }


def _ev(p: Poly, which: str):
    return ueval(p, _fams()[which]).to_rat()


_F = Poly.var("F", ("F",))
_A = Poly.var("A", ("A",))
_Bv, _Cv = (Poly.var(s, ("B", "C")) for s in ("B", "C"))
_H = 4 * _Bv + _Cv


def _cosh(x):
    return (x.exp() + (-x).exp()) * rat(1, 2)


def _sinh(x):
    return (x.exp() - (-x).exp()) * rat(1, 2)


@register("sech-split", section=SECTION, anchor="e:sech",
          description="x sech x = 2x e^{-x} - sinh x * B(4x), B(x) = x/(e^x - 1)",
          quick={"x": 12}, full={"x": 20}, floor={"x": 2})
def sech_split(caps):
    c = caps["x"]
    ring = SeriesRing.of({"x": c})
    x = ring.gen("x")
    lhs = x * _cosh(x).invert()
    xw = SeriesRing.of({"x": c + 1}).gen("x")
    b4 = 4 * ((4 * xw).exp() - 1).divide_by_var("x").invert()
    return lhs, 2 * x * (-x).exp() - _sinh(x) * b4


@register("sech-umbral", section=SECTION, anchor="e:ABH",
          description="F^n = 2A^n - (4B+C)^n with e^{Fx} = x sech x, e^{Ax} = xe^{-x}, e^{Bx} = x/(e^x-1), e^{Cx} = sinh x",
          quick={"x": 12}, full={"x": 20}, floor={"x": 1})
def sech_umbral(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("F", "A", "B", "C"))
    x, F, A, B, C = ring.gens()
    f = _fams()
    lhs = ueval(ueval((F * x).exp(), f["F"]), family(xexp_umbra("A"), bernoulli_umbra("B"), sinh_umbra("C")))
    pa = ueval(ueval((A * x).exp(), f["A"]), f["BC"])
    pbc = ueval(ueval(((4 * B + C) * x).exp(), f["BC"]), f["A"])
    rhs = ueval(2 * pa - pbc, f["F"])
    return lhs.restrict_symbols(()), rhs.restrict_symbols(())


@register("xsech-FABH", section=SECTION, anchor="e:FABH",
          description="F^j (F^2-1)^n = 2A^j (A^2-1)^n - (4B+C)^j ((4B+C)^2-1)^n",
          quick={"j": 7, "n": 6}, full={"j": 9, "n": 9}, floor={"j": 1, "n": 1})
def xsech_fabh(caps):
    lhs = indexed(caps, lambda j, n: _ev(_F**j * (_F * _F - 1) ** n, "F"))
    rhs = indexed(caps, lambda j, n: 2 * _ev(_A**j * (_A * _A - 1) ** n, "A")
                  - _ev(_H**j * (_H * _H - 1) ** n, "BC"))
    return lhs, rhs


def _e_a(j: int, n: int):
    sign = 1 if j % 2 else -1  # (-1)^{j-1}
    if n == 0:
        return 2 * sign * j
    if n == 1:
        return 4 * sign
    return 0


@register("xsech-A", section=SECTION, anchor="e:A",
          description="2A^j (A^2-1)^n = 2(-1)^{j-1} j, 4(-1)^{j-1}, 0 for n = 0, 1, >= 2",
          quick={"j": 8, "n": 6}, full={"j": 12, "n": 9}, floor={"j": 1, "n": 2})
def xsech_a(caps):
    return (indexed(caps, lambda j, n: 2 * _ev(_A**j * (_A * _A - 1) ** n, "A")),
            indexed(caps, _e_a))


@register("xsech-BH", section=SECTION, anchor="e:BH",
          description="(4B+C)^j ((4B+C)^2-1)^n = 2^{3n} (4B+C)^j (2B^2+BC)^n",
          quick={"j": 7, "n": 6}, full={"j": 9, "n": 9}, floor={"j": 1, "n": 1})
def xsech_bh(caps):
    lhs = indexed(caps, lambda j, n: _ev(_H**j * (_H * _H - 1) ** n, "BC"))
    rhs = indexed(caps, lambda j, n: 8**n * _ev(_H**j * (2 * _Bv * _Bv + _Bv * _Cv) ** n, "BC"))
    return lhs, rhs


@register("median-lemma", section=SECTION, anchor="L:median",
          description="2^{2n} H_{2n+1} = F(F^2-1)^n = sum (-1)^{n-i} C(n,i) F_{2i+1} = sum (-1)^{n-i} C(n,i) (2i+1) E_{2i} (r picks the route)",
          quick={"n": 12, "r": 2}, full={"n": 20, "r": 2}, floor={"n": 1, "r": 2})
def median_lemma(caps):
    def rhs(n, r):
        if r == 0:
            return _ev(_F * (_F * _F - 1) ** n, "F")
        if r == 1:
            return sum((-1) ** (n - i) * comb(n, i) * seq.xsech(2 * i + 1) for i in range(n + 1))
        return sum((-1) ** (n - i) * comb(n, i) * (2 * i + 1) * seq.euler(2 * i) for i in range(n + 1))

    return indexed(caps, lambda n, r: 4**n * seq.median_genocchi(n)), indexed(caps, rhs)


@register("genocchi-umbral", section=SECTION, anchor="L:median proof",
          description="e^{gx} = 2 e^{(F-1)x/2}, i.e. g^n = 2((F-1)/2)^n",
          quick={"x": 12}, full={"x": 20}, floor={"x": 1})
def genocchi_umbral(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("g", "F"))
    x, g, F = ring.gens()
    f = _fams()
    lhs = ueval(ueval((g * x).exp(), f["g"]), f["F"])
    rhs = ueval(ueval(2 * ((F - 1) * x * rat(1, 2)).exp(), f["F"]), f["g"])
    return lhs, rhs


@register("median-umbral", section=SECTION, anchor="L:median proof",
          description="2^{2n} (g+1)^n g^{n+1} = (F-1)(F^2-1)^n",
          quick={"n": 12}, full={"n": 20}, floor={"n": 1})
def median_umbral(caps):
    g = Poly.var("g", ("g",))
    return (indexed(caps, lambda n: 4**n * _ev((g + 1) ** n * g ** (n + 1), "g")),
            indexed(caps, lambda n: _ev((_F - 1) * (_F * _F - 1) ** n, "F")))
