"""Hermite polynomials via the umbra M with e^{Mx} = e^{-x^2}."""

from __future__ import annotations

from math import factorial

from .. import sequences as seq
from ..poly import Poly
from ..rat import rat
from ..series import Series, SeriesRing
from ..umbra import family, make_family, ueval
from ..umbrae import hermite_umbra
from .registry import plain_ring, register

SECTION = "hermite"
HALF = rat(1, 2)


def _fam():
    return family(hermite_umbra("M"))


@register("hermite-egf", section=SECTION, anchor="e:hermite",
          description="sum H_n(u) x^n/n! = e^{(2u+M)x} = e^{2ux-x^2}",
          quick={"x": 8}, full={"x": 12}, floor={"x": 2})
def hermite_egf(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "M"))
    x, u, M = ring.gens()
    lhs = ueval(((2 * u + M) * x).exp(), _fam())
    x, u = plain_ring(ring, ["M"]).gens()
    return lhs, (2 * u * x - x * x).exp()


@register("hermite-M-i", section=SECTION, anchor="L:M(i)",
          description="e^{M^2 x} = 1/sqrt(1+4x)",
          quick={"x": 8}, full={"x": 14}, floor={"x": 1})
def hermite_m_i(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("M",))
    x, M = ring.gens()
    lhs = ueval((M * M * x).exp(), _fam())
    (x,) = plain_ring(ring, ["M"]).gens()
    return lhs, (1 + 4 * x).pow_sym(-HALF)


@register("hermite-M-ii", section=SECTION, anchor="L:M(ii)",
          description="e^{My} f(M) = e^{-y^2} f(M-2y) for f(z) = e^{zw}",
          quick={"y": 6, "w": 6}, full={"y": 8, "w": 8}, floor={"y": 1, "w": 1})
def hermite_m_ii(caps):
    ring = SeriesRing.of({"y": caps["y"], "w": caps["w"]}, ("M",))
    y, w, M = ring.gens()
    lhs = ueval((M * y).exp() * (M * w).exp(), _fam())
    rhs = ueval((-(y * y)).exp() * ((M - 2 * y) * w).exp(), _fam())
    return lhs, rhs


@register("hermite-Mquad", section=SECTION, anchor="L:Mquad",
          description="e^{Mx+M^2y} = e^{-x^2/(1+4y)}/sqrt(1+4y)",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8}, floor={"x": 2, "y": 1})
def hermite_mquad(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("M",))
    x, y, M = ring.gens()
    lhs = ueval((M * x + M * M * y).exp(), _fam())
    x, y = plain_ring(ring, ["M"]).gens()
    d = 1 + 4 * y
    return lhs, (-(x * x) * d.invert()).exp() * d.pow_sym(-HALF)


@register("doetsch", section=SECTION, anchor="t:doetsch",
          description="sum H_{2n}(u) x^n/n! = exp(4u^2x/(1+4x))/sqrt(1+4x)",
          quick={"x": 8}, full={"x": 12}, floor={"x": 1})
def doetsch(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "M"))
    x, u, M = ring.gens()
    lhs = ueval(((2 * u + M) ** 2 * x).exp(), _fam())
    x, u = plain_ring(ring, ["M"]).gens()
    d = 1 + 4 * x
    return lhs, d.pow_sym(-HALF) * (4 * u * u * x * d.invert()).exp()


@register("doetsch-mixed", section=SECTION, anchor="t:doetsch2",
          description="sum H_{2m+n}(u) x^m/m! y^n/n! = exp((4u^2x+2uy-y^2)/(1+4x))/sqrt(1+4x)",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 2})
def doetsch_mixed(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "M"))
    x, y, u, M = ring.gens()
    z = 2 * u + M
    lhs = ueval((z * z * x + z * y).exp(), _fam())
    x, y, u = plain_ring(ring, ["M"]).gens()
    d = 1 + 4 * x
    return lhs, d.pow_sym(-HALF) * ((4 * u * u * x + 2 * u * y - y * y) * d.invert()).exp()


@register("doetsch-general", section=SECTION, anchor="general Doetsch form",
          description="sum_m H_{2m+n}(u) x^m/m! = (1+4x)^{-(n+1)/2} H_n(u/sqrt(1+4x)) exp(4u^2x/(1+4x)), y marks n",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 1})
def doetsch_general(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "M"))
    x, y, u, M = ring.gens()
    z = 2 * u + M
    lhs = ueval((z * z * x + z * y).exp(), _fam())
    out = plain_ring(ring, ["M"])
    x, y, u = out.gens()
    d = 1 + 4 * x
    s = d.pow_sym(-HALF)
    rhs = out.zero
    for n in range(caps["y"] + 1):
        hn = Series.from_poly(out, seq.hermite(n)).substitute({"u": u * s})
        rhs = rhs + d.pow_sym(-rat(n + 1, 2)) * hn * y**n * (Poly.const(1) / factorial(n))
    return lhs, rhs * (4 * u * u * x * d.invert()).exp()


def _triple_bound(caps) -> int:
    # the k-term carries x^{2k}
    return caps["x"] // 2


@register("hermite-triple", section=SECTION, anchor="triple Doetsch form",
          description="sum H_{3n}(u) x^n/n! with v = (sqrt(1+48ux)-1)/(24x)",
          quick={"x": 6}, full={"x": 8}, floor={"x": 1}, sum_bound=_triple_bound)
def hermite_triple(caps, extra_terms: int = 0):
    c = caps["x"]
    ring = SeriesRing.of({"x": c}, ("u", "M"))
    x, u, M = ring.gens()
    lhs = ueval(((2 * u + M) ** 3 * x).exp(), _fam())

    out = plain_ring(ring, ["M"])
    wide = out.with_caps({"x": c + 1})
    xw, uw = wide.gens()
    root = (1 + 48 * uw * xw).pow_sym(HALF) - 1
    if root.valuation("x") < 1:
        raise ArithmeticError("sqrt(1+48ux) - 1 is not divisible by x")
    v = root.divide_by_var("x") * rat(1, 24)
    assert v.ring == out
    x, u = out.gens()
    d = 1 + 48 * u * x
    total = out.zero
    for n in range(_triple_bound(caps) + 1 + extra_terms):
        coef = rat((-1) ** n * factorial(6 * n), factorial(3 * n) * factorial(2 * n))
        total = total + d.pow_sym(-rat(3 * n, 2)) * x ** (2 * n) * coef
    rhs = (8 * v**3 * x + 144 * v**4 * x * x).exp() * d.pow_sym(-rat(1, 4)) * total
    return lhs, rhs


@register("mehler", section=SECTION, anchor="Thm mehler",
          description="sum H_n(u) H_n(v) x^n/n! = exp(4(uvx-(u^2+v^2)x^2)/(1-4x^2))/sqrt(1-4x^2)",
          quick={"x": 8}, full={"x": 10}, floor={"x": 2})
def mehler(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "v", "M", "N"))
    x, u, v, M, N = ring.gens()
    fam = make_family("exchangeable", umbra=hermite_umbra("M"), names=("M", "N"))
    lhs = ueval(((2 * u + M) * (2 * v + N) * x).exp(), fam)
    x, u, v = plain_ring(ring, ["M", "N"]).gens()
    d = 1 - 4 * x * x
    return lhs, d.pow_sym(-HALF) * (4 * (u * v * x - (u * u + v * v) * x * x) * d.invert()).exp()
