"""Charlier polynomials and the derangement corollaries."""

from __future__ import annotations

from math import factorial

from ..poly import Poly
from ..series import SeriesRing
from ..umbra import family, ueval
from ..umbrae import charlier_umbra, factorial_umbra
from .registry import plain_ring, register

SECTION = "charlier"


def _x_bound(caps) -> int:
    # every k-term carries x^k, so terms past the x-cap vanish in-cap
    return caps["x"]


@register("charlier-egf", section=SECTION, anchor="eq:1",
          description="sum C_n(u,alpha) x^n/n! = e^{ux} (1-x)^{-alpha}",
          quick={"x": 8}, full={"x": 12}, floor={"x": 2})
def charlier_egf(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "alpha", "A"))
    x, u, alpha, A = ring.gens()
    fam = family(charlier_umbra("A", "alpha"))
    lhs = ueval(((A + u) * x).exp(), fam)
    out = plain_ring(ring, ["A"])
    x, u, alpha = out.gens()
    rhs = (u * x).exp() * (1 - x).pow_sym(-alpha)
    return lhs, rhs


@register("lemma-L1", section=SECTION, anchor="L:1",
          description="e^{Ay} f(A) = (1-y)^{-alpha} f(A/(1-y)) for f(z) = e^{zw}",
          quick={"y": 6, "w": 6}, full={"y": 8, "w": 8}, floor={"y": 1, "w": 1})
def lemma_l1(caps):
    ring = SeriesRing.of({"y": caps["y"], "w": caps["w"]}, ("alpha", "A"))
    y, w, alpha, A = ring.gens()
    fam = family(charlier_umbra("A", "alpha"))
    lhs = ueval((A * y).exp() * (A * w).exp(), fam)
    rhs = ueval((1 - y).pow_sym(-alpha) * (A * w * (1 - y).invert()).exp(), fam)
    return lhs, rhs


@register("lemma-L1-monomial", section=SECTION, anchor="L:1",
          description="e^{Ay} A^k = (1-y)^{-alpha} (A/(1-y))^k for k <= K (t marks k)",
          quick={"y": 6, "t": 6}, full={"y": 8, "t": 8}, floor={"y": 1, "t": 1})
def lemma_l1_monomial(caps):
    ring = SeriesRing.of({"y": caps["y"], "t": caps["t"]}, ("alpha", "A"))
    y, t, alpha, A = ring.gens()
    fam = family(charlier_umbra("A", "alpha"))
    s = (1 - y).invert()
    f_lhs = ring.zero
    f_rhs = ring.zero
    for k in range(caps["t"] + 1):
        f_lhs = f_lhs + A**k * t**k
        f_rhs = f_rhs + (A * s) ** k * t**k
    lhs = ueval((A * y).exp() * f_lhs, fam)
    rhs = ueval((1 - y).pow_sym(-alpha) * f_rhs, fam)
    return lhs, rhs


def _alpha_rising(alpha, n: int):
    out = 1
    for i in range(n):
        out = out * (alpha + i)
    return out


@register("charlier-even", section=SECTION, anchor="T:double",
          description="sum C_{2m}(u,alpha) x^m/m! = e^{u^2x} sum_k (alpha)_{2k} x^k/k! / (1-2ux)^{2k+alpha}",
          quick={"x": 7}, full={"x": 10}, floor={"x": 1}, sum_bound=_x_bound)
def charlier_even(caps, extra_terms: int = 0):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "alpha", "A"))
    x, u, alpha, A = ring.gens()
    lhs = ueval(((A + u) ** 2 * x).exp(), family(charlier_umbra("A", "alpha")))
    out = plain_ring(ring, ["A"])
    x, u, alpha = out.gens()
    base = 1 - 2 * u * x
    rhs = out.zero
    for k in range(_x_bound(caps) + 1 + extra_terms):
        rhs = rhs + _alpha_rising(alpha, 2 * k) * base.pow_sym(-(2 * k + alpha)) * x**k * (
            Poly.const(1) / factorial(k))
    return lhs, (u * u * x).exp() * rhs


@register("charlier-mixed", section=SECTION, anchor="T:double generalization",
          description="sum C_{2m+n}(u,alpha) x^m/m! y^n/n! = e^{u^2x+uy} sum_k (alpha)_{2k} x^k/k! / (1-2ux-y)^{2k+alpha}",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 1},
          sum_bound=_x_bound)
def charlier_mixed(caps, extra_terms: int = 0):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "alpha", "A"))
    x, y, u, alpha, A = ring.gens()
    z = A + u
    lhs = ueval((z * z * x + z * y).exp(), family(charlier_umbra("A", "alpha")))
    out = plain_ring(ring, ["A"])
    x, y, u, alpha = out.gens()
    base = 1 - 2 * u * x - y
    rhs = out.zero
    for k in range(_x_bound(caps) + 1 + extra_terms):
        rhs = rhs + _alpha_rising(alpha, 2 * k) * base.pow_sym(-(2 * k + alpha)) * x**k * (
            Poly.const(1) / factorial(k))
    return lhs, (u * u * x + u * y).exp() * rhs


@register("charlier-bilinear", section=SECTION, anchor="T:bilC",
          description="sum C_n(u,alpha) C_n(v,beta) x^n/n! (bilinear generating function)",
          quick={"x": 6}, full={"x": 8}, floor={"x": 1}, sum_bound=_x_bound)
def charlier_bilinear(caps, extra_terms: int = 0):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "v", "alpha", "beta", "A", "B"))
    x, u, v, alpha, beta, A, B = ring.gens()
    fam = family(charlier_umbra("A", "alpha"), charlier_umbra("B", "beta"))
    lhs = ueval(((A + u) * (B + v) * x).exp(), fam)
    out = plain_ring(ring, ["A", "B"])
    x, u, v, alpha, beta = out.gens()
    one_vx, one_ux = 1 - v * x, 1 - u * x
    rhs = out.zero
    for k in range(_x_bound(caps) + 1 + extra_terms):
        term = _alpha_rising(alpha, k) * _alpha_rising(beta, k)
        term = term * one_vx.pow_sym(-(alpha + k)) * one_ux.pow_sym(-(beta + k))
        rhs = rhs + term * x**k * (Poly.const(1) / factorial(k))
    return lhs, (u * v * x).exp() * rhs


@register("derangement-even", section=SECTION, anchor="derangement corollary of T:double",
          description="sum D_{2m} x^m/m! = e^x sum_k (2k)! x^k/k! / (1+2x)^{2k+1}",
          quick={"x": 8}, full={"x": 12}, floor={"x": 1}, sum_bound=_x_bound)
def derangement_even(caps, extra_terms: int = 0):
    ring = SeriesRing.of({"x": caps["x"]}, ("A",))
    x, A = ring.gens()
    lhs = ueval(((A - 1) ** 2 * x).exp(), family(factorial_umbra("A")))
    out = plain_ring(ring, ["A"])
    (x,) = out.gens()
    inv = (1 + 2 * x).invert()
    rhs = out.zero
    for k in range(_x_bound(caps) + 1 + extra_terms):
        rhs = rhs + inv ** (2 * k + 1) * x**k * (Poly.const(factorial(2 * k)) / factorial(k))
    return lhs, x.exp() * rhs


@register("derangement-square", section=SECTION, anchor="derangement corollary of T:bilC",
          description="sum D_n^2 x^n/n! = e^x sum_k k! x^k / (1+x)^{2k+2}",
          quick={"x": 8}, full={"x": 12}, floor={"x": 1}, sum_bound=_x_bound)
def derangement_square(caps, extra_terms: int = 0):
    ring = SeriesRing.of({"x": caps["x"]}, ("A", "B"))
    x, A, B = ring.gens()
    lhs = ueval(((A - 1) * (B - 1) * x).exp(), family(factorial_umbra("A"), factorial_umbra("B")))
    out = plain_ring(ring, ["A", "B"])
    (x,) = out.gens()
    inv = (1 + x).invert()
    rhs = out.zero
    for k in range(_x_bound(caps) + 1 + extra_terms):
        rhs = rhs + inv ** (2 * k + 2) * x**k * factorial(k)
    return lhs, x.exp() * rhs


