"""q-series identities and the noncommutative Rogers-Szego proof."""

from __future__ import annotations

from .. import sequences as seq
from ..qseries import NCPoly, inv_q_factorial, q_eval, q_exp, q_exp_scalar, q_pochhammer, q_ring
from ..series import Series, SeriesRing
from .registry import register

SECTION = "q-series"
QCAPS = {"x": 6, "q": 6}


def _q_poly(ring: SeriesRing, p, rename: dict[str, str] | None = None) -> Series:
    """A Poly over symbols including 'q' as a series in ring (q a series variable)."""
    rename = rename or {}
    out = ring.zero
    for exps, c in p.terms.items():
        term = ring.const(c)
        for s, e in zip(p.symbols, exps):
            if e:
                term = term * ring.gen(rename.get(s, s)) ** e
        out = out + term
    return out


@register("q-binomial-theorem", section=SECTION, anchor="q-binomial theorem",
          description="sum (a)_n x^n/(q)_n = (ax)_inf/(x)_inf",
          quick=QCAPS, full={"x": 8, "q": 8}, floor={"x": 1, "q": 1})
def q_binomial_theorem(caps):
    ring = q_ring(caps["x"], caps["q"], ("a",))
    x, q, a = ring.gens()
    lhs = ring.zero
    for n in range(caps["x"] + 1):
        lhs = lhs + q_pochhammer(a, n) * inv_q_factorial(ring, n) * x**n
    rhs = q_pochhammer(a * x, None) * q_pochhammer(x, None).invert()
    return lhs, rhs


@register("q-exp-inverse", section=SECTION, anchor="q-binomial theorem, a = 0",
          description="e(x) = 1/(x)_inf",
          quick=QCAPS, full={"x": 10, "q": 10}, floor={"x": 1, "q": 1})
def q_exp_inverse(caps):
    ring = q_ring(caps["x"], caps["q"], ())
    x = ring.gen("x")
    return q_exp_scalar(x) * q_pochhammer(x, None), ring.one


@register("q-exp-product", section=SECTION, anchor="e(q^j x) = (x)_j e(x)",
          description="e(q^j x) = (x)_j e(x) for j <= 3 (J marks j)",
          quick=QCAPS, full={"x": 8, "q": 8}, floor={"x": 1, "q": 1})
def q_exp_product(caps):
    ring = SeriesRing.of({"x": caps["x"], "q": caps["q"], "J": 3})
    x, q, J = ring.gens()
    lhs = ring.zero
    rhs = ring.zero
    ex = q_exp_scalar(x)
    for j in range(4):
        lhs = lhs + q_exp_scalar(q**j * x) * J**j
        rhs = rhs + q_pochhammer(x, j) * ex * J**j
    return lhs, rhs


@register("q-nonc-binomial", section=SECTION, anchor="eq:nonc",
          description="(A+B)^n = sum_k [n,k] A^k B^{n-k} for BA = qAB (x marks n)",
          quick=QCAPS, full={"x": 8, "q": 12}, floor={"x": 1, "q": 1})
def q_nonc_binomial(caps):
    ring = q_ring(caps["x"], caps["q"], ())
    x = ring.gen("x")
    A, B = NCPoly.word(ring, "A"), NCPoly.word(ring, "B")
    lhs = NCPoly.scalar(ring.zero)
    rhs = NCPoly.scalar(ring.zero)
    power = NCPoly.scalar(ring.one)
    for n in range(caps["x"] + 1):
        lhs = lhs + power * x**n
        power = power * (A + B)
        for k in range(n + 1):
            qb = _q_poly(ring, seq.gaussian_binomial(n, k))
            rhs = rhs + A**k * B ** (n - k) * (qb * x**n)
    return lhs.as_series(), rhs.as_series()


@register("q-exp-sum", section=SECTION, anchor="e((A+B)x) = e(Ax)e(Bx)",
          description="e((A+B)x) = e(Ax) e(Bx) for BA = qAB",
          quick=QCAPS, full={"x": 8, "q": 8}, floor={"x": 1, "q": 1})
def q_exp_sum(caps):
    ring = q_ring(caps["x"], caps["q"], ())
    x = ring.gen("x")
    A, B = NCPoly.word(ring, "A"), NCPoly.word(ring, "B")
    lhs = q_exp((A + B) * x)
    rhs = q_exp(A * x) * q_exp(B * x)
    return lhs.as_series(), rhs.as_series()


def _rs_rhs(ring):
    x, q, u, v = ring.gens()
    num = q_pochhammer(u * v * x * x, None)
    den = (q_pochhammer(u * v * x, None) * q_pochhammer(u * x, None)
           * q_pochhammer(v * x, None) * q_pochhammer(x, None))
    return num * den.invert()


@register("rogers-szego-bilinear", section=SECTION, anchor="Rogers-Szego bilinear theorem",
          description="sum R_n(u) R_n(v) x^n/(q)_n = (uvx^2)_inf/((uvx)_inf (ux)_inf (vx)_inf (x)_inf), via eval of e((A+B)(C+D)x)",
          quick=QCAPS, full={"x": 7, "q": 7}, floor={"x": 1, "q": 1})
def rogers_szego_bilinear(caps):
    ring = q_ring(caps["x"], caps["q"], ("u", "v"))
    x = ring.gen("x")
    A, B, C, D = (NCPoly.word(ring, ch) for ch in "ABCD")
    lhs = q_eval(q_exp((A + B) * (C + D) * x))
    return lhs, _rs_rhs(ring)


@register("rogers-szego-direct", section=SECTION, anchor="Rogers-Szego bilinear theorem",
          description="the same bilinear sum built from R_n(u) = sum_k [n,k] u^k directly",
          quick=QCAPS, full={"x": 7, "q": 7}, floor={"x": 1, "q": 1})
def rogers_szego_direct(caps):
    ring = q_ring(caps["x"], caps["q"], ("u", "v"))
    x = ring.gen("x")
    lhs = ring.zero
    for n in range(caps["x"] + 1):
        rn = seq.rogers_szego(n)
        ru = _q_poly(ring, rn)
        rv = _q_poly(ring, rn, {"u": "v"})
        lhs = lhs + ru * rv * inv_q_factorial(ring, n) * x**n
    return lhs, _rs_rhs(ring)
