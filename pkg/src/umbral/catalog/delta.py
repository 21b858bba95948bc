"""Carlitz/Zeilberger two-variable Hermite polynomials via delta-pair umbrae.

The pair (A, B) has A^m B^n = delta_{m,n} m!, i.e. e^{Ax+By} = e^{xy}.
"""

from __future__ import annotations

from math import comb

from ..rat import rat
from ..series import Series, SeriesRing
from ..umbra import family, make_family, ueval
from .registry import plain_ring, register

SECTION = "delta-pair"
HALF = rat(1, 2)


def _pair(a: str = "A", b: str = "B"):
    return make_family("delta-pair", names=(a, b))


def _two_pairs():
    return family(_pair("A1", "B1"), _pair("A2", "B2"))


@register("ab-pair", section=SECTION, anchor="e:AB1",
          description="e^{Ax+By} = e^{xy}",
          quick={"x": 8, "y": 8}, full={"x": 10, "y": 10}, floor={"x": 1, "y": 1})
def ab_pair(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("A", "B"))
    x, y, A, B = ring.gens()
    lhs = ueval((A * x + B * y).exp(), _pair())
    x, y = plain_ring(ring, ["A", "B"]).gens()
    return lhs, (x * y).exp()


@register("lemma-AB1-i", section=SECTION, anchor="L:AB1(i)",
          description="e^{Ar+Bs} f(A,B) = e^{rs} f(A+s,B+r) for f = e^{Ap+Bw} (shifts as in the proof)",
          quick={"r": 6, "s": 6, "p": 6, "w": 6}, full={"r": 8, "s": 8, "p": 8, "w": 8},
          floor={"r": 1, "s": 1, "p": 1, "w": 1},
          notes="the displayed statement swaps the shifts; f(A+r,B+s) fails already for f = B")
def lemma_ab1_i(caps):
    ring = SeriesRing.of({k: caps[k] for k in ("r", "s", "p", "w")}, ("A", "B"))
    r, s, p, w, A, B = ring.gens()
    lhs = ueval((A * r + B * s).exp() * (A * p + B * w).exp(), _pair())
    rhs = ueval((r * s).exp() * ((A + s) * p + (B + r) * w).exp(), _pair())
    return lhs, rhs


def ab1_i_literal(caps):
    """The statement exactly as displayed, f(A+r, B+s); kept out of the catalog."""
    ring = SeriesRing.of({k: caps[k] for k in ("r", "s", "p", "w")}, ("A", "B"))
    r, s, p, w, A, B = ring.gens()
    lhs = ueval((A * r + B * s).exp() * (A * p + B * w).exp(), _pair())
    rhs = ueval((r * s).exp() * ((A + r) * p + (B + s) * w).exp(), _pair())
    return lhs, rhs


@register("lemma-AB1-ii", section=SECTION, anchor="L:AB1(ii)",
          description="e^{Ax+By+ABz} = e^{xy/(1-z)}/(1-z)",
          quick={"x": 6, "y": 6, "z": 6}, full={"x": 8, "y": 8, "z": 8},
          floor={"x": 1, "y": 1, "z": 1})
def lemma_ab1_ii(caps):
    ring = SeriesRing.of({k: caps[k] for k in ("x", "y", "z")}, ("A", "B"))
    x, y, z, A, B = ring.gens()
    lhs = ueval((A * x + B * y + A * B * z).exp(), _pair())
    x, y, z = plain_ring(ring, ["A", "B"]).gens()
    inv = (1 - z).invert()
    return lhs, inv * (x * y * inv).exp()


@register("lemma-AB2", section=SECTION, anchor="L:AB2",
          description="e^{Av+Bw+A^2x+ABy+B^2z} = Q^{-1/2} exp((vw(1-y)+v^2z+w^2x)/Q), Q = (1-y)^2-4xz",
          quick={"v": 6, "w": 6, "x": 6, "y": 6, "z": 6}, full={"v": 7, "w": 7, "x": 7, "y": 7, "z": 7},
          floor={k: 1 for k in "vwxyz"})
def lemma_ab2(caps):
    ring = SeriesRing.of({k: caps[k] for k in "vwxyz"}, ("A", "B"))
    v, w, x, y, z, A, B = ring.gens()
    lhs = ueval((A * v + B * w + A * A * x + A * B * y + B * B * z).exp(), _pair())
    v, w, x, y, z = plain_ring(ring, ["A", "B"]).gens()
    Q = (1 - y) ** 2 - 4 * x * z
    num = v * w * (1 - y) + v * v * z + w * w * x
    return lhs, Q.pow_sym(-HALF) * (num * Q.invert()).exp()


@register("carlitz-egf", section=SECTION, anchor="Carlitz generating function",
          description="sum H_{m,n}(u,v) x^m/m! y^n/n! = e^{ux+vy+xy}, H_{m,n}(u,v) = (u+A)^m (v+B)^n",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8}, floor={"x": 1, "y": 1})
def carlitz_egf(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "v", "A", "B"))
    x, y, u, v, A, B = ring.gens()
    lhs = ueval(((u + A) * x + (v + B) * y).exp(), _pair())
    x, y, u, v = plain_ring(ring, ["A", "B"]).gens()
    return lhs, (u * x + v * y + x * y).exp()


@register("zeilberger-egf", section=SECTION, anchor="straight Hermite generating function",
          description="sum H_{m,n}(w) x^m/m! y^n/n! = e^{x+y+wxy}, H_{m,n}(w) = (1+A)^m (1+wB)^n",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8}, floor={"x": 1, "y": 1})
def zeilberger_egf(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("w", "A", "B"))
    x, y, w, A, B = ring.gens()
    lhs = ueval(((1 + A) * x + (1 + w * B) * y).exp(), _pair())
    x, y, w = plain_ring(ring, ["A", "B"]).gens()
    return lhs, (x + y + w * x * y).exp()


@register("carlitz-bilinear", section=SECTION, anchor="e:carlitz",
          description="sum H_{m,n}(u1,v1) H_{m,n}(u2,v2) x^m/m! y^n/n!",
          quick={"x": 6, "y": 6}, full={"x": 7, "y": 7},
          floor={"x": 1, "y": 1})
def carlitz_bilinear(caps):
    syms = ("u1", "v1", "u2", "v2", "A1", "B1", "A2", "B2")
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, syms)
    x, y, u1, v1, u2, v2, A1, B1, A2, B2 = ring.gens()
    lhs = ueval(((u1 + A1) * (u2 + A2) * x + (v1 + B1) * (v2 + B2) * y).exp(), _two_pairs())
    x, y, u1, v1, u2, v2 = plain_ring(ring, ["A1", "B1", "A2", "B2"]).gens()
    inv = (1 - x * y).invert()
    num = u1 * u2 * x + v1 * v2 * y + (u1 * v1 + u2 * v2) * x * y
    return lhs, inv * (num * inv).exp()


@register("zeilberger-bilinear", section=SECTION, anchor="e:zeil",
          description="sum H_{m,n}(u) H_{m,n}(v) x^m/m! y^n/n! = exp((x+y+(u+v)xy)/(1-uvxy))/(1-uvxy)",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 1})
def zeilberger_bilinear(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "v", "A1", "B1", "A2", "B2"))
    x, y, u, v, A1, B1, A2, B2 = ring.gens()
    lhs = ueval(((1 + A1) * (1 + A2) * x + (1 + B1 * u) * (1 + B2 * v) * y).exp(), _two_pairs())
    x, y, u, v = plain_ring(ring, ["A1", "B1", "A2", "B2"]).gens()
    inv = (1 - u * v * x * y).invert()
    return lhs, inv * ((x + y + (u + v) * x * y) * inv).exp()


def _saal_rhs(ring, i: int, j: int):
    x, y = ring.gens()[:2]
    return (1 + x) ** j * (1 + y) ** i * (1 - x * y).invert() ** (i + j + 1)


@register("pfaff-saalschutz", section=SECTION, anchor="e:saal",
          description="sum C(m+i,n) C(n+j,m) x^m y^n = (1+x)^j (1+y)^i / (1-xy)^{i+j+1}, i,j <= 3",
          quick={"x": 7, "y": 7}, full={"x": 10, "y": 10}, floor={"x": 1, "y": 1})
def pfaff_saalschutz(caps):
    """I^i J^j marks the parameter pair (i, j) with i, j <= 3."""
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"], "I": 3, "J": 3})
    lhs = ring.zero
    terms_r = {}
    sub = SeriesRing.of({"x": caps["x"], "y": caps["y"]})
    for i in range(4):
        for j in range(4):
            terms = {}
            for m in range(caps["x"] + 1):
                for n in range(caps["y"] + 1):
                    c = comb(m + i, n) * comb(n + j, m)
                    if c:
                        terms[(m, n, i, j)] = c
            lhs = lhs + Series(ring, terms)
            for (m, n), p in _saal_rhs(sub, i, j).terms.items():
                terms_r[(m, n, i, j)] = p
    return lhs, Series(ring, terms_r)


@register("pfaff-saalschutz-umbral", section=SECTION, anchor="e:saal2",
          description="e^{A1(1+B2)x+A2(1+B1)y} (1+B2)^i (1+B1)^j = (1+x)^j (1+y)^i/(1-xy)^{i+j+1}, i,j <= 3",
          quick={"x": 6, "y": 6}, full={"x": 7, "y": 7},
          floor={"x": 1, "y": 1})
def pfaff_saalschutz_umbral(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"], "I": 3, "J": 3},
                         ("A1", "B1", "A2", "B2"))
    x, y, I, J, A1, B1, A2, B2 = ring.gens()
    marks = ring.zero
    for i in range(4):
        for j in range(4):
            marks = marks + (1 + B2) ** i * (1 + B1) ** j * I**i * J**j
    lhs = ueval((A1 * (1 + B2) * x + A2 * (1 + B1) * y).exp() * marks, _two_pairs())
    x, y, I, J = plain_ring(ring, ["A1", "B1", "A2", "B2"]).gens()
    inv = (1 - x * y).invert()
    rhs = lhs.ring.zero
    for i in range(4):
        for j in range(4):
            rhs = rhs + (1 + x) ** j * (1 + y) ** i * inv ** (i + j + 1) * I**i * J**j
    return lhs, rhs


def _zfam():
    return _pair()


@register("zdoetsch-1", section=SECTION, anchor="T:Zdoetsch",
          description="sum H_{2m,n}(u) x^m/m! y^n/n! = e^{x+y+2uxy+u^2xy^2}",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 2})
def zdoetsch_1(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "A", "B"))
    x, y, u, A, B = ring.gens()
    lhs = ueval(((1 + A) ** 2 * x + (1 + u * B) * y).exp(), _zfam())
    x, y, u = plain_ring(ring, ["A", "B"]).gens()
    return lhs, (x + y + 2 * u * x * y + u * u * x * y * y).exp()


@register("zdoetsch-2", section=SECTION, anchor="T:Zdoetsch",
          description="sum H_{2m,2n}(u) x^m/m! y^n/n! = exp((x+y+4uxy)/(1-4u^2xy))/sqrt(1-4u^2xy)",
          quick={"x": 6, "y": 6}, full={"x": 8, "y": 8},
          floor={"x": 1, "y": 1})
def zdoetsch_2(caps):
    ring = SeriesRing.of({"x": caps["x"], "y": caps["y"]}, ("u", "A", "B"))
    x, y, u, A, B = ring.gens()
    lhs = ueval(((1 + A) ** 2 * x + (1 + u * B) ** 2 * y).exp(), _zfam())
    x, y, u = plain_ring(ring, ["A", "B"]).gens()
    d = 1 - 4 * u * u * x * y
    return lhs, d.pow_sym(-HALF) * ((x + y + 4 * u * x * y) * d.invert()).exp()


@register("zdoetsch-3", section=SECTION, anchor="T:Zdoetsch",
          description="sum H_{m,m}(u) x^m/m! = exp(x/(1-ux))/(1-ux)",
          quick={"x": 8}, full={"x": 12}, floor={"x": 1})
def zdoetsch_3(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("u", "A", "B"))
    x, u, A, B = ring.gens()
    lhs = ueval(((1 + A) * (1 + u * B) * x).exp(), _zfam())
    x, u = plain_ring(ring, ["A", "B"]).gens()
    inv = (1 - u * x).invert()
    return lhs, inv * (x * inv).exp()


@register("zdoetsch-general", section=SECTION, anchor="five-variable Zdoetsch generalization",
          description="sum H_{i+2k+m,j+2l+m}(u) v^i w^j x^k y^l z^m/(i!j!k!l!m!)",
          quick={"v": 4, "w": 4, "x": 4, "y": 4, "z": 4}, full={"v": 5, "w": 5, "x": 5, "y": 5, "z": 5},
          floor={k: 1 for k in "vwxyz"})
def zdoetsch_general(caps):
    ring = SeriesRing.of({k: caps[k] for k in "vwxyz"}, ("u", "A", "B"))
    v, w, x, y, z, u, A, B = ring.gens()
    a, b = 1 + A, 1 + u * B
    lhs = ueval((a * v + b * w + a * a * x + b * b * y + a * b * z).exp(), _zfam())
    v, w, x, y, z, u = plain_ring(ring, ["A", "B"]).gens()
    Q = (1 - u * z) ** 2 - 4 * u * u * x * y
    N = ((1 + u * w) ** 2 * x + (1 + u * v) ** 2 * y + 4 * u * x * y
         + (1 - u * z) * (v + w + z + u * v * w))
    return lhs, Q.pow_sym(-HALF) * (N * Q.invert()).exp()
