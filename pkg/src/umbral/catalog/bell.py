"""Bell umbra identities."""

from __future__ import annotations

from functools import lru_cache

from ..poly import Poly, falling
from ..series import SeriesRing
from ..umbra import family, ueval
from ..umbrae import bell_umbra
from .bernoulli import random_polys
from .registry import indexed, register

SECTION = "bell"

_B = Poly.var("B", ("B",))


@lru_cache(maxsize=1)
def _fam():
    return family(bell_umbra("B"))


def ev(p: Poly):
    return ueval(p, _fam()).to_rat()


@register("bell-egf", section=SECTION, anchor="e:bell",
          description="e^{Bx} = e^{e^x - 1}",
          quick={"x": 12}, full={"x": 20}, floor={"x": 1})
def bell_egf(caps):
    ring = SeriesRing.of({"x": caps["x"]}, ("B",))
    x, B = ring.gens()
    lhs = ueval((B * x).exp(), _fam())
    x = lhs.ring.gen("x")
    return lhs, (x.exp() - 1).exp()


@register("bell-shift", section=SECTION, anchor="e:shift",
          description="B f(B) = f(B+1) for f = z^k (k <= K) and for random f of degree 8 (r = 1, k indexes f)",
          quick={"k": 12, "r": 1}, full={"k": 20, "r": 1}, floor={"k": 1, "r": 1})
def bell_shift(caps):
    fs = random_polys(caps["k"] + 1, seed=23)

    def f(k, r):
        return _B**k if r == 0 else fs[k]

    return (indexed(caps, lambda k, r: ev(_B * f(k, r))),
            indexed(caps, lambda k, r: ev(f(k, r).substitute({"B": _B + 1}))))


@register("bell-nshift", section=SECTION, anchor="e:nshift",
          description="B(B-1)...(B-n+1) f(B) = f(B+n) for f = z^k, n <= 6, k <= 8",
          quick={"n": 6, "k": 8}, full={"n": 10, "k": 12}, floor={"n": 1, "k": 1})
def bell_nshift(caps):
    return (indexed(caps, lambda n, k: ev(falling(_B, n) * _B**k)),
            indexed(caps, lambda n, k: ev((_B + n) ** k)))


@register("bell-rota", section=SECTION, anchor="e:rota",
          description="B(B-1)...(B-n+1) = 1",
          quick={"n": 20}, full={"n": 30}, floor={"n": 1})
def bell_rota(caps):
    return indexed(caps, lambda n: ev(falling(_B, n))), indexed(caps, lambda n: 1)
