from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from umbral.poly import Poly, RingMismatch, binom_poly, falling, poly_arith, rising
from umbral.rat import (INFINITY, Valuation, is_p_integral, rat, rat_congruent, rat_mod,
                        rat_str, rat_valuation)
from umbral.sequences import bernoulli

import oracles

SYMS = ("u", "v")
u, v = (Poly.var(s, SYMS) for s in SYMS)

rats = st.fractions(max_denominator=50).map(lambda f: rat(f.numerator, f.denominator))
nonzero_rats = rats.filter(lambda a: a != 0)
primes = st.sampled_from([2, 3, 5, 7])


def poly_strategy(symbols=SYMS, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in symbols])
    return st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda t: Poly(symbols, t))


# Rat and valuations


def test_rat_normalized():
    a = rat(6, -4)
    assert (a.numerator, a.denominator) == (-3, 2)
    assert rat_str(rat(0)) == "0"
    assert rat_str(rat(-691, 2730)) == "-691/2730"
    assert rat_str(rat(4, 2)) == "2"


def test_valuation_examples():
    assert rat_valuation(rat(1, 2), 2) == -1
    assert rat_valuation(rat(4, 3), 2) == 2
    assert rat_valuation(0, 5) == INFINITY
    assert rat_valuation(0, 5).infinite


def test_valuation_rejects_composite():
    with pytest.raises(ValueError):
        rat_valuation(rat(3), 4)
    with pytest.raises(ValueError):
        rat_congruent(1, 2, 1, 1)


def test_valuation_ordering():
    assert Valuation(3) < INFINITY
    assert INFINITY >= 100
    assert Valuation(2) >= 2 and not Valuation(1) >= 2
    assert str(INFINITY) == "inf"


def test_congruence_examples():
    assert rat_congruent(rat(1, 2), rat(5, 2), 2, 1)
    assert rat_congruent(rat(7, 3), rat(7, 3), 5, 10)
    # B_4 = -1/30 and (B_4 - 9/2)/4 has odd denominator
    b4 = bernoulli(4)
    assert b4 == rat(-1, 30)
    assert Fraction((b4 - rat(9, 2)) / 4).denominator % 2 == 1
    assert rat_congruent(b4, rat(1, 2) + 4, 2, 2)


def test_rat_mod_and_integrality():
    assert is_p_integral(rat(1, 3), 2) and not is_p_integral(rat(1, 2), 2)
    assert rat_mod(rat(1, 3), 2, 3) == 3  # 3 * 3 = 9 = 1 mod 8
    with pytest.raises(ValueError):
        rat_mod(rat(1, 2), 2, 3)


@given(nonzero_rats, nonzero_rats, primes)
def test_valuation_additive(a, b, p):
    assert rat_valuation(a * b, p) == rat_valuation(a, p) + rat_valuation(b, p)


@given(rats, rats, primes)
def test_valuation_matches_oracle(a, b, p):
    x = a - b
    got = rat_valuation(x, p)
    ref = oracles.nu(Fraction(int(x.numerator), int(x.denominator)), p)
    assert got.value == ref


@given(rats, rats, rats, primes, st.integers(-2, 4))
def test_congruence_transitive(a, b, c, p, r):
    if rat_congruent(a, b, p, r) and rat_congruent(b, c, p, r):
        assert rat_congruent(a, c, p, r)


@given(rats, primes, st.integers(0, 3), st.integers(-3, 3))
def test_congruence_shift_by_multiple(a, p, r, k):
    assert rat_congruent(a, a + k * p**r, p, r)


# Poly


def test_poly_examples():
    assert poly_arith("mul", u + 1, u - 1) == u**2 - 1
    assert poly_arith("substitute", u**2, {"u": 1 + u}) == 1 + 2 * u + u**2
    d = poly_arith("derivative", (u**2 - 1) ** 3, "u")
    assert d.substitute({"u": Poly.const(-1, SYMS)}) == 0
    # brute force: d/du (u^2-1)^3 = 6u(u^2-1)^2
    assert d == 6 * u * (u**2 - 1) ** 2
    assert poly_arith("neg", u) == -u


def test_poly_ring_mismatch():
    w = Poly.var("w", ("w",))
    with pytest.raises(RingMismatch):
        u + w
    assert u.extend(("w", "u", "v")) == Poly.var("u", ("w", "u", "v"))
    with pytest.raises(RingMismatch):
        (u * v).extend(("u",))


def test_poly_no_zero_terms_and_display():
    p = Poly(SYMS, {(1, 0): 1, (0, 1): 0, (2, 0): rat(-1, 2)})
    assert len(p) == 2
    assert str(p) == "u - 1/2*u^2"
    assert str(Poly(SYMS)) == "0"
    assert (u - u).is_constant() and not (u - u)


def test_poly_evaluate_and_substitute_simultaneous():
    p = u**2 * v + 3 * v
    assert p.evaluate({"u": 2, "v": rat(1, 3)}) == rat(7, 3)
    swapped = (u - v).substitute({"u": v, "v": u})
    assert swapped == v - u


def test_rising_falling_binom():
    a = Poly.var("u", ("u",))
    assert rising(a, 3) == a * (a + 1) * (a + 2)
    assert falling(rat(5), 2) == 20
    assert binom_poly(rat(-1, 2), 2) == rat(3, 8)
    assert binom_poly(a, -1) == 0


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(poly_strategy(), poly_strategy())
def test_derivative_leibniz(a, b):
    assert (a * b).derivative("u") == a.derivative("u") * b + a * b.derivative("u")


@given(poly_strategy(), st.integers(-3, 3), st.integers(-3, 3))
def test_substitute_is_evaluation_homomorphism(a, x, y):
    assert a.evaluate({"u": x, "v": y}) == a.substitute({"u": Poly.const(x, SYMS)}).evaluate({"v": y})
