from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from umbral.poly import Poly, falling, rising
from umbral.rat import rat
from umbral.series import SeriesRing
from umbral.umbra import (Umbra, UmbralError, family, make_family, rising_umbra, ueval,
                          umbra_from_egf, umbral_build)
from umbral.umbrae import (bell_umbra, bernoulli_umbra, charlier_umbra, hermite_umbra,
                           xsech_umbra)

import oracles


def test_umbra_from_egf_hermite_moments():
    R = SeriesRing.of({"x": 8})
    x = R.gen("x")
    M = umbra_from_egf("M", (-(x * x)).exp())
    for k in range(5):
        assert M.moment(2 * k) == (-1) ** k * factorial(2 * k) // factorial(k)
    assert M.moment(3) == 0
    with pytest.raises(UmbralError):
        M.moment(9)


def test_umbra_from_egf_exp_and_xsech():
    R = SeriesRing.of({"x": 6})
    x = R.gen("x")
    one = umbra_from_egf("a", x.exp())
    assert all(one.moment(n) == 1 for n in range(7))
    cosh = (x.exp() + (-x).exp()) * rat(1, 2)
    F = umbra_from_egf("F", x * cosh.invert())
    assert [F.moment(n) for n in range(4)] == [0, 1, 0, -3]
    assert [xsech_umbra().moment(n) for n in range(4)] == [0, 1, 0, -3]


def test_family_examples():
    d = make_family("delta-pair", names=("A", "B"))
    assert d.joint_moment((3, 3)) == 6
    assert d.joint_moment((2, 3)) == 0
    b1, b2 = bernoulli_umbra("B"), bernoulli_umbra("C")
    ind = make_family("independent-product", umbrae=[b1, b2])
    assert ind.joint_moment((1, 1)) == rat(1, 4)
    M = hermite_umbra("M")
    ex = make_family("exchangeable", umbra=M, names=("M", "N"))
    assert all(ex.joint_moment((0, n)) == M.moment(n) for n in range(8))
    two = make_family("product", families=[d, make_family("delta-pair", names=("C", "D"))])
    assert two.joint_moment((2, 2, 3, 3)) == 2 * 6
    assert two.joint_moment((2, 2, 3, 1)) == 0


def test_family_errors():
    b = bernoulli_umbra("B")
    with pytest.raises(UmbralError):
        make_family("independent-product", umbrae=[b, bernoulli_umbra("B")])
    with pytest.raises(UmbralError):
        make_family("delta-pair", names=("A",))
    with pytest.raises(UmbralError):
        make_family("nonsense")
    d = make_family("delta-pair", names=("A", "B"))
    with pytest.raises(UmbralError):
        make_family("product", families=[d, make_family("delta-pair", names=("B", "C"))])


def test_ueval_bernoulli_egf():
    R = SeriesRing.of({"x": 8}, ("B",))
    x, B = R.gens()
    got = ueval((B * x).exp(), family(bernoulli_umbra("B")))
    assert [got.egf_coeff((n,)) for n in range(9)] == [oracles.bernoulli(n) for n in range(9)]


def test_ueval_one_can_be_zero():
    R = SeriesRing.of({"x": 3}, ("F",))
    got = ueval(R.one, family(xsech_umbra("F")))
    assert got == got.ring.zero


def test_ueval_delta_pair_generating_law():
    R = SeriesRing.of({"x": 6, "y": 6}, ("A", "B"))
    x, y, A, B = R.gens()
    got = ueval((A * x + B * y).exp(), make_family("delta-pair", names=("A", "B")))
    P = got.ring
    brute = {(m, m): rat(1, factorial(m)) for m in range(7)}
    assert got == type(got)(P, brute)
    assert got == (P.gen("x") * P.gen("y")).exp()


def test_ueval_unknown_family_symbol_moment():
    # a moment mentioning a symbol absent from the remaining ring is reported
    R = SeriesRing.of({"x": 2}, ("A",))
    x, A = R.gens()
    with pytest.raises(UmbralError):
        ueval((A * x).exp(), family(charlier_umbra("A", "alpha")))


def test_umbral_build_charlier_egf():
    R = SeriesRing.of({"x": 6}, ("u", "alpha", "A"))
    x, u, a, A = R.gens()
    got = ueval(umbral_build((A + u) * x), family(rising_umbra("A", "alpha")))
    P = got.ring
    xx, uu, aa = P.gens()
    assert got == (uu * xx).exp() * (1 - xx).pow_sym(-aa)
    assert umbral_build(R.zero) == R.one


def test_umbral_build_hermite_quadratic():
    R = SeriesRing.of({"x": 5, "y": 5}, ("M",))
    x, y, M = R.gens()
    got = ueval(umbral_build(M * x + M * M * y), family(hermite_umbra("M")))
    P = got.ring
    xx, yy = P.gens()
    s = (1 + 4 * yy).invert()
    want = (-(xx * xx) * s).exp() * (1 + 4 * yy).pow_sym(rat(-1, 2))
    assert got == want


def test_bernoulli_and_bell_laws():
    fb = family(bernoulli_umbra("B"))
    B = Poly.var("B", ("B",))
    for n in range(12):
        assert ueval((B + 1) ** n - B**n, fb).to_rat() == (1 if n == 1 else 0)
    fbell = family(bell_umbra("B"))
    for n in range(10):
        assert ueval(falling(B, n), fbell).to_rat() == 1


def test_delta_pair_single_letter_words():
    d = make_family("delta-pair", names=("A", "B"))
    A = Poly.var("A", ("A", "B"))
    assert ueval(A**0, d).to_rat() == 1
    assert all(ueval(A**m, d).to_rat() == 0 for m in range(1, 6))


def test_moments_are_memoized():
    calls = []

    def mom(n):
        calls.append(n)
        return n + 1

    U = Umbra("U", mom)
    U.moment(3)
    U.moment(3)
    assert calls == [3]


# properties

small = st.integers(-4, 4)
polyB = st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 2)), small, max_size=6)


@given(polyB, polyB, small, small)
def test_ueval_linear(a, b, s, t):
    fam = family(bernoulli_umbra("B"))
    syms = ("B", "u")
    p, q = Poly(syms, a), Poly(syms, b)
    U = Poly.var("u", ("u",))
    lhs = ueval(s * p + t * q, fam)
    assert lhs == s * ueval(p, fam) + t * ueval(q, fam)
    # Poly scalars in the remaining ring pass through
    pu = Poly.var("u", syms)
    assert ueval(pu * p, fam) == U * ueval(p, fam)


@given(st.dictionaries(st.integers(0, 5), small, max_size=4),
       st.dictionaries(st.integers(0, 5), small, max_size=4))
def test_independence_factorizes(a, b):
    fam = family(bernoulli_umbra("B"), bell_umbra("C"))
    syms = ("B", "C")
    f = Poly(syms, {(e, 0): c for e, c in a.items()})
    g = Poly(syms, {(0, e): c for e, c in b.items()})
    lhs = ueval(f * g, fam).to_rat()
    rhs = ueval(f, fam).to_rat() * ueval(g, fam).to_rat()
    assert lhs == rhs


def test_charlier_rising_moments():
    A = charlier_umbra("A", "alpha")
    a = Poly.var("alpha", ("alpha",))
    assert A.moment(3) == rising(a, 3)
