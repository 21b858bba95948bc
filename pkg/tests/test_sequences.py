from __future__ import annotations

from math import comb, factorial

import pytest

from umbral import sequences as s
from umbral.pairs import PAIRS, cd_defect, cd_inverse_defect, pair
from umbral.poly import Poly, rising
from umbral.rat import rat, rat_congruent

import oracles


def F(q):
    return rat(q.numerator, q.denominator)


def test_bernoulli_examples():
    assert s.bernoulli(1) == rat(-1, 2)
    assert s.bernoulli(3) == 0
    assert s.bernoulli(2) == rat(1, 6)
    assert s.bernoulli(12) == rat(-691, 2730)


@pytest.mark.parametrize("n", range(61))
def test_bernoulli_matches_akiyama_tanigawa(n):
    assert s.bernoulli(n) == F(oracles.bernoulli(n))


def test_bernoulli_half_mod_one():
    for n in range(2, 61, 2):
        assert rat_congruent(s.bernoulli(n), rat(1, 2), 2, 0)
    assert all(s.bernoulli(n) == 0 for n in range(3, 61, 2))


def test_bell_examples_and_oracle():
    assert [s.bell(n) for n in (0, 3, 5)] == [1, 5, 52]
    assert [s.bell(n) for n in range(41)] == [oracles.bell(n) for n in range(41)]


def test_euler_family():
    assert s.euler(2) == -1
    assert [s.euler(n) for n in range(31)] == [oracles.euler(n) for n in range(31)]
    assert all(s.euler(n) == 0 for n in range(1, 31, 2))
    assert all(s.gen_euler(2, n) == s.euler(2 * n) for n in range(12))
    assert [s.gen_euler(4, n) for n in range(6)] == [oracles.gen_euler(4, n) for n in range(6)]
    assert [s.gen_euler(3, n) for n in range(6)] == [oracles.gen_euler(3, n) for n in range(6)]
    assert s.xsech(1) == 1 and s.xsech(2) == 0
    assert [s.xsech(n) for n in range(25)] == [oracles.xsech(n) for n in range(25)]
    assert s.euler_family("F", 3) == -3
    with pytest.raises(ValueError):
        s.euler_family("nope", 1)


def test_f_m_one_is_odd_F():
    assert all(s.f_m(1, n) == s.xsech(2 * n + 1) for n in range(10))


def test_tangent():
    # tanh x = x - x^3/3 + 2x^5/15 - ...
    assert [s.tangent(n) for n in range(6)] == [0, 1, 0, -2, 0, 16]


def test_genocchi_family():
    assert s.genocchi(1) == 1
    assert [s.genocchi(n) for n in range(30)] == [oracles.genocchi(n) for n in range(30)]
    assert all(s.genocchi(2 * i + 1) == 0 for i in range(1, 15))
    assert s.median_genocchi(1) == -1
    assert s.median_genocchi_lemma(1) == -1
    # 2^2 H_3 = -E_0 + 3 E_2
    assert 4 * s.median_genocchi(1) == -s.euler(0) + 3 * s.euler(2)
    assert [s.median_genocchi(n) for n in range(13)] == [oracles.median_genocchi(n) for n in range(13)]


def test_dellac():
    assert s.dellac_count(1) == 1
    for n in range(1, 7):
        want = abs(s.median_genocchi(n + 1)) // 2**n
        assert s.dellac_count(n) == want == oracles.dellac_brute(n)
        assert s.dellac_from_genocchi(n) == want
    with pytest.raises(ValueError):
        s.dellac_count(0)


def test_seidel():
    g = s.genocchi
    for n in range(2, 31):
        assert sum(comb(n, 2 * j) * g(2 * n - 2 * j) for j in range(n + 1)) == 0


def test_derangement_stirling_fibonacci():
    assert [s.derangement(n) for n in range(15)] == [oracles.derangement(n) for n in range(15)]
    for m in range(7):
        for n in range(8):
            assert sum(comb(n, i) * factorial(i) * s.stirling2(m, i) for i in range(n + 1)) == n**m
            assert s.stirling2(m, n) == oracles.stirling2(m, n)
    assert [s.fibonacci(n) for n in range(-10, 11)] == [oracles.fibonacci(n) for n in range(-10, 11)]
    assert s.fibonacci(0) == s.fibonacci(1) == 1
    assert s.lucas(3) == s.fibonacci(4) + s.fibonacci(2)


def test_classical_polys():
    u, a = (Poly.var(x, s.CHARLIER_SYMBOLS) for x in s.CHARLIER_SYMBOLS)
    assert s.charlier(2) == a * (a + 1) + 2 * u * a + u**2
    assert s.charlier(3) == sum((comb(3, i) * rising(a, i) * u ** (3 - i) for i in range(4)),
                                Poly.const(0, s.CHARLIER_SYMBOLS))
    U = Poly.var("u", ("u",))
    assert s.hermite(2) == 4 * U**2 - 2
    for n in range(10):
        assert {e[0]: c for e, c in s.hermite(n).terms.items()} == oracles.hermite(n)
    uq, q = (Poly.var(x, s.QPOLY_SYMBOLS) for x in s.QPOLY_SYMBOLS)
    assert s.rogers_szego(2) == 1 + (1 + q) * uq + uq**2
    with pytest.raises(ValueError):
        s.classical_polys("nope", 1)


def test_carlitz_hermite_reciprocity():
    # H_{2,1}(u,v) = u^2 v H_{2,1}(1/uv); clear denominators by u v
    m, n = 2, 1
    h = s.carlitz_hermite(m, n)
    w = s.zeil_hermite(m, n)
    u, v = (Poly.var(x, s.CARLITZ_SYMBOLS) for x in s.CARLITZ_SYMBOLS)
    # u^m v^n sum c_k (uv)^{-k} = sum c_k u^{m-k} v^{n-k}
    recon = sum((c * u ** (m - e[0]) * v ** (n - e[0]) for e, c in w.terms.items()),
                Poly.const(0, s.CARLITZ_SYMBOLS))
    assert h == recon


def test_eulerian():
    t = Poly.var("t", ("t",))
    assert s.eulerian(3) == t + 4 * t**2 + t**3
    assert s.eulerian_tilde(3) == 1 + 4 * t + t**2
    assert s.eulerian_tilde(0) == 1


def test_zagier_bstar():
    assert s.zagier_bstar(1) == rat(3, 4)
    assert s.zagier_bstar(3) == rat(-1, 4)
    assert s.zagier_bstar(13) == rat(3, 4)
    for n in range(1, 20):
        assert s.zagier_bstar(n) == F(oracles.zagier_bstar(n))
    with pytest.raises(ValueError):
        s.zagier_bstar(0)


@pytest.mark.parametrize("name", sorted(s.DUAL_ROUTES))
def test_dual_routes_agree(name):
    n = 60 if name == "bernoulli" else 12 if name in s.POLY_ROUTES else 40
    assert s.dual_route_mismatches(name, n) == []


@pytest.mark.parametrize("name", [p.name for p in PAIRS])
def test_pair_law(name):
    p = pair(name)
    for n in range(21):
        assert cd_defect(p, n) == 0
        assert cd_inverse_defect(p, n) == 0


def test_lucas_pair_uses_standard_lucas_numbers():
    from umbral.pairs import lucas_standard
    assert [lucas_standard(n) for n in range(6)] == [2, 1, 3, 4, 7, 11]
