"""Acceptance criteria 1-9, each printing one PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines inline; they
are also written through ``capsys.disabled()`` so they show in ``-v`` runs.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from umbral import congruence as c
from umbral import sequences as s
from umbral.catalog import get, verify_all
from umbral.series import first_mismatch

import oracles


@pytest.fixture
def report(capsys):
    def emit(num: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {num}: {'PASS' if ok else 'FAIL'} {text}")
    return emit


def test_criterion_1_catalog_quick(report):
    t0 = time.perf_counter()
    reports = verify_all("quick")
    secs = time.perf_counter() - t0
    failed = [r.id for r in reports if not r.passed]
    ok = len(reports) >= 40 and not failed and secs < 60
    report(1, ok, f"{len(reports) - len(failed)}/{len(reports)} entries pass in {secs:.1f}s {failed}")
    assert ok


ZAGIER_TABLE = {1: Fraction(3, 4), 3: Fraction(-1, 4), 5: Fraction(-1, 4),
                7: Fraction(1, 4), 9: Fraction(1, 4), 11: Fraction(-3, 4)}


def test_criterion_2_zagier(report):
    bad = []
    for n in range(1, 50, 2):
        got = s.zagier_bstar(n)
        if Fraction(int(got.numerator), int(got.denominator)) != ZAGIER_TABLE[n % 12]:
            bad.append(n)
    report(2, not bad, f"B*_n for odd n <= 49, mismatches {bad}")
    assert not bad


def test_criterion_3_tau_bound_and_proven_sharpness(report):
    # the bound for every cell, sharpness on n >= 2, j >= 1
    t = c.check_tau(8, 8)
    report(3, t.ok, "(proven domain) tau bound for j, n <= 8; sharp iff j != floor((3n+1)/2) for n >= 2, j >= 1")
    assert t.ok


@pytest.mark.xfail(strict=True, reason="sharpness as stated fails at (j,n) = (0,0) and (2,1)")
def test_criterion_3_tau_literal(report):
    t = c.check_tau(8, 8, literal=True)
    bad = [(x.j, x.n, x.computed.value, x.predicted) for x in t.failures()]
    report(3, t.ok, f"(as stated) tau bound with equality iff j != floor((3n+1)/2), all j, n <= 8; "
                    f"failing (j, n, computed, predicted): {bad}")
    assert t.ok


def test_criterion_4_mu_and_refinements(report):
    mu = c.check_mu(7, 8)
    wanted = ("xsech mod 16 (n even >= 6)", "xsech mod 8 (n odd >= 3)",
              "median Genocchi divisible by 2^(n-1)", "Barsky mod 4 (n >= 3)")
    refs = {r.name: r for r in c.refinement_checks(12)}
    bad = [name for name in wanted if not refs[name].ok or refs[name].checked == 0]
    # independent route for the Genocchi parts
    for n in range(13):
        h = oracles.median_genocchi(n)
        if n >= 1 and h % 2 ** (n - 1):
            bad.append(f"H_{2 * n + 1} oracle")
        if n >= 3 and (h // 2 ** (n - 1)) % 4 != (2 if n % 2 else 3):
            bad.append(f"Barsky oracle n={n}")
    ok = mu.ok and not bad
    report(4, ok, f"mu table ({len(mu.failures())} bad cells), refinements {bad or 'ok'}")
    assert ok


def test_criterion_5_frobenius(report):
    r = c.frobenius_check(8, 6)
    report(5, r.ok, f"Frobenius valuations for even j <= 6, n <= 8 {r.failures[:3]}")
    assert r.ok


def test_criterion_6_kummer(report):
    bad = []
    k5 = c.kummer_transfer_check(4, 5, n_max=4)[0]
    if not k5.ok:
        bad.append("e:K5")
    for m, p in c.KUMMER_CASES:
        for r in c.kummer_transfer_check(m, p):
            if not r.ok:
                bad.append(r.name)
    report(6, not bad, f"K5 instance and generalized Euler cases {c.KUMMER_CASES} {bad}")
    assert not bad


def test_criterion_7_bell(report):
    touchard, carlitz = c.bell_congruences((2, 3, 5, 7, 11, 13), 40, 6, (2, 3, 5, 7), 10)
    ok = touchard.ok and carlitz.ok
    report(7, ok, f"Touchard {touchard.status}, Carlitz {carlitz.status}")
    assert ok


def test_criterion_8_oracle_equivalences(report):
    bad = {}
    for name in sorted(s.DUAL_ROUTES):
        n = 60 if name == "bernoulli" else 12 if name in s.POLY_ROUTES else 40
        mm = s.dual_route_mismatches(name, n)
        if mm:
            bad[name] = mm
    for n in range(1, 7):
        want = abs(oracles.median_genocchi(n + 1)) // 2**n
        if not (oracles.dellac_brute(n) == s.dellac_count(n) == s.dellac_from_genocchi(n) == want):
            bad[f"dellac {n}"] = want
    report(8, not bad, f"{len(s.DUAL_ROUTES)} dual routes and Dellac n <= 6 {bad}")
    assert not bad


NEGATIVE_CONTROLS = (("mehler", {"x": 2}, "x^2"),
                     ("charlier-bilinear", {"x": 3}, "x^3"),
                     ("rogers-szego-bilinear", {"x": 2, "q": 1}, "x^2*q"))


def test_criterion_9_negative_controls(report):
    seen = []
    for entry_id, monomial, where in NEGATIVE_CONTROLS:
        e = get(entry_id)
        lhs, rhs = e.build(dict(e.quick))
        assert first_mismatch(lhs, rhs) is None
        bump = rhs.ring.one
        for name, k in monomial.items():
            bump = bump * rhs.ring.gen(name) ** k
        mm = first_mismatch(lhs, rhs + bump)
        seen.append((entry_id, None if mm is None else lhs.monomial_str(mm[0]), where))
    ok = all(got == want for _, got, want in seen)
    report(9, ok, f"perturbed entries localized {[(i, g) for i, g, _ in seen]}")
    assert ok
