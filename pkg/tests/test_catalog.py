from __future__ import annotations

import inspect

import pytest

from umbral.catalog import (CatalogError, catalog_list, entries, get, resolve_caps, verify,
                            verify_all, verify_entry)
from umbral.catalog.delta import ab1_i_literal
from umbral.series import first_mismatch

ENTRIES = entries()
IDS = [e.id for e in ENTRIES]


def test_catalog_size_and_roster():
    assert len(IDS) >= 40
    assert len(set(IDS)) == len(IDS)
    for required in ("mehler", "rogers-szego-bilinear", "charlier-bilinear", "hermite-triple",
                     "zagier", "kaneko", "seidel", "bell-rota", "pfaff-saalschutz",
                     "zdoetsch-general", "q-binomial-theorem", "sech-split", "median-lemma"):
        assert required in IDS


def test_catalog_list_is_stable_metadata():
    a, b = catalog_list(), catalog_list()
    assert a == b
    assert [m["id"] for m in a] == IDS
    assert all(m["anchor"] and m["description"] for m in a)


@pytest.mark.parametrize("entry_id", IDS)
def test_entry_passes_at_quick_caps(entry_id):
    r = verify(entry_id)
    assert r.passed, r.to_json()


@pytest.mark.parametrize("entry_id", IDS)
def test_entry_passes_at_caps_minus_one(entry_id):
    e = get(entry_id)
    lowered = {k: max(v - 1, e.floor.get(k, 0)) for k, v in e.quick.items()}
    r = verify_entry(e, resolve_caps(e, "quick", lowered))
    assert r.passed, r.to_json()


SUMMED = [e.id for e in ENTRIES if "extra_terms" in inspect.signature(e.build).parameters]


def test_summed_entries_present():
    for i in ("charlier-even", "charlier-bilinear", "hermite-triple"):
        assert i in SUMMED


@pytest.mark.parametrize("entry_id", SUMMED)
def test_one_more_term_changes_nothing(entry_id):
    e = get(entry_id)
    caps = dict(e.quick)
    assert e.sum_bound is not None
    assert e.sum_bound(caps) >= 0
    _, rhs = e.build(caps)
    _, rhs_more = e.build(caps, extra_terms=1)
    assert first_mismatch(rhs, rhs_more) is None


def test_profiles_and_overrides():
    for e in ENTRIES:
        assert all(e.full[k] >= v for k, v in e.quick.items())
        assert resolve_caps(e, "quick", {}) == e.quick
        assert resolve_caps(e, "full") == e.full
    e = get("mehler")
    assert resolve_caps(e, "quick", {"x": 5}) == {"x": 5}
    assert resolve_caps(e, "quick", {"zz": 5}) == e.quick


def test_errors():
    with pytest.raises(CatalogError):
        get("no-such-identity")
    with pytest.raises(CatalogError):
        verify("mehler", {"x": 1})
    with pytest.raises(CatalogError):
        resolve_caps(get("mehler"), "huge")


def test_verify_all_order_and_json_schema():
    ids = ["mehler", "bell-rota", "charlier-egf"]
    reports = verify_all("quick", ids=ids)
    assert [r.id for r in reports] == ids
    j = reports[0].to_json()
    assert set(j) == {"id", "caps", "status", "mismatch", "millis"}
    assert j["status"] == "pass" and j["mismatch"] is None and isinstance(j["millis"], int)


def test_verify_all_parallel_keeps_catalog_order():
    ids = ["bell-rota", "mehler", "charlier-egf", "zagier"]
    assert [r.id for r in verify_all("quick", ids=ids, jobs=2)] == ids


# negative controls: the entry with its RHS nudged must fail at that monomial


def _perturbed(entry_id, monomial):
    e = get(entry_id)
    caps = dict(e.quick)
    lhs, rhs = e.build(caps)
    ring = rhs.ring
    bump = ring.one
    for name, k in monomial.items():
        bump = bump * ring.gen(name) ** k
    mm = first_mismatch(lhs, rhs + bump)
    assert mm is not None
    return lhs.monomial_str(mm[0]), mm


def test_negative_mehler():
    where, (m, a, b) = _perturbed("mehler", {"x": 2})
    assert where == "x^2"
    assert b - a == 1


def test_negative_charlier_bilinear():
    where, _ = _perturbed("charlier-bilinear", {"x": 3})
    assert where == "x^3"


def test_negative_rogers_szego():
    where, _ = _perturbed("rogers-szego-bilinear", {"x": 2, "q": 1})
    assert where == "x^2*q"


def test_literal_ab1_statement_fails_at_sw():
    e = get("lemma-AB1-i")
    lhs, rhs = ab1_i_literal(dict(e.quick))
    m, a, b = first_mismatch(lhs, rhs)
    assert lhs.monomial_str(m) == "s*w"
    assert (a, b) == (0, 1)
