"""Identity registry and the coefficient-by-coefficient verifier."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from ..poly import Poly
from ..series import Series, SeriesRing, first_mismatch

Caps = dict[str, int]
Builder = Callable[[Caps], tuple[Series, Series]]

PROFILES = ("quick", "full")


class CatalogError(ValueError):
    """Unknown identity id or caps below an entry's floor."""


@dataclass(frozen=True)
class IdentityEntry:
    """A named LHS/RHS pair; ``build(caps)`` returns both sides over one ring.

    ``quick``/``full`` are cap presets; ``floor`` is the smallest meaningful
    caps.  ``sum_bound(caps)`` (optional) reports where an infinite sum on one
    side was cut off.
    """

    id: str
    description: str
    anchor: str
    build: Builder
    quick: Caps
    full: Caps
    floor: Caps
    section: str = ""
    sum_bound: Optional[Callable[[Caps], int]] = None
    notes: str = ""

    def metadata(self) -> dict:
        return {
            "id": self.id,
            "section": self.section,
            "description": self.description,
            "anchor": self.anchor,
            "quick": dict(self.quick),
            "full": dict(self.full),
        }


@dataclass
class Mismatch:
    monomial: str
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"monomial": self.monomial, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    id: str
    caps: Caps
    status: str
    mismatch: Optional[Mismatch] = None
    millis: int = 0
    sum_bound: Optional[int] = None
    error: Optional[str] = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "caps": dict(self.caps),
            "status": self.status,
            "mismatch": None if self.mismatch is None else self.mismatch.to_json(),
            "millis": self.millis,
        }


_REGISTRY: dict[str, IdentityEntry] = {}


def register(id: str, *, description: str, anchor: str, quick: Caps, full: Caps | None = None,
             floor: Caps | None = None, section: str = "", sum_bound=None, notes: str = ""):
    """Decorator registering a builder ``f(caps) -> (lhs, rhs)``."""

    def deco(fn: Builder) -> Builder:
        if id in _REGISTRY:
            raise CatalogError(f"duplicate identity id {id!r}")
        full_caps = dict(full or quick)
        floor_caps = dict(floor or {k: 1 for k in quick})
        _REGISTRY[id] = IdentityEntry(
            id, description, anchor, fn, dict(quick), full_caps, floor_caps, section,
            sum_bound, notes,
        )
        return fn

    return deco


def entries() -> list[IdentityEntry]:
    _load()
    return list(_REGISTRY.values())


def catalog_list() -> list[dict]:
    return [e.metadata() for e in entries()]


def get(id: str) -> IdentityEntry:
    _load()
    try:
        return _REGISTRY[id]
    except KeyError:
        raise CatalogError(f"unknown identity {id!r}") from None


def resolve_caps(entry: IdentityEntry, profile: str = "quick",
                 overrides: Mapping[str, int] | None = None) -> Caps:
    if profile not in PROFILES:
        raise CatalogError(f"unknown profile {profile!r}")
    caps = dict(entry.quick if profile == "quick" else entry.full)
    for k, v in (overrides or {}).items():
        if k in caps:
            caps[k] = int(v)
    low = [k for k, v in caps.items() if v < entry.floor.get(k, 0)]
    if low:
        raise CatalogError(
            f"{entry.id}: caps {caps} below floor {entry.floor} for {', '.join(low)}"
        )
    return caps


def verify_entry(entry: IdentityEntry, caps: Caps) -> Report:
    t0 = time.perf_counter()
    lhs, rhs = entry.build(dict(caps))
    mm = first_mismatch(lhs, rhs)
    millis = int(round((time.perf_counter() - t0) * 1000))
    bound = entry.sum_bound(caps) if entry.sum_bound else None
    if mm is None:
        return Report(entry.id, dict(caps), "pass", None, millis, bound)
    m, a, b = mm
    return Report(entry.id, dict(caps), "fail", Mismatch(lhs.monomial_str(m), str(a), str(b)),
                  millis, bound)


def verify(id: str, caps: Mapping[str, int] | None = None, profile: str = "quick") -> Report:
    entry = get(id)
    return verify_entry(entry, resolve_caps(entry, profile, caps))


def _verify_job(args):
    id, profile, overrides = args
    entry = get(id)
    return verify_entry(entry, resolve_caps(entry, profile, overrides))


def verify_all(profile: str = "quick", overrides: Mapping[str, int] | None = None,
               ids: Iterable[str] | None = None, jobs: int = 1) -> list[Report]:
    """Verify every (or the selected) entry; reports come back in catalog order."""
    todo = [e.id for e in entries()] if ids is None else list(ids)
    for i in todo:
        get(i)
    work = [(i, profile, dict(overrides or {})) for i in todo]
    if jobs <= 1 or len(work) <= 1:
        return [_verify_job(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, work))


# helpers shared by the entry modules


def indexed(caps: Mapping[str, int], fn: Callable[..., object], symbols=()) -> Series:
    """Pack an indexed family of values as an ordinary series in index variables.

    The coefficient of ``n1^e1 * n2^e2 ...`` is ``fn(e1, e2, ...)``.
    """
    ring = SeriesRing.of(dict(caps), symbols)
    terms = {}
    for m in ring.monomials():
        v = fn(*m)
        if isinstance(v, Poly) and v.symbols != ring.symbols:
            v = v.extend(ring.symbols)
        terms[m] = v
    return Series(ring, terms)


def plain_ring(ring: SeriesRing, umbral: Iterable[str]) -> SeriesRing:
    """The ring left after evaluating away the given umbral symbols."""
    drop = set(umbral)
    return ring.with_symbols(tuple(s for s in ring.symbols if s not in drop))


_loaded = False


def _load() -> None:
    global _loaded
    if not _loaded:
        _loaded = True
        from . import bell, bernoulli, charlier, delta, euler, hermite, qident  # noqa: F401
