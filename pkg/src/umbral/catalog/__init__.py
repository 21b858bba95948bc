"""Registry of generating-function and number identities, with a verifier."""

from .registry import (
    CatalogError,
    IdentityEntry,
    Mismatch,
    Report,
    catalog_list,
    entries,
    get,
    resolve_caps,
    verify,
    verify_all,
    verify_entry,
)

__all__ = [
    "CatalogError",
    "IdentityEntry",
    "Mismatch",
    "Report",
    "catalog_list",
    "entries",
    "get",
    "resolve_caps",
    "verify",
    "verify_all",
    "verify_entry",
]
