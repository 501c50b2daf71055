from .entries import CatalogEntry, Dim4Entry, Expected
from .store import dump, dumps, load, load_bundled, loads
from .verify import CatalogReport, distinctness, verify_catalog, verify_entry

__all__ = [
    "CatalogEntry", "CatalogReport", "Dim4Entry", "Expected", "distinctness", "dump", "dumps",
    "load", "load_bundled", "loads", "verify_catalog", "verify_entry",
]
