"""Catalog verification: per-entry checks plus pairwise distinctness."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from ..invariants import (
    eps_key_of,
    invariant_kappa7,
    invariant_l,
    invariant_sign_xi2,
)
from ..lie import center, is_nilpotent
from ..quadext import build_standard_model, is_balanced, is_cocycle, is_nilpotent_cocycle
from ..report import Defect, Report
from ..symplectic import validate_symplectic
from .entries import CatalogEntry, Dim4Entry
from .families import R2R2, R3, RH3R, RR4

INVARIANTS = {
    "sign_xi2": invariant_sign_xi2,
    "sign_xi2_rev": lambda t: invariant_sign_xi2(t, reverse=True),
    "kappa7": invariant_kappa7,
    "l_ratio": invariant_l,
}


def _maybe(fn, t):
    try:
        return fn(t)
    except ValueError:
        return None


def fingerprint(e: CatalogEntry):
    """Invariants used to separate entries of the same family (None: no
    implemented invariant applies)."""
    t = e.cocycle
    if e.family == R3:
        return _maybe(eps_key_of, t)
    if e.family == RR4:
        return (_maybe(invariant_sign_xi2, t), _maybe(invariant_kappa7, t))
    if e.family == RH3R:
        return (_maybe(invariant_l, t), _maybe(INVARIANTS["sign_xi2_rev"], t))
    if e.family == R2R2:
        return None
    return None


def verify_entry(e: CatalogEntry) -> Report:
    t = e.cocycle
    ex = e.expected
    defects = []
    coc = is_cocycle(t)
    for d in coc.defects:
        defects.append(Defect("cocycle:" + d.condition, d.where, d.value))
    bal = is_balanced(t).ok
    if bal != ex.balanced:
        defects.append(Defect("balanced", (), bal))
    nil = is_nilpotent_cocycle(t).ok
    if nil != ex.nilpotent:
        defects.append(Defect("nilpotent", (), nil))
    if t.model_dim != ex.model_dim:
        defects.append(Defect("model_dim", (), t.model_dim))
    model = validate_symplectic(build_standard_model(t))
    for d in model.defects:
        defects.append(Defect("model:" + d.condition, d.where, d.value))
    for name, want in ex.invariants.items():
        fn = INVARIANTS.get(name)
        if fn is None:
            defects.append(Defect("invariant", (name,), "unknown invariant"))
            continue
        got = _maybe(fn, t)
        if got is None or got != want:
            defects.append(Defect("invariant", (name,), got))
    return Report(tuple(defects))


def verify_dim4(e: Dim4Entry) -> Report:
    s = e.algebra
    defects = list(validate_symplectic(s).defects)
    zd = center(s.g).dim
    ok, cls = is_nilpotent(s.g)
    if not ok:
        defects.append(Defect("nilpotent", (), False))
    for key, got in (("center_dim", zd), ("nilpotency_class", cls)):
        if key in e.expected and e.expected[key] != got:
            defects.append(Defect(key, (), got))
    return Report(tuple(defects))


def _verify_any(e) -> Report:
    return verify_dim4(e) if isinstance(e, Dim4Entry) else verify_entry(e)


@dataclass
class CatalogReport:
    entries: dict = field(default_factory=dict)
    separated: list = field(default_factory=list)
    unseparated: list = field(default_factory=list)
    asserted: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.entries.values()) and not self.unseparated

    @property
    def failing(self) -> list:
        return [k for k, r in self.entries.items() if not r.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "entries": {k: r.to_json() for k, r in self.entries.items()},
            "separated_pairs": len(self.separated),
            "unseparated": [list(p) for p in self.unseparated],
            "asserted_pairs": [list(p) for p in self.asserted],
        }


def _dim4_key(e: Dim4Entry):
    return (center(e.algebra.g).dim, is_nilpotent(e.algebra.g)[1])


def distinctness(entries) -> CatalogReport:
    rep = CatalogReport()
    dim4 = [e for e in entries if isinstance(e, Dim4Entry)]
    for x, y in combinations(dim4, 2):
        (rep.separated if _dim4_key(x) != _dim4_key(y) else rep.unseparated).append((x.id, y.id))
    dim6 = [e for e in entries if isinstance(e, CatalogEntry)]
    prints = {e.id: fingerprint(e) for e in dim6}
    for x, y in combinations(dim6, 2):
        if x.family != y.family:
            continue
        fx, fy = prints[x.id], prints[y.id]
        if x.cocycle == y.cocycle:
            rep.unseparated.append((x.id, y.id))
        elif fx is not None and fy is not None and fx != fy:
            rep.separated.append((x.id, y.id))
        elif x.metadata.get("separation") == "asserted" or y.metadata.get("separation") == "asserted":
            rep.asserted.append((x.id, y.id))
        else:
            rep.unseparated.append((x.id, y.id))
    return rep


def verify_catalog(entries, jobs: int = 1) -> CatalogReport:
    entries = list(entries)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_any, entries, chunksize=4))
    else:
        reports = [_verify_any(e) for e in entries]
    rep = distinctness(entries)
    rep.entries = {e.id: r for e, r in zip(entries, reports)}
    return rep
