"""Line-oriented JSON catalogs: one entry object per line."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..formats import (
    FormatError,
    read_int,
    read_object,
    read_scalar,
    algebra_from_json,
    algebra_to_json,
    cocycle_from_json,
    cocycle_to_json,
)
from .entries import CatalogEntry, Dim4Entry, Expected

BUNDLED = {"dim4": "dim4.jsonl", "dim6": "dim6.jsonl"}


def entry_to_json(e) -> dict:
    if isinstance(e, Dim4Entry):
        out = {"id": e.id, "algebra": algebra_to_json(e.algebra)}
        if e.expected:
            out["expected"] = dict(e.expected)
        return out
    ex = e.expected
    out = {
        "id": e.id,
        "family": e.family,
        "parameters": {k: str(v) for k, v in e.parameters.items()},
        "cocycle": cocycle_to_json(e.cocycle),
        "expected": {
            "balanced": ex.balanced,
            "nilpotent": ex.nilpotent,
            "model_dim": ex.model_dim,
            "invariants": {k: str(v) for k, v in ex.invariants.items()},
        },
    }
    if e.metadata:
        out["metadata"] = dict(e.metadata)
    return out


def _bool(x, where):
    if not isinstance(x, bool):
        raise FormatError("expected true or false", where)
    return x


def entry_from_json(x, where="entry"):
    if isinstance(x, dict) and "algebra" in x:
        read_object(x, where, ("id", "algebra"), ("expected",))
        exp = x.get("expected", {})
        read_object(exp, f"{where}.expected", (), ("center_dim", "nilpotency_class"))
        return Dim4Entry(_str(x["id"], f"{where}.id"),
                         algebra_from_json(x["algebra"], f"{where}.algebra"),
                         {k: read_int(v, f"{where}.expected.{k}") for k, v in exp.items()})
    read_object(x, where, ("id", "family", "parameters", "cocycle", "expected"), ("metadata",))
    params = x["parameters"]
    if not isinstance(params, dict):
        raise FormatError("expected an object", f"{where}.parameters")
    exp = read_object(x["expected"], f"{where}.expected", ("balanced", "nilpotent", "model_dim"),
               ("invariants",))
    inv = exp.get("invariants", {})
    if not isinstance(inv, dict):
        raise FormatError("expected an object", f"{where}.expected.invariants")
    meta = x.get("metadata", {})
    read_object(meta, f"{where}.metadata", (), ("formula", "separation"))
    if meta.get("separation", "computed") not in ("computed", "asserted"):
        raise FormatError("separation must be 'computed' or 'asserted'", f"{where}.metadata")
    return CatalogEntry(
        id=_str(x["id"], f"{where}.id"),
        family=_str(x["family"], f"{where}.family"),
        parameters={k: read_scalar(v, f"{where}.parameters.{k}") for k, v in params.items()},
        cocycle=cocycle_from_json(x["cocycle"], f"{where}.cocycle"),
        expected=Expected(
            balanced=_bool(exp["balanced"], f"{where}.expected.balanced"),
            nilpotent=_bool(exp["nilpotent"], f"{where}.expected.nilpotent"),
            model_dim=read_int(exp["model_dim"], f"{where}.expected.model_dim"),
            invariants={k: read_scalar(v, f"{where}.expected.invariants.{k}") for k, v in inv.items()},
        ),
        metadata={k: _str(v, f"{where}.metadata.{k}") for k, v in meta.items()},
    )


def _str(x, where):
    if not isinstance(x, str):
        raise FormatError("expected a string", where)
    return x


def loads(text: str, source: str = "<catalog>") -> list:
    entries = []
    ids = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc.msg}", source, lineno) from exc
        try:
            e = entry_from_json(obj)
        except FormatError as exc:
            raise FormatError(str(exc), source, lineno) from exc
        except ValueError as exc:
            raise FormatError(str(exc), source, lineno) from exc
        if e.id in ids:
            raise FormatError(f"duplicate id {e.id!r}", source, lineno)
        ids.add(e.id)
        entries.append(e)
    return entries


def load(path) -> list:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))


def dumps(entries) -> str:
    return "".join(json.dumps(entry_to_json(e), separators=(",", ":")) + "\n" for e in entries)


def dump(entries, path) -> None:
    Path(path).write_text(dumps(entries), encoding="utf-8")


def bundled_path(name: str):
    if name not in BUNDLED:
        raise KeyError(f"no bundled catalog {name!r}; choose from {sorted(BUNDLED)}")
    return resources.files(__package__).joinpath("data", BUNDLED[name])


def load_bundled(name: str) -> list:
    return loads(bundled_path(name).read_text(encoding="utf-8"), BUNDLED[name])
