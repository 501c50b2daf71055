"""JSON encodings of algebras, cocycles, shifts and pairs.

Scalars are strings "p/q" or "p" (ints are accepted on input); indices are
0-based.  Unknown fields and repeated index tuples are errors.
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import exactlin as el
from .exactlin import ZERO
from .group_action import PairIso, TauShift
from .lie import LieAlgebra
from .quadext.cocycle import CocycleTriple
from .symplectic import SymplecticLieAlgebra


class FormatError(ValueError):
    def __init__(self, message, where="", line=None):
        self.where = where
        self.line = line
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if where:
            prefix += f"{where}: "
        super().__init__(prefix + message)


def read_scalar(x, where) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"expected an exact scalar string, got {x!r}", where)
    try:
        return el.scalar(x)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc), where) from exc


def read_int(x, where, lo=0, hi=None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"expected an integer, got {x!r}", where)
    if x < lo or (hi is not None and x >= hi):
        raise FormatError(f"index {x} out of range", where)
    return x


def read_object(x, where, required, optional=()):
    if not isinstance(x, dict):
        raise FormatError("expected an object", where)
    unknown = set(x) - set(required) - set(optional)
    if unknown:
        raise FormatError(f"unknown field(s) {sorted(unknown)}", where)
    missing = [k for k in required if k not in x]
    if missing:
        raise FormatError(f"missing field(s) {missing}", where)
    return x


def _list(x, where):
    if not isinstance(x, list):
        raise FormatError("expected a list", where)
    return x


def _entries(x, where, arity, bounds, ordered_pairs=False):
    """List of [idx..., scalar] rows -> list of (idx tuple, Fraction)."""
    out = []
    seen = set()
    for r, row in enumerate(_list(x, where)):
        w = f"{where}[{r}]"
        if not isinstance(row, list) or len(row) != arity + 1:
            raise FormatError(f"expected {arity} indices and a scalar", w)
        idx = tuple(read_int(row[p], f"{w}[{p}]", 0, bounds[p]) for p in range(arity))
        if ordered_pairs and not idx[0] < idx[1]:
            raise FormatError("first two indices must be increasing", w)
        if idx in seen:
            raise FormatError(f"duplicate index tuple {list(idx)}", w)
        seen.add(idx)
        out.append((idx, read_scalar(row[arity], f"{w}[{arity}]")))
    return out


def _s(x: Fraction) -> str:
    return str(x)


# ----- algebras -------------------------------------------------------
def lie_to_json(g: LieAlgebra) -> dict:
    rows = []
    for (i, j), v in sorted(g.bracket_table().items()):
        rows.extend([i, j, k, _s(x)] for k, x in enumerate(v) if x)
    return {"dim": g.dim, "brackets": rows}


def algebra_to_json(s: SymplecticLieAlgebra) -> dict:
    out = lie_to_json(s.g)
    out["omega"] = [[i, j, _s(s.omega[i][j])] for i in range(s.dim)
                    for j in range(i + 1, s.dim) if s.omega[i][j]]
    return out


def lie_from_json(x, where="algebra", allow_omega=False) -> LieAlgebra:
    read_object(x, where, ("dim", "brackets"), ("omega",) if allow_omega else ())
    n = read_int(x["dim"], f"{where}.dim")
    rows = _entries(x["brackets"], f"{where}.brackets", 3, (n, n, n), ordered_pairs=True)
    br = {}
    for (i, j, k), v in rows:
        br.setdefault((i, j), {})[k] = v
    return LieAlgebra.from_brackets(n, br)


def algebra_from_json(x, where="algebra") -> SymplecticLieAlgebra:
    read_object(x, where, ("dim", "brackets", "omega"))
    g = lie_from_json(x, where, allow_omega=True)
    rows = _entries(x["omega"], f"{where}.omega", 2, (g.dim, g.dim), ordered_pairs=True)
    return SymplecticLieAlgebra.from_form(g, {idx: v for idx, v in rows})


# ----- cocycles -------------------------------------------------------
def cocycle_to_json(t: CocycleTriple) -> dict:
    m, n = t.l_dim, t.a.dim

    def rows(tensor, d1, d2, d3, pairs=False):
        return [[i, j, k, _s(tensor[i][j][k])] for i in range(d1) for j in range(d2)
                for k in range(d3) if tensor[i][j][k] and (not pairs or i < j)]

    return {
        "l_dim": m,
        "a": algebra_to_json(t.a),
        "gamma": rows(t.gamma, m, n, m),
        "epsilon": rows(t.epsilon, m, m, m, pairs=True),
        "xi": rows(t.xi, m, n, n),
    }


def cocycle_from_json(x, where="cocycle") -> CocycleTriple:
    read_object(x, where, ("l_dim", "a", "gamma", "epsilon", "xi"))
    m = read_int(x["l_dim"], f"{where}.l_dim")
    a = algebra_from_json(x["a"], f"{where}.a")
    n = a.dim
    g = _entries(x["gamma"], f"{where}.gamma", 3, (m, n, m))
    e = _entries(x["epsilon"], f"{where}.epsilon", 3, (m, m, m), ordered_pairs=True)
    xi = _entries(x["xi"], f"{where}.xi", 3, (m, n, n))
    return CocycleTriple.build(m, a, [i + (v,) for i, v in g], [i + (v,) for i, v in e],
                               [i + (v,) for i, v in xi])


# ----- shifts and pairs ---------------------------------------------
def tau_to_json(s: TauShift) -> dict:
    m = s.l_dim
    return {
        "tau": [[i, j, _s(v)] for i, row in enumerate(s.tau) for j, v in enumerate(row) if v],
        "sigma_bar": [[i, j, _s(s.sigma_bar[i][j])] for i in range(m) for j in range(i, m)
                      if s.sigma_bar[i][j]],
    }


def tau_from_json(x, l_dim: int, a_dim: int, where="tau") -> TauShift:
    read_object(x, where, ("tau",), ("sigma_bar",))
    tau = [[ZERO] * a_dim for _ in range(l_dim)]
    for (i, j), v in _entries(x["tau"], f"{where}.tau", 2, (l_dim, a_dim)):
        tau[i][j] = v
    sb = [[ZERO] * l_dim for _ in range(l_dim)]
    for (i, j), v in _entries(x.get("sigma_bar", []), f"{where}.sigma_bar", 2, (l_dim, l_dim)):
        if i > j:
            raise FormatError("sigma_bar entries need i <= j", f"{where}.sigma_bar")
        sb[i][j] = sb[j][i] = v
    return TauShift(tau, sb)


def _matrix(x, where, rows, cols):
    out = []
    for r, row in enumerate(_list(x, where)):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"expected {cols} entries", f"{where}[{r}]")
        out.append([read_scalar(v, f"{where}[{r}][{c}]") for c, v in enumerate(row)])
    if len(out) != rows:
        raise FormatError(f"expected {rows} rows", where)
    return out


def pair_to_json(p: PairIso) -> dict:
    return {"S": [[_s(v) for v in r] for r in p.S], "U": [[_s(v) for v in r] for r in p.U]}


def pair_from_json(x, a: SymplecticLieAlgebra, l_dim: int, where="pair") -> PairIso:
    read_object(x, where, ("S", "U"))
    S = _matrix(x["S"], f"{where}.S", l_dim, l_dim)
    U = _matrix(x["U"], f"{where}.U", a.dim, a.dim)
    try:
        return PairIso(S, U, a)
    except ValueError as exc:
        raise FormatError(str(exc), where) from exc


def matrix_to_json(m) -> list:
    return [[_s(v) for v in r] for r in m]


# ----- files ----------------------------------------------------------
def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", str(path), exc.lineno) from exc


def write_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=1)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
