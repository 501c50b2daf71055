"""Command line interface.  Exit codes: 0 ok, 1 verification failure, 2 usage
or parse error."""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from .formats import (
    FormatError,
    algebra_from_json,
    algebra_to_json,
    cocycle_from_json,
    cocycle_to_json,
    lie_from_json,
    matrix_to_json,
    pair_from_json,
    read_json,
    tau_from_json,
    tau_to_json,
    write_json,
)
from .group_action import act_tau, are_equivalent, certify_equivalence, equivalence_iso, pullback
from .invariants import applicable_invariants, eps_key_of
from .lie import center, is_nilpotent, validate_lie
from .quadext import build_standard_model, is_balanced, is_cocycle, is_nilpotent_cocycle
from .quadext.conditions import CONDITION_NAMES, violated
from .symplectic import reduce, validate_symplectic

OK, FAIL, USAGE = 0, 1, 2


class Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data = {}
        self.lines = []

    def put(self, key, value, text=None):
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def emit(self):
        if self.as_json:
            print(json.dumps(self.data, indent=1))
        else:
            print("\n".join(self.lines))


def _vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _write_or_print(obj, path, out: Out, key):
    if path:
        write_json(obj, path)
        out.put("written", path)
    else:
        out.put(key, obj, write_json(obj))


def cmd_validate(args, out):
    data = read_json(args.file)
    if isinstance(data, dict) and "omega" in data:
        s = algebra_from_json(data)
        rep = validate_symplectic(s)
        g = s.g
    else:
        g = lie_from_json(data)
        rep = validate_lie(g)
    out.put("ok", rep.ok, "valid" if rep.ok else "INVALID")
    if not rep.ok:
        out.put("defects", rep.to_json()["defects"], rep.summary())
    else:
        ok, cls = is_nilpotent(g)
        out.put("center_dim", center(g).dim)
        out.put("nilpotency_class", cls if ok else None)
    return OK if rep.ok else FAIL


def cmd_reduce(args, out):
    s = algebra_from_json(read_json(args.file))
    r = reduce(s)
    out.put("j", [[str(x) for x in v] for v in r.j.basis],
            "j: " + ", ".join(_vec(v) for v in r.j.basis))
    out.put("l_dim", r.l_dim)
    out.put("a_dim", r.a.dim)
    if args.output:
        write_json(algebra_to_json(r.a), args.output)
        out.put("written", args.output)
    else:
        out.put("a", algebra_to_json(r.a), "a: " + json.dumps(algebra_to_json(r.a)))
    return OK


def cmd_cocycle_check(args, out):
    t = cocycle_from_json(read_json(args.file))
    rep = is_cocycle(t)
    out.put("cocycle", rep.ok, "cocycle: yes" if rep.ok else "cocycle: NO")
    if not rep.ok:
        out.put("violated", violated(rep),
                "violated conditions: " + ", ".join(map(str, violated(rep))))
        out.put("defects", rep.to_json()["defects"],
                "\n".join(f"  [{d.condition}] {CONDITION_NAMES[d.condition]} at {d.where}"
                          for d in rep.defects[:20]))
    else:
        bal = is_balanced(t)
        out.put("balanced", bal.ok)
        if bal.ok:
            out.put("nilpotent", is_nilpotent_cocycle(t).ok)
    return OK if rep.ok else FAIL


def cmd_model_build(args, out):
    t = cocycle_from_json(read_json(args.file))
    s = build_standard_model(t)
    write_json(algebra_to_json(s), args.output)
    out.put("written", args.output)
    out.put("dim", s.dim)
    return OK


def cmd_act_tau(args, out):
    t = cocycle_from_json(read_json(args.file))
    s = tau_from_json(read_json(args.tau), t.l_dim, t.a.dim)
    t2 = act_tau(t, s)
    rep = certify_equivalence(t, s)
    obj = {"cocycle": cocycle_to_json(t2), "phi": matrix_to_json(equivalence_iso(t, s).matrix),
           "certified": rep.ok}
    _write_or_print(obj, args.output, out, "result")
    out.put("certified", rep.ok)
    return OK if rep.ok else FAIL


def cmd_pullback(args, out):
    t = cocycle_from_json(read_json(args.file))
    p = pair_from_json(read_json(args.pair), t.a, t.l_dim)
    _write_or_print(cocycle_to_json(pullback(t, p)), args.output, out, "cocycle")
    return OK


def cmd_invariants(args, out):
    t = cocycle_from_json(read_json(args.file))
    found = False
    if t.l_dim == 1:
        for k, v in applicable_invariants(t).items():
            out.put(k, str(v))
            found = True
    if t.l_dim == 3 and t.a.dim == 0:
        try:
            key = eps_key_of(t)
            out.put("eps_orbit_key", [str(x) for x in key])
            found = True
        except ValueError as exc:
            out.put("eps_orbit_key", None, f"eps_orbit_key: undefined ({exc})")
    if not found:
        out.put("invariants", {}, "no implemented invariant applies")
    return OK


def cmd_equiv(args, out):
    t1 = cocycle_from_json(read_json(args.file1))
    t2 = cocycle_from_json(read_json(args.file2))
    res = are_equivalent(t1, t2)
    out.put("verdict", res.verdict)
    if res.shift is not None:
        out.put("tau", tau_to_json(res.shift), "tau: " + json.dumps(tau_to_json(res.shift)))
    if res.reason:
        out.put("reason", res.reason)
    return OK if res.verdict == "witness" else FAIL


def cmd_catalog_verify(args, out):
    sources = args.catalogs or ["dim4", "dim6"]
    entries = []
    for src in sources:
        entries.extend(cat.load_bundled(src) if src in cat.store.BUNDLED else cat.load(src))
    rep = cat.verify_catalog(entries, jobs=args.jobs)
    out.put("entries", len(entries))
    out.put("ok", rep.ok)
    for eid in rep.failing:
        rep_e = rep.entries[eid]
        out.put(f"failed:{eid}", rep_e.to_json(), f"FAILED {eid}:\n{rep_e.summary()}")
    out.put("separated_pairs", len(rep.separated))
    out.put("unseparated", [list(p) for p in rep.unseparated],
            "unseparated: " + (", ".join("/".join(p) for p in rep.unseparated) or "none"))
    out.put("asserted_pairs", len(rep.asserted),
            f"asserted pairs (distinct by classification, not decided by implemented invariants): "
            f"{len(rep.asserted)}")
    return OK if rep.ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    p = argparse.ArgumentParser(prog="symplie", parents=[common],
                                description="Quadratic extensions of symplectic Lie algebras")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", parents=[common], help="check Lie and symplectic axioms")
    q.add_argument("file")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("reduce", parents=[common], help="reduce by the canonical ideal")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("cocycle", help="cocycle predicates")
    qs = q.add_subparsers(dest="action", required=True)
    r = qs.add_parser("check", parents=[common])
    r.add_argument("file")
    r.set_defaults(func=cmd_cocycle_check)

    q = sub.add_parser("model", help="standard model")
    qs = q.add_subparsers(dest="action", required=True)
    r = qs.add_parser("build", parents=[common])
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_model_build)

    q = sub.add_parser("act", help="act on a cocycle")
    qs = q.add_subparsers(dest="action", required=True)
    r = qs.add_parser("tau", parents=[common])
    r.add_argument("file")
    r.add_argument("--tau", required=True)
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_act_tau)

    q = sub.add_parser("pullback", parents=[common], help="pull back by (S, U)")
    q.add_argument("file")
    q.add_argument("--pair", required=True)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_pullback)

    q = sub.add_parser("invariants", parents=[common], help="orbit invariants")
    q.add_argument("file")
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("equiv", parents=[common], help="search a tau relating two cocycles")
    q.add_argument("file1")
    q.add_argument("file2")
    q.set_defaults(func=cmd_equiv)

    q = sub.add_parser("catalog", help="catalog tools")
    qs = q.add_subparsers(dest="action", required=True)
    r = qs.add_parser("verify", parents=[common])
    r.add_argument("catalogs", nargs="*", help="files or bundled names (dim4, dim6)")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_catalog_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    out = Out(getattr(args, "json", False))
    try:
        code = args.func(args, out)
    except (FormatError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
