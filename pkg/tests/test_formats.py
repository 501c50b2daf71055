import json
from fractions import Fraction as F

import pytest

from symplie import algebras
from symplie.catalog import families as fam
from symplie.formats import (
    FormatError,
    algebra_from_json,
    algebra_to_json,
    cocycle_from_json,
    cocycle_to_json,
    pair_from_json,
    pair_to_json,
    read_json,
    tau_from_json,
    tau_to_json,
)
from symplie.group_action import PairIso, TauShift


def test_algebra_round_trip():
    for s in (algebras.h3r(), algebras.n4(), algebras.r4(), algebras.zero()):
        assert algebra_from_json(json.loads(json.dumps(algebra_to_json(s)))) == s


def test_cocycle_round_trip():
    for e in fam.dim6_entries():
        d = json.loads(json.dumps(cocycle_to_json(e.cocycle)))
        assert cocycle_from_json(d) == e.cocycle


def test_scalars_are_strings():
    d = cocycle_to_json(fam.rh3r_entries()[2].cocycle)
    text = json.dumps(d)
    assert "." not in text
    assert all(isinstance(r[-1], str) for r in d["gamma"] + d["xi"])


def test_tau_and_pair_round_trip():
    s = TauShift([[1, F(1, 2), 0, 0]], [[F(-3, 4)]])
    assert tau_from_json(tau_to_json(s), 1, 4) == s
    p = PairIso([[F(1, 4)]], [[2, 0, 0, 0], [0, F(1, 2), 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                algebras.r4())
    assert pair_from_json(pair_to_json(p), algebras.r4(), 1) == p


@pytest.mark.parametrize("bad, msg", [
    ({"dim": 2, "brackets": [], "omega": [[0, 1, "1"]], "extra": 1}, "unknown field"),
    ({"dim": 2, "brackets": [], "omega": [[0, 1, "1"], [0, 1, "2"]]}, "duplicate"),
    ({"dim": 2, "brackets": [], "omega": [[1, 0, "1"]]}, "increasing"),
    ({"dim": 2, "brackets": [], "omega": [[0, 2, "1"]]}, "out of range"),
    ({"dim": 2, "brackets": [], "omega": [[0, 1, 0.5]]}, "exact scalar"),
    ({"dim": 2, "brackets": [], "omega": [[0, 1, "x"]]}, r"omega\[0\]\[2\]: not an exact rational"),
    ({"dim": 2, "brackets": []}, "missing"),
])
def test_algebra_errors(bad, msg):
    with pytest.raises(FormatError, match=msg):
        algebra_from_json(bad)


def test_cocycle_errors():
    d = cocycle_to_json(fam.rr4_entries()[0].cocycle)
    d["gamma"].append(list(d["gamma"][0]))
    with pytest.raises(FormatError, match="duplicate"):
        cocycle_from_json(d)
    d = cocycle_to_json(fam.r3_matrix_entries()[0].cocycle)
    d["epsilon"][0] = [1, 0, 0, "1"]
    with pytest.raises(FormatError, match="increasing"):
        cocycle_from_json(d)


def test_pair_errors():
    with pytest.raises(FormatError, match="symplectic"):
        pair_from_json({"S": [["1"]], "U": [["2", "0", "0", "0"], ["0", "1", "0", "0"],
                                            ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
                       algebras.h3r(), 1)
    with pytest.raises(FormatError, match="rows"):
        pair_from_json({"S": [], "U": []}, algebras.h3r(), 1)


def test_tau_sigma_needs_upper_triangle():
    with pytest.raises(FormatError):
        tau_from_json({"tau": [], "sigma_bar": [[1, 0, "1"]]}, 2, 2)


def test_read_json_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n "dim": 2,\n oops\n}')
    with pytest.raises(FormatError) as exc:
        read_json(p)
    assert exc.value.line == 3
