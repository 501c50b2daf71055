import dataclasses
import json

import pytest

from symplie import catalog as cat
from symplie.catalog import build, families as fam
from symplie.catalog.store import bundled_path, entry_to_json
from symplie.formats import FormatError
from symplie.quadext.cocycle import eps_from_matrix


def test_bundled_files_match_the_generators():
    assert bundled_path("dim4").read_text() == cat.dumps(build.dim4_entries())
    assert bundled_path("dim6").read_text() == cat.dumps(fam.dim6_entries())


def test_bundled_contents():
    d4 = cat.load_bundled("dim4")
    assert [e.id for e in d4] == ["R4", "n4", "h3+R"]
    d6 = cat.load_bundled("dim6")
    assert len(d6) >= 40
    assert {e.family for e in d6} == set(fam.FAMILIES)
    assert all(e.cocycle.a.dim != 4 or not e.cocycle.a.g.is_abelian() or e.family == fam.RR4
               for e in d6)
    with pytest.raises(KeyError):
        cat.load_bundled("dim8")


def test_round_trip_and_empty():
    entries = fam.dim6_entries()
    assert cat.loads(cat.dumps(entries)) == entries
    assert cat.loads("") == []
    assert cat.loads("\n\n") == []


def test_file_io(tmp_path):
    p = tmp_path / "c.jsonl"
    cat.dump(fam.rr4_entries(), p)
    assert cat.load(p) == fam.rr4_entries()


def test_line_diagnostics():
    lines = cat.dumps(fam.rr4_entries()[:3]).splitlines()
    obj = json.loads(lines[1])
    obj["surprise"] = 1
    lines[1] = json.dumps(obj)
    with pytest.raises(FormatError) as exc:
        cat.loads("\n".join(lines))
    assert exc.value.line == 2 and "unknown field" in str(exc.value)
    with pytest.raises(FormatError) as exc:
        cat.loads(lines[0] + "\n{not json\n")
    assert exc.value.line == 2


def test_duplicate_ids_rejected():
    line = cat.dumps(fam.rr4_entries()[:1])
    with pytest.raises(FormatError, match="duplicate id"):
        cat.loads(line + line)


def test_metadata_validation():
    obj = entry_to_json(fam.rr4_entries()[0])
    obj["metadata"]["separation"] = "maybe"
    with pytest.raises(FormatError):
        cat.loads(json.dumps(obj))


def test_verify_bundled():
    rep = cat.verify_catalog(cat.load_bundled("dim4") + cat.load_bundled("dim6"))
    assert rep.ok, rep.failing
    assert not rep.unseparated
    assert len(rep.separated) > 0


def test_trace_one_entry_is_red_on_condition_5():
    e = fam.r3_matrix_entries()[0]
    bad = dataclasses.replace(e, id="bad", cocycle=e.cocycle.replace(
        epsilon=eps_from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])))
    rep = cat.verify_entry(bad)
    assert not rep.ok
    assert "cocycle:5" in rep.conditions()


def test_duplicate_entry_is_unseparated():
    for e in (fam.r3_matrix_entries()[1], fam.r2r2_entries()[0]):
        dup = dataclasses.replace(e, id=e.id + "-copy")
        rep = cat.distinctness([e, dup])
        assert rep.unseparated == [(e.id, dup.id)]
        assert not cat.verify_catalog([e, dup]).ok


def test_wrong_expectation_is_reported():
    e = fam.rr4_entries()[1]
    ex = dataclasses.replace(e.expected, invariants={"sign_xi2": -1})
    rep = cat.verify_entry(dataclasses.replace(e, expected=ex))
    assert rep.conditions() == ["invariant"]


def test_parallel_matches_serial():
    entries = fam.dim6_entries()[:12]
    a = cat.verify_catalog(entries, jobs=1)
    b = cat.verify_catalog(entries, jobs=2)
    assert a.to_json() == b.to_json()
