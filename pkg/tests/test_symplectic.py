import pytest

from symplie import algebras
from symplie import exactlin as el
from symplie.catalog import families as fam
from symplie.group_action import certify_iso
from symplie.lie import LieAlgebra
from symplie.quadext import CocycleTriple, build_standard_model, is_balanced, is_cocycle
from symplie.quadext.cocycle import eps_from_matrix, zero_tensor
from symplie.quadext.model import lstar_block
from symplie.symplectic import (
    SymplecticLieAlgebra,
    canonical_isotropic_ideal,
    d_omega,
    extract_cocycle,
    is_isotropic,
    reduce,
    validate_symplectic,
)

import oracles


def test_validate_examples():
    assert validate_symplectic(algebras.h3r()).ok
    assert validate_symplectic(algebras.r4()).ok
    assert validate_symplectic(algebras.n4()).ok
    rep = validate_symplectic(algebras.h3r_wrong_form())
    assert rep.conditions() == ["closed"]
    d = rep.first("closed")
    assert d.where == (0, 1, 3) and d.value == -1
    s = algebras.h3r_wrong_form()
    c = oracles.table(4, {(0, 1): {2: 1}})
    assert oracles.closedness_defects(c, s.omega) == {(0, 1, 3): -1}


def test_validate_rejects_bad_forms():
    g = LieAlgebra.abelian(2)
    assert validate_symplectic(SymplecticLieAlgebra(g, ((0, 1), (1, 0)))).conditions() == ["skew"]
    assert validate_symplectic(SymplecticLieAlgebra(g, ((0, 0), (0, 0)))).conditions() == \
        ["nondegenerate"]


def test_d_omega_is_trilinear_cyclic_sum():
    s = algebras.h3r_wrong_form()
    e = el.identity(4)
    assert d_omega(s, e[0], e[1], e[3]) == -1
    assert d_omega(s, e[1], e[3], e[0]) == -1


def test_canonical_ideal():
    e = el.identity(4)
    assert canonical_isotropic_ideal(algebras.r4()).dim == 0
    j = canonical_isotropic_ideal(algebras.h3r())
    assert j == el.span([e[2], e[3]], 4)
    assert is_isotropic(algebras.h3r(), j)


def test_reduce_h3r():
    r = reduce(algebras.h3r())
    assert r.j == el.span([el.unit(4, 2), el.unit(4, 3)], 4)
    assert r.a.dim == 0 and r.l_dim == 2


def test_reduce_abelian():
    s = algebras.abelian(6)
    r = reduce(s)
    assert r.j.dim == 0 and r.l_dim == 0
    assert r.a.dim == 6 and r.a.omega == s.omega


def test_reduce_gamma0_xi1_model():
    t = fam.rr4_entries()[0].cocycle
    s = build_standard_model(t)
    r = reduce(s)
    assert r.j == lstar_block(t)
    assert r.l_dim == 1 and r.a.dim == 4
    assert r.a.g.is_abelian() and validate_symplectic(r.a).ok


def test_extract_requires_degenerate_center():
    with pytest.raises(ValueError):
        extract_cocycle(algebras.r4())


def test_extract_r3_exact():
    M = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    t = CocycleTriple(3, algebras.zero(), zero_tensor(3, 0, 3), eps_from_matrix(M),
                      zero_tensor(3, 0, 0))
    t2, frame = extract_cocycle(build_standard_model(t))
    assert t2.epsilon == t.epsilon
    assert t2.gamma == t.gamma and t2.xi == t.xi


@pytest.mark.parametrize("entry", fam.dim6_entries()[::7], ids=lambda e: e.id)
def test_extract_produces_balanced_cocycle_and_certified_frame(entry):
    s = build_standard_model(entry.cocycle)
    t2, frame = extract_cocycle(s)
    assert is_cocycle(t2).ok and is_balanced(t2).ok
    assert certify_iso(frame, build_standard_model(t2), s).ok
