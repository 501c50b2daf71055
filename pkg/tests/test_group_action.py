from fractions import Fraction as F

import pytest

from symplie import algebras
from symplie import exactlin as el
from symplie.catalog import families as fam
from symplie.group_action import (
    PairIso,
    TauShift,
    act_tau,
    are_equivalent,
    certify_equivalence,
    certify_iso,
    compose_shifts,
    equivalence_iso,
    pair_model_iso,
    pullback,
    pullback_tau,
    tau_star,
)
from symplie.quadext import CocycleTriple, build_standard_model, is_cocycle

from support import random_pair, random_tau, rng_for

S = fam.s
H3R = algebras.h3r()
LM66A = CocycleTriple.build(1, H3R, [S(1, 3, 1)], [], fam.xi1_ij())
LM66A_IMAGE = CocycleTriple.build(1, H3R, [S(1, 1, 1), S(1, 3, 1)], [], fam.xi1_ij(0, -1))
TAU_A1 = TauShift([[1, 0, 0, 0]])


def test_tau_shift_validation():
    with pytest.raises(ValueError):
        TauShift([[1, 0], [0]])
    with pytest.raises(ValueError):
        TauShift([[1], [0]], [[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        act_tau(LM66A, TauShift([[1, 0]]))


def test_zero_shift_is_trivial():
    for e in fam.dim6_entries()[::9]:
        t = e.cocycle
        z = TauShift.zero(t.l_dim, t.a.dim)
        assert act_tau(t, z) == t
        assert equivalence_iso(t, z).matrix == el.identity(t.model_dim)


def test_lm66a_instance():
    assert act_tau(LM66A, TAU_A1) == LM66A_IMAGE
    assert certify_equivalence(LM66A, TAU_A1).ok


def test_lm66a_general_tau():
    # gamma' = (t1 + t2^2) a^1 - (t1 t2 + t4) a^2 + a^3 + 2 t2 a^4 at (t1..t4) = (2, 3, 5, 7)
    t1, t2, t3, t4 = 2, 3, 5, 7
    out = act_tau(LM66A, TauShift([[t1, t2, t3, t4]]))
    assert [out.gamma[0][j][0] for j in range(4)] == [t1 + t2 ** 2, -(t1 * t2 + t4), 1, 2 * t2]


def test_equivalence_iso_certified_on_random_shifts():
    rng = rng_for(21)
    for e in fam.dim6_entries():
        t = e.cocycle
        s = random_tau(rng, t.l_dim, t.a.dim)
        assert certify_equivalence(t, s).ok, e.id
        assert is_cocycle(act_tau(t, s)).ok


def test_missing_epsilon_term_breaks_the_isomorphism():
    t = CocycleTriple.zero(2, H3R)
    s = TauShift([[1, 0, 0, 0], [0, 1, 0, 0]])
    good = act_tau(t, s)
    extra = tau_star(t, s, H3R.bracket(s.tau[0], s.tau[1]))
    assert extra != (0, 0)
    eps = [[list(v) for v in row] for row in good.epsilon]
    eps[0][1] = list(el.sub(eps[0][1], extra))
    eps[1][0] = list(el.add(eps[1][0], extra))
    bad = good.replace(epsilon=eps)
    phi = equivalence_iso(t, s)
    assert certify_iso(phi, build_standard_model(t), build_standard_model(good)).ok
    assert not certify_iso(phi, build_standard_model(t), build_standard_model(bad)).ok


def test_action_is_additive_and_phi_composes():
    rng = rng_for(22)
    entries = fam.dim6_entries()
    for _ in range(30):
        t = rng.choice(entries).cocycle
        s1, s2 = random_tau(rng, t.l_dim, t.a.dim), random_tau(rng, t.l_dim, t.a.dim)
        t1 = act_tau(t, s1)
        assert act_tau(t1, s2) == act_tau(t, s1 + s2)
        comp = compose_shifts(t, s1, s2)
        lhs = equivalence_iso(t1, s2).compose(equivalence_iso(t, s1))
        assert lhs.matrix == equivalence_iso(t, comp).matrix


def test_pair_validation():
    with pytest.raises(ValueError):
        PairIso([[0]], el.identity(4), H3R)
    with pytest.raises(ValueError):
        PairIso([[1]], el.diag([2, 1, 1, 1]), H3R)  # breaks the form
    with pytest.raises(ValueError):
        PairIso([[1]], [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], H3R)


def test_identity_pair():
    for e in fam.dim6_entries()[::6]:
        t = e.cocycle
        p = PairIso(el.identity(t.l_dim), el.identity(t.a.dim), t.a)
        assert pullback(t, p) == t


def test_lm68_pullback():
    t = CocycleTriple.build(1, H3R, fam.gamma_form(y2=1, y4=1), [], fam.xi1n_ij(1))
    p = PairIso([[-1]], el.diag([1, -1, -1, 1]), H3R)
    expect = CocycleTriple.build(1, H3R, fam.gamma_form(y2=-1, y4=1), [], fam.xi1n_ij(1))
    assert pullback(t, p) == expect


def test_scaling_pullback():
    a = algebras.r4()
    t = CocycleTriple.build(1, a, [S(1, 1, 1, 32)], [], fam.xi_1())
    p = PairIso([[F(1, 4)]], el.diag([2, F(1, 2), 1, 1]), a)
    assert pullback(t, p) == CocycleTriple.build(1, a, fam.GAMMA0, [], fam.xi_1())


def test_pullback_composition_and_model_iso():
    rng = rng_for(23)
    entries = fam.dim6_entries()
    for _ in range(25):
        t = rng.choice(entries).cocycle
        p1, p2 = random_pair(rng, t), random_pair(rng, t)
        both = PairIso(el.matmul(p2.S, p1.S), el.matmul(p1.U, p2.U) if t.a.dim else (), t.a)
        assert pullback(pullback(t, p2), p1) == pullback(t, both)
        t2 = pullback(t, p1)
        assert is_cocycle(t2).ok
        assert certify_iso(pair_model_iso(t, p1), build_standard_model(t2),
                           build_standard_model(t)).ok


def test_pullback_intertwines_the_action():
    rng = rng_for(24)
    entries = fam.dim6_entries()
    for _ in range(25):
        t = rng.choice(entries).cocycle
        p = random_pair(rng, t)
        s = random_tau(rng, t.l_dim, t.a.dim)
        assert pullback(act_tau(t, s), p) == act_tau(pullback(t, p), pullback_tau(s, p))


def test_are_equivalent_examples():
    t = fam.rr4_entries()[0].cocycle
    res = are_equivalent(t, t)
    assert res.verdict == "witness" and el.is_zero(res.shift.tau)
    res = are_equivalent(LM66A, LM66A_IMAGE)
    assert res.verdict == "witness" and res.shift.tau == ((1, 0, 0, 0),)
    plus, minus = fam.rr4_entries()[1].cocycle, fam.rr4_entries()[2].cocycle
    assert are_equivalent(plus, minus).verdict == "not-equivalent"
    assert are_equivalent(plus, LM66A).verdict == "not-equivalent"


def test_are_equivalent_finds_random_shifts():
    rng = rng_for(25)
    for e in fam.dim6_entries()[::3]:
        t = e.cocycle
        s = random_tau(rng, t.l_dim, t.a.dim, with_sigma=False)
        res = are_equivalent(t, act_tau(t, s))
        assert res.verdict == "witness", e.id
        assert act_tau(t, res.shift) == act_tau(t, s)


def test_are_equivalent_with_quadratic_epsilon_equation():
    rng = rng_for(26)
    t = CocycleTriple.zero(2, H3R)
    found = 0
    for _ in range(10):
        s = random_tau(rng, 2, 4, with_sigma=False)
        target = act_tau(t, s)
        res = are_equivalent(t, target)
        assert res.verdict in ("witness", "unknown")
        if res.verdict == "witness":
            assert act_tau(t, res.shift) == target
            found += 1
    assert found >= 8
