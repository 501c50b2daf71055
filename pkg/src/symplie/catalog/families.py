"""Parametrised families of nilpotent balanced cocycles on dimension-6
symplectic nilpotent Lie algebras, sampled at rational parameter values.

Helper notation: s(i, j, k, v) stands for v * sigma^i (x) alpha^j (x) sigma^k in
gamma, for v * sigma^i (x) alpha^j (x) a_k in xi, and for
v * sigma^i ^ sigma^j (x) sigma^k in epsilon, all 1-based as in the usual
written form.
"""
from __future__ import annotations

from fractions import Fraction as F

from .. import algebras
from ..quadext.cocycle import CocycleTriple, eps_from_matrix
from ..quadext.cocycle import zero_tensor
from .entries import CatalogEntry, Expected

R3 = "R3-zero"
RR4 = "R-R4"
RH3R = "R-h3R"
R2R2 = "R2-R2"
FAMILIES = (R3, RR4, RH3R, R2R2)


def s(i, j, k, v=1):
    return (i - 1, j - 1, k - 1, F(v))


def _merge(*parts):
    """Sum entry lists that may hit the same index."""
    acc = {}
    for part in parts:
        for i, j, k, v in part:
            acc[(i, j, k)] = acc.get((i, j, k), 0) + v
    return [(i, j, k, v) for (i, j, k), v in acc.items() if v]


def _scaled(c, part):
    return [(i, j, k, F(c) * v) for i, j, k, v in part]


def _triple(l_dim, a, gamma=(), epsilon=(), xi=()):
    return CocycleTriple.build(l_dim, a, _merge(gamma), _merge(epsilon), _merge(xi))


def _entry(id_, family, params, t, formula, invariants=None, separation="computed"):
    return CatalogEntry(
        id=id_,
        family=family,
        parameters={k: F(v) for k, v in params.items()},
        cocycle=t,
        expected=Expected(balanced=True, nilpotent=True, model_dim=t.model_dim,
                          invariants={k: F(v) for k, v in (invariants or {}).items()}),
        metadata={"formula": formula, "separation": separation},
    )


# ----- l = Q^3, a = 0 -----------------------------------------------------
def r3_matrix_entries():
    def entry(id_, M, params, formula):
        t = CocycleTriple(3, algebras.zero(), zero_tensor(3, 0, 3), eps_from_matrix(M),
                          zero_tensor(3, 0, 0))
        return _entry(id_, R3, params, t, formula)

    out = []
    for b in (F(0), F(1, 2), F(1)):
        out.append(entry(f"r3-diag-b{b}", [[1, 0, 0], [0, b, 0], [0, 0, -1 - b]], {"b": b},
                         "M = diag(1, b, -1-b), 0 <= b <= 1"))
    out.append(entry("r3-jordan", [[1, 1, 0], [0, 1, 0], [0, 0, -2]], {},
                     "M = [[1,1,0],[0,1,0],[0,0,-2]]"))
    for z in (F(1), F(2)):
        out.append(entry(f"r3-rot-z{z}", [[1, z, 0], [-z, 1, 0], [0, 0, -2]], {"z": z},
                         "M = [[1,z,0],[-z,1,0],[0,0,-2]], z > 0"))
    out.append(entry("r3-rot0", [[0, 1, 0], [-1, 0, 0], [0, 0, 0]], {},
                     "M = [[0,1,0],[-1,0,0],[0,0,0]]"))
    out.append(entry("r3-nil", [[0, 1, 0], [0, 0, 1], [0, 0, 0]], {},
                     "M = [[0,1,0],[0,0,1],[0,0,0]]"))
    return out


# ----- l = Q, a = Q^4 -----------------------------------------------------
GAMMA0 = [s(1, 1, 1)]


def xi_1():
    return [s(1, 2, 1)]


def xi_pm(sign):
    return [s(1, 3, 1), s(1, 2, 3, sign)]


def xi_kappa(kappa):
    return [s(1, 4, 1), s(1, 2, 3), s(1, 3, 4), s(1, 3, 1, kappa)]


def rr4_entries():
    a = algebras.r4()
    out = [_entry("r-r4-xi1", RR4, {}, _triple(1, a, GAMMA0, (), xi_1()),
                  "(gamma0, 0, xi_1)", {"sign_xi2": 0})]
    for sign, name in ((1, "plus"), (-1, "minus")):
        out.append(_entry(f"r-r4-xi{name}", RR4, {}, _triple(1, a, GAMMA0, (), xi_pm(sign)),
                          f"(gamma0, 0, xi_{'+' if sign > 0 else '-'})", {"sign_xi2": sign}))
    for kappa in (F(-1), F(0), F(1), F(2)):
        out.append(_entry(f"r-r4-kappa{kappa}", RR4, {"kappa": kappa},
                          _triple(1, a, GAMMA0, (), xi_kappa(kappa)),
                          "(gamma0, 0, xi^kappa), kappa in R", {"kappa7": kappa ** 7}))
    return out


# ----- l = Q, a = h3 + Q --------------------------------------------------
def xi1_ij(i=0, j=0):
    return [s(1, 1, 3, i), s(1, 1, 4), s(1, 2, 3, j), s(1, 4, 3)]


def xi1_ij_l(i, j, l):
    return [s(1, 1, 3, i), s(1, 1, 4), s(1, 2, 1), s(1, 2, 3, j), s(1, 4, 3, l)]


def xi1n_ij(n, i=0, j=0):
    return [s(1, 1, 2), s(1, 1, 3, i), s(1, 2, 3, j), s(1, 2, 4, n)]


def gamma_form(**coeffs):
    """sigma^1 (x) (sum y_k alpha^k) (x) sigma^1 from y1=..., y3=... keywords."""
    return [s(1, int(k[1:]), 1, v) for k, v in coeffs.items()]


def rh3r_entries():
    a = algebras.h3r()
    out = [_entry("r-h3r-xi1", RH3R, {}, _triple(1, a, gamma_form(y3=1), (), xi1_ij()),
                  "(alpha^3, 0, xi^1)", {"sign_xi2_rev": 0}, separation="asserted")]
    for l in (F(-2), F(1, 2), F(3)):
        out.append(_entry(f"r-h3r-l{l}", RH3R, {"l": l},
                          _triple(1, a, gamma_form(y3=l + 1), (), xi1_ij_l(0, 0, l)),
                          "((l+1) alpha^3, 0, xi^1(l)), l not in {0, -1}",
                          {"l_ratio": l, "sign_xi2_rev": 0}))
    for y1 in (F(-1), F(0), F(1), F(2)):
        out.append(_entry(f"r-h3r-y1_{y1}", RH3R, {"y1": y1},
                          _triple(1, a, gamma_form(y1=y1, y3=1), (), xi1_ij_l(0, 0, 0)),
                          "(y1 alpha^1 + alpha^3, 0, xi^1(0)), y1 in R",
                          {"sign_xi2_rev": 0}, separation="asserted"))
    for n in (1, -1):
        for y2 in (F(0), F(1), F(2)):
            for y4 in (F(-1), F(2)):
                out.append(_entry(
                    f"r-h3r-n{n}-y2_{y2}-y4_{y4}", RH3R, {"n": n, "y2": y2, "y4": y4},
                    _triple(1, a, gamma_form(y2=y2, y4=y4), (), xi1n_ij(n)),
                    "(y2 alpha^2 + y4 alpha^4, 0, xi^{1,n}), n = +-1, y2 >= 0, y4 != 0",
                    {"sign_xi2_rev": n}, separation="asserted"))
    for y2 in (F(0), F(1), F(2)):
        for y4 in (1, -1):
            out.append(_entry(
                f"r-h3r-n0-y2_{y2}-y4_{y4}", RH3R, {"y2": y2, "y4": y4},
                _triple(1, a, gamma_form(y2=y2, y4=y4), (), xi1n_ij(0)),
                "(y2 alpha^2 +- alpha^4, 0, xi^{1,0}), y2 >= 0",
                {"sign_xi2_rev": 0}, separation="asserted"))
    return out


# ----- l = Q^2, a = Q^2 ---------------------------------------------------
GAMMA_A = [s(1, 2, 2), s(2, 2, 1, -1)]
GAMMA_S1 = [s(1, 2, 1), s(2, 2, 2)]
GAMMA_S2 = [s(1, 2, 2), s(2, 2, 1)]
GAMMA_M1 = [s(1, 1, 1), s(2, 1, 2, -1)]
XI0 = [s(1, 2, 1)]
EPS12 = [s(1, 2, 2)]


def gamma_1xy(x, y):
    return [s(1, 1, 2), s(2, 2, 1, x), s(2, 2, 2, y)]


def gamma1_xy(x, y):
    return [s(1, 1, 1), s(2, 2, 1, x), s(2, 2, 2, y)]


def gamma1_t(t):
    return [s(1, 1, 1), s(2, 1, 2), s(1, 2, 1, t), s(2, 2, 2, -t)] + GAMMA_A


def gamma0_t(t):
    return [s(1, 1, 1), s(1, 2, 2, t), s(2, 2, 1, t)] + GAMMA_A


def gamma0_pm(sign):
    return [s(1, 1, 1), s(2, 2, 2, sign)] + GAMMA_A


def r2r2_entries():
    a = algebras.r2()
    out = []

    def add(id_, params, gamma, eps, xi, formula):
        out.append(_entry(id_, R2R2, params, _triple(2, a, gamma, eps, xi), formula,
                          separation="asserted"))

    for t in (F(-1), F(0), F(1)):
        add(f"r2r2-g1xy-t{t}-1", {"t": t}, gamma_1xy(t, 1), (), XI0,
            "(gamma_{1,t,1}, 0, xi^0)")
    for x in (1, -1):
        add(f"r2r2-g1xy-{x}-0", {"x": x}, gamma_1xy(x, 0), (), XI0, "(gamma_{1,+-1,0}, 0, xi^0)")
    add("r2r2-g1xy-0-0", {}, gamma_1xy(0, 0), (), XI0, "(gamma_{1,0,0}, 0, xi^0)")
    for y in (1, -1):
        add(f"r2r2-g1-0-{y}", {"y": y}, gamma1_xy(0, y), (), XI0, "(gamma^1_{0,+-1}, 0, xi^0)")
    for t in (F(-1), F(0), F(1)):
        add(f"r2r2-g1-1-0-eps{t}", {"t": t}, gamma1_xy(1, 0), _scaled(t, EPS12), XI0,
            "(gamma^1_{1,0}, t sigma^1^sigma^2 (x) sigma^2, xi^0)")
    for sign in (1, -1):
        add(f"r2r2-g1-0-0-eps{sign}", {"sign": sign}, gamma1_xy(0, 0), _scaled(sign, EPS12),
            XI0, "(gamma^1_{0,0}, +- sigma^1^sigma^2 (x) sigma^2, xi^0)")
    for t in (F(0), F(1), F(2)):
        add(f"r2r2-gamma1t-{t}", {"t": t}, gamma1_t(t), (), (), "(gamma^1_t, 0, 0), t >= 0")
    for t in (F(-1), F(0), F(1), F(-3)):
        add(f"r2r2-gamma0t-{t}", {"t": t}, gamma0_t(t), (), (), "(gamma^0_t, 0, 0)")
    add("r2r2-gamma0t--3-eps", {"t": -3}, gamma0_t(-3), EPS12, (),
        "(gamma^0_{-3}, sigma^1^sigma^2 (x) sigma^2, 0)")
    for sign in (1, -1):
        add(f"r2r2-gamma0pm-{sign}", {"sign": sign}, gamma0_pm(sign), (), (),
            "(gamma^0_+-, 0, 0)")
    add("r2r2-gm1-a", {}, GAMMA_M1 + GAMMA_A, (), (), "(gamma^-1 + gamma_a, 0, 0)")
    for k in (1, 2):
        add(f"r2r2-gm1-s1-k{k}", {"kappa": k}, GAMMA_M1 + GAMMA_S1 + _scaled(k, GAMMA_A), (), (),
            "(gamma^-1 + gamma_s1 + kappa gamma_a, 0, 0), kappa > 0")
        add(f"r2r2-gm1-s2-k{k}", {"kappa": k}, GAMMA_M1 + GAMMA_S2 + _scaled(k, GAMMA_A), (), (),
            "(gamma^-1 + gamma_s2 + kappa gamma_a, 0, 0), kappa > 0")
    for sign in (1, -1):
        add(f"r2r2-gm1-s1s2-{sign}", {"sign": sign},
            GAMMA_M1 + GAMMA_S1 + GAMMA_S2 + _scaled(sign, GAMMA_A), (), (),
            "(gamma^-1 + gamma_s1 + gamma_s2 +- gamma_a, 0, 0)")
    return out


def dim6_entries():
    return r3_matrix_entries() + rr4_entries() + rh3r_entries() + r2r2_entries()
