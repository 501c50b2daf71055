"""Predicates on cocycle triples."""
from __future__ import annotations

from itertools import combinations

from .. import exactlin as el
from ..exactlin import Subspace
from ..lie import derivation_defects, is_nilpotent
from ..report import Defect, Report
from . import cochain as co
from .cocycle import CocycleTriple, beta0, gamma0, xi0

CONDITION_NAMES = {
    "1:derivation": "xi(L) is a derivation of a",
    "1:curvature": "[xi(L1), xi(L2)] = ad(alpha(L1, L2))",
    "1:bianchi": "d_xi alpha = 0",
    "2": "beta(xi(L)A1, A2) + beta(A1, xi(L)A2) = gamma(L)[A1, A2]",
    "3": "d_xi^ gamma + beta_0 o alpha = 0",
    "4": "ev(gamma ^ alpha) = 0",
    "5": "cyclic sum of epsilon(L1, L2)(L3) = 0",
}


def violated(report: Report) -> list:
    """Condition numbers 1..5 that fail in a cocycle report."""
    return sorted({int(d.condition.split(":")[0]) for d in report.defects})


def _factor_defects(t: CocycleTriple) -> list:
    defects = []
    X = t.xi_matrices
    for i in range(t.l_dim):
        for where, diff in derivation_defects(t.a.g, X[i]):
            defects.append(Defect("1:derivation", (i,) + where, diff))
    if t.l_dim >= 2:
        xi = co.xi_cochain(t)
        n = t.a.dim
        curv = co.wedge(co.COMMUTATOR, xi, xi, el.zeros(n, n)).scaled(el.scalar("1/2"))
        alpha = t.derived.alpha
        for (i, j), v in curv.values.items():
            diff = el.sub(v, t.a.g.ad(alpha[i][j])) if n else ()
            if not el.is_zero(diff):
                defects.append(Defect("1:curvature", (i, j), diff))
    if t.l_dim >= 3:
        for idx, v in co.d_xi(X, co.alpha_cochain(t)).nonzero():
            defects.append(Defect("1:bianchi", idx, v))
    return defects


def is_factor_system(t: CocycleTriple) -> Report:
    return Report(tuple(_factor_defects(t)))


def is_cocycle(t: CocycleTriple) -> Report:
    defects = _factor_defects(t)
    m, n = t.l_dim, t.a.dim
    e, a = el.identity(m), el.identity(n)
    # 2
    for i in range(m):
        for p in range(n):
            for q in range(p + 1, n):
                lhs = el.add(t.beta_apply(t.xi_apply(e[i], a[p]), a[q]),
                             t.beta_apply(a[p], t.xi_apply(e[i], a[q])))
                diff = el.sub(lhs, t.gamma_apply(e[i], t.a.bracket(a[p], a[q])))
                if not el.is_zero(diff):
                    defects.append(Defect("2", (i, p, q), diff))
    if m >= 2:
        # 3
        gamma = co.gamma_cochain(t)
        lhs = co.d_xi_hat(t.xi_matrices, gamma)
        alpha = t.derived.alpha
        for (i, j), v in lhs.values.items():
            total = el.add(v, beta0(t, alpha[i][j])) if n else v
            if not el.is_zero(total):
                defects.append(Defect("3", (i, j), total))
    if m >= 3:
        # 4
        ev = co.wedge(co.EV, co.gamma_cochain(t), co.alpha_cochain(t), el.zero_vec(m))
        for idx, v in ev.nonzero():
            defects.append(Defect("4", idx, v))
        # 5
        eps = t.epsilon
        for i, j, k in combinations(range(m), 3):
            s = eps[i][j][k] + eps[j][k][i] + eps[k][i][j]
            if s:
                defects.append(Defect("5", (i, j, k), s))
    return Report(tuple(defects))


def balanced_a_kernel(t: CocycleTriple) -> Subspace:
    """Solutions (L, A) of the four equations in condition (a)."""
    m, n = t.l_dim, t.a.dim
    N = m + n
    rows = []
    e, a = el.identity(m), el.identity(n)

    def columns(f):
        # f(L, A) is linear; return its matrix by evaluating on unit vectors
        cols = [f(el.unit(m, i), el.zero_vec(n)) for i in range(m)]
        cols += [f(el.zero_vec(m), el.unit(n, j)) for j in range(n)]
        return el.from_columns(cols, len(cols[0]) if cols else 0)

    for q in range(n):
        # ad(A) a_q + xi(L) a_q = 0
        rows.extend(columns(lambda L, A: el.add(t.a.bracket(A, a[q]), t.xi_apply(L, a[q]))))
        # gamma(L) a_q + beta(A, a_q) = 0
        rows.extend(columns(lambda L, A: el.add(t.gamma_apply(L, a[q]), t.beta_apply(A, a[q]))))
    for r in range(m):
        # alpha(L, e_r) = xi(e_r) A
        rows.extend(columns(lambda L, A: el.sub(t.alpha_apply(L, e[r]), t.xi_apply(e[r], A))))
        # epsilon(L, e_r) = gamma(e_r) A
        rows.extend(columns(lambda L, A: el.sub(t.eps_apply(L, e[r]), t.gamma_apply(e[r], A))))
    return el.kernel(tuple(r for r in rows if len(r) == N), N)


def balanced_b_space(t: CocycleTriple) -> Subspace:
    """z(a) cap ker beta_0 cap ker xi_0 cap ker gamma_0."""
    n = t.a.dim
    rows = []
    basis = el.identity(n)
    # each map A -> (matrix) is linear in A; collect its coefficient rows
    maps = [
        lambda A: t.a.g.ad(A),
        lambda A: beta0(t, A),
        lambda A: xi0(t, A),
        lambda A: gamma0(t, A),
    ]
    for f in maps:
        images = [_flatten(f(A)) for A in basis]
        if images and images[0]:
            rows.extend(el.transpose(images))
    return el.kernel(tuple(rows), n) if rows else Subspace.full(n)


def _flatten(mx) -> tuple:
    return tuple(x for row in mx for x in row)


def is_balanced(t: CocycleTriple) -> Report:
    defects = []
    m = t.l_dim
    ker = balanced_a_kernel(t)
    for v in ker.basis:
        L = v[:m]
        if not el.is_zero(L):
            defects.append(Defect("a", (), v))
    w = balanced_b_space(t)
    if w.dim:
        gram = tuple(tuple(t.a.form(x, y) for y in w.basis) for x in w.basis)
        r = el.rank(gram)
        if r < w.dim:
            defects.append(Defect("b", (), tuple(w.basis)))
    return Report(tuple(defects))


def xi_algebra(t: CocycleTriple) -> Subspace:
    """Associative algebra generated by the xi(e_i), as flattened matrices."""
    n = t.a.dim
    gens = [t.xi_matrices[i] for i in range(t.l_dim)]
    space = Subspace(n * n, (_flatten(g) for g in gens))
    frontier = list(space.basis)
    while frontier:
        new = []
        for f in frontier:
            fm = _unflatten(f, n)
            for g in gens:
                prod = _flatten(el.matmul(fm, g))
                if not space.contains(prod):
                    space = Subspace(n * n, space.basis + (prod,))
                    new.append(prod)
        frontier = new
    return space


def _unflatten(v, n):
    return tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n))


def is_nilpotent_algebra_of_matrices(space: Subspace, n: int) -> bool:
    """A >= A^2 >= ... reaches 0."""
    power = space
    while power.dim:
        nxt = Subspace(n * n, (
            _flatten(el.matmul(_unflatten(x, n), _unflatten(y, n)))
            for x in power.basis for y in space.basis
        ))
        if nxt.dim == power.dim:
            return False
        power = nxt
    return True


def is_nilpotent_cocycle(t: CocycleTriple) -> Report:
    defects = []
    ok, _ = is_nilpotent(t.a.g)
    if not ok:
        defects.append(Defect("a-nilpotent", (), None))
    n = t.a.dim
    if n and not is_nilpotent_algebra_of_matrices(xi_algebra(t), n):
        defects.append(Defect("xi-nilpotent", (), None))
    return Report(tuple(defects))
