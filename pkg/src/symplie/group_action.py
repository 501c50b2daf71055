"""The action of C^1(l, a) and of the pair group G(l, a) on cocycle triples."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from . import exactlin as el
from .exactlin import ZERO
from .lie import LinearMap, check_iso
from .quadext import cochain as co
from .quadext.cocycle import CocycleTriple
from .quadext.model import build_standard_model
from .report import Defect, Report
from .symplectic import SymplecticLieAlgebra

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TauShift:
    """tau: l -> a as rows tau[i] = tau(e_i); sigma_bar is a symmetric m x m matrix
    with sigma_bar[k][i] = sigma_bar(e_i)(e_k)."""

    tau: tuple
    sigma_bar: Optional[tuple] = None

    def __post_init__(self):
        tau = el.mat(self.tau)
        m = len(tau)
        if len({len(r) for r in tau}) > 1:
            raise ValueError("tau rows must have equal length")
        sb = el.zeros(m, m) if self.sigma_bar is None else el.mat(self.sigma_bar)
        if len(sb) != m or any(len(r) != m for r in sb):
            raise ValueError("sigma_bar must be m x m")
        if any(sb[i][j] != sb[j][i] for i in range(m) for j in range(m)):
            raise ValueError("sigma_bar must be symmetric")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "sigma_bar", sb)

    @property
    def l_dim(self) -> int:
        return len(self.tau)

    def __call__(self, L) -> tuple:
        n = len(self.tau[0]) if self.tau else 0
        return el.lincomb(L, self.tau, n)

    def __add__(self, other: "TauShift") -> "TauShift":
        return TauShift(el.add(self.tau, other.tau), el.add(self.sigma_bar, other.sigma_bar))

    @classmethod
    def zero(cls, l_dim: int, a_dim: int) -> "TauShift":
        return cls(el.zeros(l_dim, a_dim))


def _check_shape(t: CocycleTriple, s: TauShift):
    if s.l_dim != t.l_dim or any(len(r) != t.a.dim for r in s.tau):
        raise ValueError("tau does not match the cocycle's (l, a)")


def tau_star(t: CocycleTriple, s: TauShift, A) -> tuple:
    """tau*(A) in l*: L -> omega_a(tau L, A)."""
    return tuple(t.a.form(row, A) for row in s.tau)


def act_tau(t: CocycleTriple, s: TauShift) -> CocycleTriple:
    """Right action (gamma, epsilon, xi) . tau.

    gamma' = gamma + tau* o xi - tau* o ad o tau - beta_0 o tau
    epsilon' = epsilon + tau* alpha - ev(gamma ^ tau) - tau* d_xi tau
               + beta(tau L1, tau L2) + tau*[tau L1, tau L2]
    xi' = xi - ad o tau
    The last epsilon term is forced by requiring phi_{tau, sigma} to be an
    isomorphism of the standard models.
    """
    _check_shape(t, s)
    m, n = t.l_dim, t.a.dim
    e, a = el.identity(m), el.identity(n)
    br = t.a.bracket
    taus = [s(e[i]) for i in range(m)]

    xi = [[el.sub(t.xi[i][j], br(taus[i], a[j])) for j in range(n)] for i in range(m)]
    gamma = [
        [
            el.sub(
                el.add(t.gamma[i][j], tau_star(t, s, el.sub(t.xi_apply(e[i], a[j]),
                                                          br(taus[i], a[j])))),
                t.beta_apply(taus[i], a[j]),
            )
            for j in range(n)
        ]
        for i in range(m)
    ]
    tau_c = co.vector_cochain(m, n, s.tau)
    ev = co.wedge(co.EV, co.gamma_cochain(t), tau_c, el.zero_vec(m))
    dtau = co.d_xi(t.xi_matrices, tau_c)
    alpha = t.derived.alpha
    eps = [[el.zero_vec(m) for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = el.add(t.epsilon[i][j], tau_star(t, s, alpha[i][j]))
            v = el.sub(v, ev(i, j))
            v = el.sub(v, tau_star(t, s, dtau(i, j)))
            v = el.add(v, t.beta_apply(taus[i], taus[j]))
            v = el.add(v, tau_star(t, s, br(taus[i], taus[j])))
            eps[i][j] = v
            eps[j][i] = el.scale(-1, v)
    return CocycleTriple(m, t.a, gamma, eps, xi)


def _tau_star_matrix(t: CocycleTriple, s: TauShift) -> tuple:
    # m x n, row k: A -> omega(tau e_k, A)
    n = t.a.dim
    return tuple(tuple(t.a.form(row, el.unit(n, j)) for j in range(n)) for row in s.tau)


def equivalence_iso(t: CocycleTriple, s: TauShift) -> LinearMap:
    """phi_{tau, sigma}: d_t -> d_{t.tau} in block form
    [[1, tau*, sigma + tau* tau / 2], [0, 1, tau], [0, 0, 1]]."""
    _check_shape(t, s)
    m, n = t.l_dim, t.a.dim
    N = 2 * m + n
    ts = _tau_star_matrix(t, s)
    rows = [[ZERO] * N for _ in range(N)]
    for i in range(N):
        rows[i][i] = el.ONE
    for k in range(m):
        for j in range(n):
            rows[k][m + j] = ts[k][j]
        for i in range(m):
            # (tau* tau)(e_i)(e_k) = omega(tau e_k, tau e_i)
            rows[k][m + n + i] = s.sigma_bar[k][i] + HALF * t.a.form(s.tau[k], s.tau[i])
    for j in range(n):
        for i in range(m):
            rows[m + j][m + n + i] = s.tau[i][j]
    return LinearMap(N, N, rows)


def preserves_form(phi: LinearMap, s1: SymplecticLieAlgebra, s2: SymplecticLieAlgebra) -> Report:
    e = el.identity(s1.dim)
    imgs = [phi(x) for x in e]
    defects = []
    for i in range(s1.dim):
        for j in range(i + 1, s1.dim):
            d = s2.form(imgs[i], imgs[j]) - s1.form(e[i], e[j])
            if d:
                defects.append(Defect("form", (i, j), d))
    return Report(tuple(defects))


def certify_iso(phi: LinearMap, s1: SymplecticLieAlgebra, s2: SymplecticLieAlgebra) -> Report:
    """phi is an isomorphism of symplectic Lie algebras s1 -> s2."""
    return Report(check_iso(s1.g, s2.g, phi).defects + preserves_form(phi, s1, s2).defects)


def certify_equivalence(t: CocycleTriple, s: TauShift) -> Report:
    return certify_iso(equivalence_iso(t, s), build_standard_model(t),
                       build_standard_model(act_tau(t, s)))


def compose_shifts(t: CocycleTriple, first: TauShift, second: TauShift) -> TauShift:
    """The shift with phi_second o phi_first = phi_result (sigma parts included)."""
    m = t.l_dim
    sb = [[first.sigma_bar[k][i] + second.sigma_bar[k][i]
           + HALF * t.a.form(second.tau[k], first.tau[i])
           - HALF * t.a.form(first.tau[k], second.tau[i]) for i in range(m)] for k in range(m)]
    return TauShift(el.add(first.tau, second.tau) if m else (), sb)


# ----- the pair group ----------------------------------------------------
@dataclass(frozen=True)
class PairIso:
    """(S, U) with S: l1 -> l2 invertible and U: a2 -> a1 a symplectic Lie
    isomorphism.  `a_src` is a2 (defaults to a1 = `a`)."""

    S: tuple
    U: tuple
    a: SymplecticLieAlgebra
    a_src: Optional[SymplecticLieAlgebra] = field(default=None)

    def __post_init__(self):
        S, U = el.mat(self.S), el.mat(self.U)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "U", U)
        src = self.a if self.a_src is None else self.a_src
        object.__setattr__(self, "a_src", src)
        m = len(S)
        if any(len(r) != m for r in S) or el.rank(S) != m:
            raise ValueError("S must be an invertible square matrix")
        n = self.a.dim
        if len(U) != n or any(len(r) != src.dim for r in U) or (n and el.rank(U) != n):
            raise ValueError("U must be an invertible map between the a's")
        rep = certify_iso(LinearMap(src.dim, n, U), src, self.a) if n else Report()
        if not rep.ok:
            raise ValueError("U is not a symplectic Lie isomorphism: " + rep.summary())

    @property
    def U_inv(self) -> tuple:
        return el.inverse(self.U) if self.U else ()


def pullback(t: CocycleTriple, p: PairIso) -> CocycleTriple:
    """(S, U)^* t on (l1, a1); t lives on (l2, a2)."""
    if t.a != p.a_src:
        raise ValueError("cocycle does not live on the domain of U")
    m, n = t.l_dim, p.a.dim
    S = p.S
    if len(S) != m:
        raise ValueError("S does not match the cocycle's l")
    Sc = [el.column(S, i) for i in range(m)]
    Ui = p.U_inv
    Uic = [el.column(Ui, j) for j in range(n)] if n else []
    gamma = [[tuple(el.dot(t.gamma_apply(Sc[i], Uic[j]), Sc[k]) for k in range(m))
              for j in range(n)] for i in range(m)]
    eps = [[tuple(el.dot(t.eps_apply(Sc[i], Sc[j]), Sc[k]) for k in range(m))
            for j in range(m)] for i in range(m)]
    xi = [[el.matvec(p.U, t.xi_apply(Sc[i], Uic[j])) for j in range(n)] for i in range(m)]
    return CocycleTriple(m, p.a, gamma, eps, xi)


def pullback_tau(s: TauShift, p: PairIso) -> TauShift:
    """(S, U)^* tau = U o tau o S."""
    m = len(p.S)
    rows = [el.matvec(p.U, s(el.column(p.S, i))) for i in range(m)]
    sb = el.matmul(el.matmul(el.transpose(p.S), s.sigma_bar), p.S) if m else ()
    return TauShift(rows, sb)


def pair_model_iso(t: CocycleTriple, p: PairIso) -> LinearMap:
    """d_{(S,U)^* t} -> d_t : Z + A + L -> Z o S^-1 + U^-1 A + S L."""
    m, n = t.l_dim, p.a.dim
    N = 2 * m + n
    rows = [[ZERO] * N for _ in range(N)]
    sit = el.transpose(el.inverse(p.S))
    Ui = p.U_inv
    for r in range(m):
        for c in range(m):
            rows[r][c] = sit[r][c]
            rows[m + n + r][m + n + c] = p.S[r][c]
    for r in range(n):
        for c in range(n):
            rows[m + r][m + c] = Ui[r][c]
    return LinearMap(N, N, rows)


# ----- equivalence search ----------------------------------------------
@dataclass(frozen=True)
class Equivalence:
    verdict: str  # "witness", "not-equivalent" or "unknown"
    shift: Optional[TauShift] = None
    reason: str = ""


def _affine_columns(f, nvars, base):
    f0 = f(base)
    cols = []
    for u in range(nvars):
        x = list(base)
        x[u] += 1
        cols.append(el.sub(f(tuple(x)), f0))
    return f0, cols


def are_equivalent(t1: CocycleTriple, t2: CocycleTriple) -> Equivalence:
    """Search tau with t1 . tau = t2."""
    if t1.l_dim != t2.l_dim or t1.a != t2.a:
        return Equivalence("not-equivalent", reason="different (l, a)")
    m, n = t1.l_dim, t1.a.dim
    e, a = el.identity(m), el.identity(n)
    nv = m * n

    def shift_of(x):
        return TauShift(tuple(tuple(x[i * n:(i + 1) * n]) for i in range(m)) if m else ())

    def linear_residual(x):
        s = shift_of(x)
        out = []
        for i in range(m):
            ti = s(e[i])
            for j in range(n):
                out.extend(el.add(el.sub(t2.xi[i][j], t1.xi[i][j]), t1.a.bracket(ti, a[j])))
                # gamma-equation with [tau L, A] replaced via the xi-equation
                out.extend(el.add(el.sub(el.sub(t2.gamma[i][j], t1.gamma[i][j]),
                                         tau_star(t1, s, t2.xi_apply(e[i], a[j]))),
                                  t1.beta_apply(ti, a[j])))
        return tuple(out)

    zero = el.zero_vec(nv)
    f0, cols = _affine_columns(linear_residual, nv, zero)
    if f0:
        sol = el.solve(el.from_columns(cols, len(f0)), el.scale(-1, f0), nv)
    else:
        sol = (zero, el.Subspace.full(nv))
    if sol is None:
        return Equivalence("not-equivalent", reason="xi/gamma equations are inconsistent")
    particular, ker = sol
    directions = list(ker.basis)

    def eps_residual(c):
        x = el.add(particular, el.lincomb(c, directions, nv)) if directions else particular
        t = act_tau(t1, shift_of(x))
        return tuple(v for i in range(m) for j in range(i + 1, m)
                     for v in el.sub(t.epsilon[i][j], t2.epsilon[i][j]))

    c = _solve_quadratic_system(eps_residual, len(directions))
    if c is None:
        verdict = "not-equivalent" if not directions else "unknown"
        if not directions:
            return Equivalence(verdict, reason="epsilon equation fails at the unique candidate")
        return Equivalence(verdict, reason="epsilon equation not resolved")
    x = el.add(particular, el.lincomb(c, directions, nv)) if directions else particular
    s = shift_of(x)
    if act_tau(t1, s) != t2:
        return Equivalence("unknown", reason="candidate failed the final check")
    return Equivalence("witness", s)


def _solve_quadratic_system(f, k, depth=0):
    """Find c in Q^k with f(c) = 0, f of degree <= 2; None if not found.

    Components with vanishing quadratic part are solved linearly and the
    problem is reparametrised; a single remaining variable is solved through
    the rational roots of one quadratic component.
    """
    zero = el.zero_vec(k)
    f0 = f(zero)
    if not f0 or el.is_zero(f0):
        return zero
    if k == 0 or depth > 3 * k + 3:
        return None
    unit = [el.unit(k, u) for u in range(k)]
    fu = [f(v) for v in unit]
    fmu = [f(el.scale(-1, v)) for v in unit]
    lin = [el.scale(HALF, el.sub(fu[u], fmu[u])) for u in range(k)]
    quad_diag = [el.sub(el.scale(HALF, el.add(fu[u], fmu[u])), f0) for u in range(k)]
    quad_off = {}
    for u in range(k):
        for v in range(u + 1, k):
            fuv = f(el.add(unit[u], unit[v]))
            quad_off[(u, v)] = el.sub(el.sub(el.add(fuv, f0), fu[u]), fu[v])
    ncomp = len(f0)
    linear_rows = [r for r in range(ncomp)
                   if all(q[r] == 0 for q in quad_diag) and all(q[r] == 0 for q in quad_off.values())]
    if linear_rows:
        A = tuple(tuple(lin[u][r] for u in range(k)) for r in linear_rows)
        b = tuple(-f0[r] for r in linear_rows)
        sol = el.solve(A, b, k)
        if sol is None:
            return None
        p, ker = sol
        dirs = list(ker.basis)
        if len(dirs) < k:
            def g(d):
                return f(el.add(p, el.lincomb(d, dirs, k)))

            sub = _solve_quadratic_system(g, len(dirs), depth + 1)
            if sub is None:
                return None
            return el.add(p, el.lincomb(sub, dirs, k))
    if k == 1:
        for r in range(ncomp):
            qa, qb, qc = quad_diag[0][r], lin[0][r], f0[r]
            if qa == 0 and qb == 0:
                continue
            for root in _rational_roots(qa, qb, qc):
                if el.is_zero(f((root,))):
                    return (root,)
            return None
    return None


def _rational_roots(a, b, c) -> list:
    if a == 0:
        return [-c / b] if b else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = _rational_sqrt(disc)
    if r is None:
        return []
    return sorted({(-b + r) / (2 * a), (-b - r) / (2 * a)})


def _rational_sqrt(x: Fraction):
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
