"""Cocycle triples (gamma, epsilon, xi) and the maps derived from them.

Index conventions, with e_i the basis of l = Q^m, sigma^k its dual basis and
a_j the basis of a:

    gamma[i][j][k]    = gamma(e_i)(a_j)(e_k)
    epsilon[i][j][k]  = epsilon(e_i, e_j)(e_k)   (antisymmetric in i, j)
    xi[i][j][k]       = coefficient of a_k in xi(e_i)(a_j)

For f: a -> l* the dual f*(L) in a is fixed by omega_a(f*(L), A) = f(A)(L).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .. import exactlin as el
from ..exactlin import ZERO
from ..symplectic import SymplecticLieAlgebra


def _tensor(data, d1, d2, d3, name):
    try:
        t = tuple(tuple(el.vec(data[i][j]) for j in range(d2)) for i in range(d1))
    except (IndexError, TypeError) as exc:
        raise ValueError(f"{name} must have shape {d1}x{d2}x{d3}") from exc
    if len(data) != d1 or any(len(r) != d2 for r in data) or any(
        len(v) != d3 for r in t for v in r
    ):
        raise ValueError(f"{name} must have shape {d1}x{d2}x{d3}")
    return t


def zero_tensor(d1, d2, d3):
    return tuple(tuple(el.zero_vec(d3) for _ in range(d2)) for _ in range(d1))


def tensor_from_entries(d1, d2, d3, entries, antisymmetric=False):
    """Dense tensor from (i, j, k, value) entries; duplicates are rejected."""
    t = [[[ZERO] * d3 for _ in range(d2)] for _ in range(d1)]
    seen = set()
    for i, j, k, v in entries:
        if (i, j, k) in seen:
            raise ValueError(f"duplicate entry {(i, j, k)}")
        seen.add((i, j, k))
        if antisymmetric:
            if i >= j:
                raise ValueError(f"antisymmetric entries need i < j, got {(i, j, k)}")
            t[j][i][k] -= el.scalar(v)
        t[i][j][k] += el.scalar(v)
    return t


@dataclass(frozen=True)
class CocycleTriple:
    l_dim: int
    a: SymplecticLieAlgebra
    gamma: tuple
    epsilon: tuple
    xi: tuple

    def __post_init__(self):
        m, n = self.l_dim, self.a.dim
        object.__setattr__(self, "gamma", _tensor(self.gamma, m, n, m, "gamma"))
        object.__setattr__(self, "epsilon", _tensor(self.epsilon, m, m, m, "epsilon"))
        object.__setattr__(self, "xi", _tensor(self.xi, m, n, n, "xi"))
        eps = self.epsilon
        for i in range(m):
            for j in range(i, m):
                if el.add(eps[i][j], eps[j][i]) != el.zero_vec(m):
                    raise ValueError("epsilon must be antisymmetric in its first two slots")

    @classmethod
    def build(cls, l_dim, a, gamma=(), epsilon=(), xi=()):
        """From sparse (i, j, k, value) entries; epsilon entries need i < j."""
        n = a.dim
        return cls(
            l_dim,
            a,
            tensor_from_entries(l_dim, n, l_dim, gamma),
            tensor_from_entries(l_dim, l_dim, l_dim, epsilon, antisymmetric=True),
            tensor_from_entries(l_dim, n, n, xi),
        )

    @classmethod
    def zero(cls, l_dim, a):
        n = a.dim
        return cls(l_dim, a, zero_tensor(l_dim, n, l_dim), zero_tensor(l_dim, l_dim, l_dim),
                   zero_tensor(l_dim, n, n))

    def replace(self, **kw) -> "CocycleTriple":
        args = dict(l_dim=self.l_dim, a=self.a, gamma=self.gamma, epsilon=self.epsilon,
                    xi=self.xi)
        args.update(kw)
        return CocycleTriple(**args)

    @property
    def a_dim(self) -> int:
        return self.a.dim

    @property
    def model_dim(self) -> int:
        return 2 * self.l_dim + self.a.dim

    # ----- evaluation helpers -------------------------------------------
    @cached_property
    def xi_matrices(self) -> tuple:
        """X_i with X_i[k][j] = xi[i][j][k], so xi(e_i) A = X_i A."""
        n = self.a.dim
        return tuple(
            tuple(tuple(self.xi[i][j][k] for j in range(n)) for k in range(n))
            for i in range(self.l_dim)
        )

    @cached_property
    def gamma_matrices(self) -> tuple:
        """G_i (m x n) with G_i[k][j] = gamma(e_i)(a_j)(e_k)."""
        n, m = self.a.dim, self.l_dim
        return tuple(
            tuple(tuple(self.gamma[i][j][k] for j in range(n)) for k in range(m))
            for i in range(m)
        )

    def xi_of(self, L) -> tuple:
        n = self.a.dim
        out = [[ZERO] * n for _ in range(n)]
        for i, c in enumerate(L):
            if c:
                for r, row in enumerate(self.xi_matrices[i]):
                    for q, x in enumerate(row):
                        if x:
                            out[r][q] += c * x
        return tuple(tuple(r) for r in out)

    def xi_apply(self, L, A) -> tuple:
        n = self.a.dim
        out = [ZERO] * n
        for i, c in enumerate(L):
            if c:
                for j, x in enumerate(A):
                    if x:
                        f = c * x
                        for k, y in enumerate(self.xi[i][j]):
                            if y:
                                out[k] += f * y
        return tuple(out)

    def gamma_apply(self, L, A) -> tuple:
        """gamma(L)(A) as an element of l*."""
        m = self.l_dim
        out = [ZERO] * m
        for i, c in enumerate(L):
            if c:
                for j, x in enumerate(A):
                    if x:
                        f = c * x
                        for k, y in enumerate(self.gamma[i][j]):
                            if y:
                                out[k] += f * y
        return tuple(out)

    def eps_apply(self, L1, L2) -> tuple:
        m = self.l_dim
        out = [ZERO] * m
        for i, c in enumerate(L1):
            if c:
                for j, d in enumerate(L2):
                    if d:
                        f = c * d
                        for k, y in enumerate(self.epsilon[i][j]):
                            if y:
                                out[k] += f * y
        return tuple(out)

    # ----- duality on a ------------------------------------------------
    @cached_property
    def _dual_solver(self):
        # omega_a(x, a_j) = (Omega^T x)_j
        if self.a.dim == 0:
            return ()
        return el.inverse(el.transpose(self.a.omega))

    def dual_vector(self, r) -> tuple:
        """The x in a with omega_a(x, a_j) = r_j for all j."""
        return el.matvec(self._dual_solver, r) if self.a.dim else ()

    def star(self, x) -> tuple:
        """x* in a^* ~ row vector: A -> omega_a(x, A)."""
        return el.matvec(el.transpose(self.a.omega), x) if self.a.dim else ()

    # ----- derived maps -----------------------------------------------
    @cached_property
    def derived(self) -> "DerivedMaps":
        return derived_maps(self)

    def alpha_apply(self, L1, L2) -> tuple:
        al = self.derived.alpha
        n = self.a.dim
        out = [ZERO] * n
        for i, c in enumerate(L1):
            if c:
                for j, d in enumerate(L2):
                    if d:
                        for k, y in enumerate(al[i][j]):
                            if y:
                                out[k] += c * d * y
        return tuple(out)

    def beta_apply(self, A1, A2) -> tuple:
        be = self.derived.beta
        out = [ZERO] * self.l_dim
        for i, c in enumerate(A1):
            if c:
                for j, d in enumerate(A2):
                    if d:
                        for k, y in enumerate(be[i][j]):
                            if y:
                                out[k] += c * d * y
        return tuple(out)

    def bracket_a(self, A1, A2) -> tuple:
        return self.a.bracket(A1, A2)


@dataclass(frozen=True)
class DerivedMaps:
    """alpha[i][j] in a is alpha(e_i, e_j); beta[p][q] in l* is beta(a_p, a_q)."""

    alpha: tuple
    beta: tuple


def derived_maps(t: CocycleTriple) -> DerivedMaps:
    m, n = t.l_dim, t.a.dim
    e = el.identity(m)
    a = el.identity(n)

    def gamma_dual(i, l):
        # gamma(e_i)^*(e_l): omega_a(x, a_j) = gamma(e_i)(a_j)(e_l)
        return t.dual_vector(tuple(t.gamma[i][j][l] for j in range(n)))

    alpha = tuple(
        tuple(el.sub(gamma_dual(i, j), gamma_dual(j, i)) for j in range(m)) for i in range(m)
    )
    w = t.a.form
    beta = tuple(
        tuple(
            tuple(
                -w(t.xi_apply(e[k], a[p]), a[q]) - w(a[p], t.xi_apply(e[k], a[q]))
                for k in range(m)
            )
            for q in range(n)
        )
        for p in range(n)
    )
    return DerivedMaps(alpha, beta)


def beta0(t: CocycleTriple, A) -> tuple:
    """beta(A, .) as an m x n matrix (row k, column q: beta(A, a_q)(e_k))."""
    n = t.a.dim
    cols = [t.beta_apply(A, el.unit(n, q)) for q in range(n)]
    return el.from_columns(cols, t.l_dim)


def xi0(t: CocycleTriple, A) -> tuple:
    """L -> xi(L) A as an n x m matrix."""
    m = t.l_dim
    cols = [t.xi_apply(el.unit(m, i), A) for i in range(m)]
    return el.from_columns(cols, t.a.dim)


def gamma0(t: CocycleTriple, A) -> tuple:
    """L -> gamma(L) A as an m x m matrix (column i is gamma(e_i) A)."""
    m = t.l_dim
    cols = [t.gamma_apply(el.unit(m, i), A) for i in range(m)]
    return el.from_columns(cols, m)


def eps_from_matrix(M) -> tuple:
    """epsilon on l = Q^3 from M with M[i][j] = epsilon(v_j)(e_i), where
    v_1 = e_2 ^ e_3, v_2 = e_3 ^ e_1, v_3 = e_1 ^ e_2."""
    M = el.mat(M)
    if len(M) != 3 or any(len(r) != 3 for r in M):
        raise ValueError("M must be 3 x 3")
    eps = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    for col, (p, q) in enumerate(((1, 2), (2, 0), (0, 1))):
        for i in range(3):
            eps[p][q][i] = M[i][col]
            eps[q][p][i] = -M[i][col]
    return eps


def matrix_from_eps(eps) -> tuple:
    if len(eps) != 3:
        raise ValueError("the matrix form of epsilon needs dim l = 3")
    pairs = ((1, 2), (2, 0), (0, 1))
    return tuple(tuple(el.scalar(eps[p][q][i]) for p, q in pairs) for i in range(3))
