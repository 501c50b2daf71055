"""The standard model d_{gamma, epsilon, xi}(l, a) on l* + a + l."""
from __future__ import annotations

from .. import exactlin as el
from ..exactlin import ZERO
from ..lie import LieAlgebra
from ..symplectic import SymplecticLieAlgebra
from .cocycle import CocycleTriple


def block_slices(t: CocycleTriple):
    m, n = t.l_dim, t.a.dim
    return slice(0, m), slice(m, m + n), slice(m + n, 2 * m + n)


def build_standard_model(t: CocycleTriple) -> SymplecticLieAlgebra:
    """Basis order: sigma^1..sigma^m, a_1..a_n, e_1..e_m.  Never rejects; a
    non-cocycle gives a model whose validation reports the defects."""
    m, n = t.l_dim, t.a.dim
    N = 2 * m + n
    Z, A, L = 0, m, m + n
    br = {}

    def put(i, j, z_part, a_part):
        v = [ZERO] * N
        for k, x in enumerate(z_part):
            v[Z + k] = x
        for k, x in enumerate(a_part):
            v[A + k] = x
        if any(v):
            br[(i, j)] = v

    ea = el.identity(n)
    for p in range(n):
        for q in range(p + 1, n):
            put(A + p, A + q, t.beta_apply(ea[p], ea[q]), t.a.bracket(ea[p], ea[q]))
    for p in range(n):
        for i in range(m):
            # [a_p, e_i] = -(gamma(e_i) a_p + xi(e_i) a_p)
            put(A + p, L + i, el.scale(-1, t.gamma[i][p]), el.scale(-1, t.xi[i][p]))
    for i in range(m):
        for j in range(i + 1, m):
            put(L + i, L + j, t.epsilon[i][j], t.derived.alpha[i][j])
    g = LieAlgebra.from_brackets(N, br)
    om = [[ZERO] * N for _ in range(N)]
    for k in range(m):
        om[Z + k][L + k] = el.ONE
        om[L + k][Z + k] = -el.ONE
    for p in range(n):
        for q in range(n):
            om[A + p][A + q] = t.a.omega[p][q]
    return SymplecticLieAlgebra(g, om)


def lstar_block(t: CocycleTriple) -> el.Subspace:
    N = t.model_dim
    return el.Subspace(N, (el.unit(N, k) for k in range(t.l_dim)))
