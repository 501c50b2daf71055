"""Symplectic Lie algebras, the canonical isotropic ideal and reduction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import exactlin as el
from .exactlin import ZERO, Subspace
from .lie import LieAlgebra, LinearMap, center, is_ideal, validate_lie
from .report import Defect, Report


@dataclass(frozen=True)
class SymplecticLieAlgebra:
    g: LieAlgebra
    omega: tuple

    def __post_init__(self):
        om = el.mat(self.omega)
        n = self.g.dim
        if len(om) != n or any(len(r) != n for r in om):
            raise ValueError("form matrix does not match the algebra dimension")
        object.__setattr__(self, "omega", om)

    @property
    def dim(self) -> int:
        return self.g.dim

    def form(self, x, y):
        return el.bilinear(self.omega, x, y)

    def bracket(self, x, y):
        return self.g.bracket(x, y)

    @classmethod
    def from_form(cls, g: LieAlgebra, pairs: Mapping) -> "SymplecticLieAlgebra":
        """omega from {(i, j): value} with i < j, closed up skew-symmetrically."""
        n = g.dim
        om = [[ZERO] * n for _ in range(n)]
        for (i, j), v in pairs.items():
            v = el.scalar(v)
            om[i][j] += v
            om[j][i] -= v
        return cls(g, om)

    @classmethod
    def zero(cls) -> "SymplecticLieAlgebra":
        return cls(LieAlgebra(0, ()), ())

    def is_nondegenerate(self) -> bool:
        return el.rank(self.omega) == self.dim


def d_omega(s: SymplecticLieAlgebra, x, y, z):
    """-w([x,y],z) + w([x,z],y) - w([y,z],x)."""
    br, w = s.g.bracket, s.form
    return -w(br(x, y), z) + w(br(x, z), y) - w(br(y, z), x)


def validate_symplectic(s: SymplecticLieAlgebra, check_lie: bool = True) -> Report:
    defects = list(validate_lie(s.g).defects) if check_lie else []
    n = s.dim
    om = s.omega
    for i in range(n):
        for j in range(i, n):
            if om[i][j] != -om[j][i]:
                defects.append(Defect("skew", (i, j), om[i][j] + om[j][i]))
    if not s.is_nondegenerate():
        defects.append(Defect("nondegenerate", (), el.rank(om)))
    e = s.g.basis()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                v = d_omega(s, e[i], e[j], e[k])
                if v:
                    defects.append(Defect("closed", (i, j, k), v))
    return Report(tuple(defects))


def perp(s: SymplecticLieAlgebra, w: Subspace) -> Subspace:
    return el.perp(w, s.omega)


def canonical_isotropic_ideal(s: SymplecticLieAlgebra) -> Subspace:
    """z(g) intersected with its orthogonal."""
    z = center(s.g)
    return el.intersect(z, perp(s, z))


def is_isotropic(s: SymplecticLieAlgebra, w: Subspace) -> bool:
    return all(s.form(x, y) == 0 for x in w.basis for y in w.basis)


@dataclass(frozen=True)
class ReductionResult:
    """Data of the reduction by an isotropic ideal j.

    The ambient algebra splits as j + V_a + V_l with V_l isotropic and
    j^perp = j + V_a.  `zeta` is the basis of j dual to `section_l`, i.e.
    omega(zeta_k, section_l[i]) = delta_ki.
    """

    j: Subspace
    a: SymplecticLieAlgebra
    l_dim: int
    zeta: tuple
    section_a: tuple
    section_l: tuple
    to_l: LinearMap
    to_a: LinearMap
    to_j: LinearMap

    @property
    def frame(self) -> LinearMap:
        """The map l* + a + l -> g: Z + A + L -> p*Z + t(A) + s(L)."""
        cols = list(self.zeta) + list(self.section_a) + list(self.section_l)
        return LinearMap.from_columns(cols, self.j.ambient_dim)


def reduce(s: SymplecticLieAlgebra, j: Subspace = None) -> ReductionResult:
    """Symplectic reduction by j (default: the canonical isotropic ideal)."""
    if j is None:
        j = canonical_isotropic_ideal(s)
    n = s.dim
    if not is_isotropic(s, j):
        raise ValueError("subspace is not isotropic")
    if not is_ideal(s.g, j):
        raise ValueError("subspace is not an ideal")
    jp = perp(s, j)
    if not is_ideal(s.g, jp):
        raise ValueError("orthogonal of the ideal is not an ideal")
    m = j.dim
    w = [el.unit(n, i) for i in el.complete_to_basis(jp)]
    # zeta0_k in j with omega(zeta0_k, w_l) = delta_kl
    zeta = _dual_in(s, j, w)
    # make the complement isotropic by shifting inside j
    shifted = []
    for i in range(m):
        v = w[i]
        for k in range(m):
            c = s.form(w[i], w[k])
            if c:
                v = el.sub(v, el.scale(c / 2, zeta[k]))
        shifted.append(v)
    vl = shifted
    va_space = el.intersect(jp, el.perp(j + Subspace(n, vl), s.omega))
    va = list(va_space.basis)
    frame = el.from_columns(list(zeta) + va + vl, n)
    inv = el.inverse(frame)
    to_j = LinearMap(n, m, inv[:m])
    to_a = LinearMap(n, len(va), inv[m:m + len(va)])
    to_l = LinearMap(n, m, inv[m + len(va):])
    k = len(va)
    c = [[to_a(s.bracket(va[x], va[y])) for y in range(k)] for x in range(k)]
    om = [[s.form(va[x], va[y]) for y in range(k)] for x in range(k)]
    a = SymplecticLieAlgebra(LieAlgebra(k, c), om)
    return ReductionResult(j, a, m, tuple(zeta), tuple(va), tuple(vl), to_l, to_a, to_j)


def _dual_in(s: SymplecticLieAlgebra, j: Subspace, w: list) -> list:
    m = j.dim
    # pairing matrix P[k][l] = omega(j_k, w_l); zeta_k = sum_r Q[r][k] j_r
    p = tuple(tuple(s.form(jk, wl) for wl in w) for jk in j.basis)
    q = el.inverse(el.transpose(p))  # Q^T P = I
    return [el.lincomb([q[r][k] for r in range(m)], j.basis, s.dim) for k in range(m)]


def extract_cocycle(s: SymplecticLieAlgebra):
    """Quadratic-extension data of s with respect to its canonical ideal.

    Returns (cocycle, frame) where frame maps the standard model onto s.
    """
    from .quadext.cocycle import CocycleTriple

    j = canonical_isotropic_ideal(s)
    if j.dim == 0:
        raise ValueError("the canonical isotropic ideal is zero; the center is non-degenerate")
    r = reduce(s, j)
    m = r.l_dim
    sl, va = r.section_l, r.section_a
    gamma = [[[ZERO] * m for _ in va] for _ in range(m)]
    xi = [[[ZERO] * len(va) for _ in va] for _ in range(m)]
    for i in range(m):
        for jj, v in enumerate(va):
            br = s.bracket(sl[i], v)
            gamma[i][jj] = list(r.to_j(br))
            xi[i][jj] = list(r.to_a(br))
    eps = [[[s.form(s.bracket(sl[i], sl[jj]), sl[k]) for k in range(m)] for jj in range(m)]
           for i in range(m)]
    t = CocycleTriple(m, r.a, gamma, eps, xi)
    return t, r.frame
