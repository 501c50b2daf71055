"""Finite-dimensional Lie algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from . import exactlin as el
from .exactlin import ZERO, Subspace
from .report import Defect, Report


@dataclass(frozen=True)
class LinearMap:
    """A linear map Q^src -> Q^dst stored as a dst x src matrix."""

    src_dim: int
    dst_dim: int
    matrix: tuple

    def __post_init__(self):
        m = el.mat(self.matrix)
        if len(m) != self.dst_dim or any(len(r) != self.src_dim for r in m):
            raise ValueError(
                f"matrix shape does not match {self.dst_dim}x{self.src_dim}"
            )
        object.__setattr__(self, "matrix", m)

    def __call__(self, v):
        return el.matvec(self.matrix, el.vec(v)) if self.dst_dim else ()

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.dst_dim != self.src_dim:
            raise ValueError("dimension mismatch in composition")
        cols = [self(el.column(other.matrix, j)) for j in range(other.src_dim)]
        return LinearMap(other.src_dim, self.dst_dim, el.from_columns(cols, self.dst_dim))

    def inverse(self) -> "LinearMap":
        if self.src_dim != self.dst_dim:
            raise ValueError("only square maps can be inverted")
        return LinearMap(self.src_dim, self.dst_dim, el.inverse(self.matrix))

    def is_invertible(self) -> bool:
        return self.src_dim == self.dst_dim and el.rank(self.matrix) == self.src_dim

    def image(self) -> Subspace:
        cols = [el.column(self.matrix, j) for j in range(self.src_dim)]
        return Subspace(self.dst_dim, cols)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, el.identity(n))

    @classmethod
    def from_columns(cls, cols, dst_dim: int) -> "LinearMap":
        return cls(len(cols), dst_dim, el.from_columns([el.vec(c) for c in cols], dst_dim))


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j][k]: coefficient of e_k in [e_i, e_j].

    Construction does not check the axioms; use validate_lie.
    """

    dim: int
    c: tuple

    def __post_init__(self):
        n = self.dim
        c = tuple(tuple(el.vec(self.c[i][j]) for j in range(n)) for i in range(n))
        if len(self.c) != n or any(len(r) != n for r in self.c) or any(
            len(v) != n for r in c for v in r
        ):
            raise ValueError("structure constants must be a dim x dim x dim tensor")
        object.__setattr__(self, "c", c)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping) -> "LieAlgebra":
        """Build from {(i, j): vector or {k: coeff}} with antisymmetric closure."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in brackets.items():
            if i == j:
                raise ValueError(f"bracket [e{i}, e{i}] must vanish")
            if isinstance(val, Mapping):
                v = [ZERO] * dim
                for k, x in val.items():
                    v[k] += el.scalar(x)
            else:
                v = list(el.vec(val))
            for k in range(dim):
                c[i][j][k] = v[k]
                c[j][i][k] = -v[k]
        return cls(dim, c)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, tuple(tuple(el.zero_vec(dim) for _ in range(dim)) for _ in range(dim)))

    @cached_property
    def _nonzero(self):
        return tuple(
            (i, j, self.c[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
            if not el.is_zero(self.c[i][j])
        )

    def bracket(self, x, y):
        n = self.dim
        out = [ZERO] * n
        for i, j, v in self._nonzero:
            xi, yj = x[i], y[j]
            if xi and yj:
                f = xi * yj
                for k in range(n):
                    if v[k]:
                        out[k] += f * v[k]
        return tuple(out)

    def basis(self):
        return el.identity(self.dim)

    def ad(self, x) -> tuple:
        """Matrix of ad_x (columns are [x, e_j])."""
        cols = [self.bracket(x, e) for e in self.basis()]
        return el.from_columns(cols, self.dim)

    def is_abelian(self) -> bool:
        return not self._nonzero

    def bracket_table(self) -> dict:
        return {
            (i, j): self.c[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if not el.is_zero(self.c[i][j])
        }


def bracket(g: LieAlgebra, x, y):
    return g.bracket(el.vec(x), el.vec(y))


def jacobiator(g: LieAlgebra, x, y, z):
    return el.add(
        el.add(g.bracket(g.bracket(x, y), z), g.bracket(g.bracket(y, z), x)),
        g.bracket(g.bracket(z, x), y),
    )


def validate_lie(g: LieAlgebra) -> Report:
    defects = []
    n = g.dim
    for i in range(n):
        if not el.is_zero(g.c[i][i]):
            defects.append(Defect("antisymmetry", (i, i), g.c[i][i]))
        for j in range(i + 1, n):
            s = el.add(g.c[i][j], g.c[j][i])
            if not el.is_zero(s):
                defects.append(Defect("antisymmetry", (i, j), s))
    e = g.basis()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                jac = jacobiator(g, e[i], e[j], e[k])
                if not el.is_zero(jac):
                    defects.append(Defect("jacobi", (i, j, k), jac))
    return Report(tuple(defects))


def bracket_space(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace(g.dim, (g.bracket(x, y) for x in a.basis for y in b.basis))


def center(g: LieAlgebra) -> Subspace:
    # x central iff sum_i x_i c[i][j][k] = 0 for all j, k
    n = g.dim
    rows = [tuple(g.c[i][j][k] for i in range(n)) for j in range(n) for k in range(n)]
    return el.kernel(tuple(rows), n)


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    n = g.dim
    rows = []
    for y in s.basis:
        ady = g.ad(y)  # [y, x] = ad_y x
        rows.extend(ady)
    return el.kernel(tuple(rows), n)


def lower_central_series(g: LieAlgebra) -> list:
    """g = C^1 > C^2 > ... until the series stabilises (ends in 0 if nilpotent)."""
    full = Subspace.full(g.dim)
    series = [full]
    while series[-1].dim > 0:
        nxt = bracket_space(g, full, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def derived_series(g: LieAlgebra) -> list:
    series = [Subspace.full(g.dim)]
    while series[-1].dim > 0:
        nxt = bracket_space(g, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_nilpotent(g: LieAlgebra):
    """(True, class) or (False, None); the zero algebra has class 0."""
    series = lower_central_series(g)
    if series[-1].dim != 0:
        return False, None
    return True, len(series) - 1


def is_ideal(g: LieAlgebra, j: Subspace) -> bool:
    return all(j.contains(g.bracket(e, y)) for e in g.basis() for y in j.basis)


def is_subalgebra(g: LieAlgebra, h: Subspace) -> bool:
    return all(h.contains(g.bracket(x, y)) for x in h.basis for y in h.basis)


def is_derivation(g: LieAlgebra, d) -> bool:
    return not derivation_defects(g, d)


def derivation_defects(g: LieAlgebra, d) -> list:
    d = el.mat(d)
    e = g.basis()
    out = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = el.matvec(d, g.bracket(e[i], e[j]))
            rhs = el.add(g.bracket(el.matvec(d, e[i]), e[j]), g.bracket(e[i], el.matvec(d, e[j])))
            diff = el.sub(lhs, rhs)
            if not el.is_zero(diff):
                out.append(((i, j), diff))
    return out


def derivations(g: LieAlgebra) -> list:
    """Basis of der(g) as matrices."""
    n = g.dim
    rows = []
    # unknown D[p][q] at index p*n+q; D e_q = sum_p D[p][q] e_p
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.c[i][j]
            for k in range(n):
                row = [ZERO] * (n * n)
                for p in range(n):
                    row[k * n + p] += cij[p]
                    # [D e_i, e_j]_k = sum_p D[p][i] c[p][j][k]
                    row[p * n + i] -= g.c[p][j][k]
                    row[p * n + j] -= g.c[i][p][k]
                rows.append(tuple(row))
    ker = el.kernel(tuple(rows), n * n)
    return [tuple(tuple(v[p * n: (p + 1) * n]) for p in range(n)) for v in ker.basis]


def quotient(g: LieAlgebra, j: Subspace):
    """Quotient g/j with the projection; complement of j is spanned by the
    lexicographically first standard vectors."""
    if not is_ideal(g, j):
        raise ValueError("subspace is not an ideal")
    n = g.dim
    comp = el.complete_to_basis(j)
    q = len(comp)
    frame = [el.unit(n, i) for i in comp] + list(j.basis)
    inv = el.inverse(el.from_columns(frame, n))
    proj = LinearMap(n, q, inv[:q])
    c = [[proj(g.bracket(el.unit(n, a), el.unit(n, b))) for b in comp] for a in comp]
    return LieAlgebra(q, c), proj


def check_iso(g1: LieAlgebra, g2: LieAlgebra, phi) -> Report:
    """phi[x, y]_1 = [phi x, phi y]_2 on basis pairs; raises on singular phi."""
    phi = phi if isinstance(phi, LinearMap) else LinearMap(g1.dim, g2.dim, phi)
    if phi.src_dim != g1.dim or phi.dst_dim != g2.dim:
        raise ValueError("map dimensions do not match the algebras")
    if not phi.is_invertible():
        raise ValueError("map is not invertible")
    e = g1.basis()
    imgs = [phi(x) for x in e]
    defects = []
    for i in range(g1.dim):
        for j in range(i + 1, g1.dim):
            diff = el.sub(phi(g1.bracket(e[i], e[j])), g2.bracket(imgs[i], imgs[j]))
            if not el.is_zero(diff):
                defects.append(Defect("homomorphism", (i, j), diff))
    return Report(tuple(defects))


def transport(g: LieAlgebra, phi: LinearMap) -> LieAlgebra:
    """Structure constants of the image algebra so that phi is an isomorphism."""
    inv = phi.inverse()
    n = g.dim
    cols = [el.column(inv.matrix, a) for a in range(n)]
    c = [[phi(g.bracket(cols[a], cols[b])) for b in range(n)] for a in range(n)]
    return LieAlgebra(n, c)


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    n = g.dim + h.dim
    br = {}
    for (i, j), v in g.bracket_table().items():
        br[(i, j)] = tuple(v) + el.zero_vec(h.dim)
    for (i, j), v in h.bracket_table().items():
        br[(g.dim + i, g.dim + j)] = el.zero_vec(g.dim) + tuple(v)
    return LieAlgebra.from_brackets(n, br)
