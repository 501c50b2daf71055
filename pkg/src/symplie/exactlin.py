"""Exact linear algebra over the rationals.

Vectors are tuples of Fractions, matrices are tuples of row tuples.  All
elimination pivots on the first nonzero entry in a column, so results are
deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple
Matrix = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def fmt(x: Fraction) -> str:
    return str(x)


def vec(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((ZERO,) * cols for _ in range(rows))


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def diag(entries: Sequence) -> Matrix:
    d = vec(entries)
    n = len(d)
    return tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def from_columns(cols: Sequence[Vector], nrows: int) -> Matrix:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def column(m: Matrix, j: int) -> Vector:
    return tuple(r[j] for r in m)


def matvec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return ()
    ncols = len(b[0]) if b else 0
    bt = transpose(b, ncols) if b else tuple(() for _ in range(ncols))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt)
        for row in a
    )


def add(u, v):
    if u and isinstance(u[0], tuple):
        return tuple(add(r, s) for r, s in zip(u, v))
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    if u and isinstance(u[0], tuple):
        return tuple(sub(r, s) for r, s in zip(u, v))
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u):
    c = scalar(c)
    if u and isinstance(u[0], tuple):
        return tuple(scale(c, r) for r in u)
    return tuple(c * a for a in u)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def bilinear(omega: Matrix, u: Vector, v: Vector) -> Fraction:
    """u^T omega v."""
    total = ZERO
    for i, ui in enumerate(u):
        if ui:
            row = omega[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    total += ui * row[j] * vj
    return total


def is_zero(x) -> bool:
    if isinstance(x, tuple):
        return all(is_zero(y) for y in x)
    return x == 0


def rref(m: Matrix, ncols: Optional[int] = None):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else (ncols or 0)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in rows[:r]), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A linear subspace of Q^n given by an independent spanning set."""

    __slots__ = ("ambient_dim", "basis", "_echelon")

    def __init__(self, ambient_dim: int, vectors: Iterable[Vector] = ()):
        self.ambient_dim = ambient_dim
        basis = []
        echelon: list = []
        for v in vectors:
            v = vec(v)
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in Q^{ambient_dim}")
            red = _reduce(v, echelon)
            if not is_zero(red):
                basis.append(v)
                echelon = list(rref(tuple(echelon) + (red,), ambient_dim)[0])
        self.basis = tuple(basis)
        self._echelon = tuple(echelon)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def contains(self, v: Vector) -> bool:
        return is_zero(_reduce(vec(v), self._echelon))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and self <= other
        )

    def __hash__(self):
        return hash((self.ambient_dim, self._echelon))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in self.basis)
        return f"Subspace(Q^{self.ambient_dim}: [{rows}])"

    def coordinates(self, v: Vector) -> Optional[Vector]:
        """Coefficients of v in self.basis, or None if v is outside."""
        if self.dim == 0:
            return () if is_zero(v) else None
        sol = solve(from_columns(self.basis, self.ambient_dim), vec(v))
        return None if sol is None else sol[0]

    def echelon(self) -> Matrix:
        return self._echelon

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())


def _reduce(v: Vector, echelon) -> Vector:
    v = list(v)
    for row in echelon:
        c = next(i for i, x in enumerate(row) if x != 0)
        f = v[c]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def span(vectors: Iterable[Vector], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)


def kernel(m: Matrix, ncols: Optional[int] = None) -> Subspace:
    """Null space of m; basis vectors indexed by free columns in order."""
    n = len(m[0]) if m else ncols
    if n is None:
        raise ValueError("ncols required for a matrix with no rows")
    r, pivots = rref(m, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return Subspace(n, basis)


def solve(m: Matrix, b: Vector, ncols: Optional[int] = None):
    """All solutions of m x = b as (particular, kernel), or None."""
    n = len(m[0]) if m else ncols
    if n is None:
        raise ValueError("ncols required for a matrix with no rows")
    b = vec(b)
    aug = tuple(tuple(row) + (bi,) for row, bi in zip(m, b))
    r, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, p in zip(r, pivots):
        x[p] = row[n]
    return tuple(x), kernel(m, n)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces live in different spaces")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    n = a.ambient_dim
    # x in a and b  <=>  sum s_i a_i - sum t_j b_j = 0
    cols = list(a.basis) + [scale(-1, v) for v in b.basis]
    k = kernel(from_columns(cols, n), len(cols))
    return Subspace(n, (lincomb(z[: a.dim], a.basis, n) for z in k.basis))


def perp(w: Subspace, omega: Matrix) -> Subspace:
    """{x : omega(x, w) = 0 for all w in W}."""
    n = w.ambient_dim
    rows = tuple(matvec(omega, v) for v in w.basis)
    return kernel(rows, n)


def is_skew(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))


def det(m: Matrix) -> Fraction:
    rows = [list(r) for r in m]
    n = len(rows)
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        pv = rows[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = rows[i][c] / pv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if n == 0:
        return ()
    aug = tuple(tuple(r) + unit(n, i) for i, r in enumerate(m))
    r, pivots = rref(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in r[:n])


def is_invertible(m: Matrix) -> bool:
    return rank(m) == len(m) and all(len(r) == len(m) for r in m)


def complete_to_basis(w: Subspace) -> tuple:
    """Indices of the lexicographically first standard vectors completing W."""
    n = w.ambient_dim
    chosen = []
    cur = w
    for i in range(n):
        if cur.dim == n:
            break
        e = unit(n, i)
        if not cur.contains(e):
            chosen.append(i)
            cur = Subspace(n, cur.basis + (e,))
    return tuple(chosen)
