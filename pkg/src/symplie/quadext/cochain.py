"""Alternating cochains on an abelian l = Q^m with values in a vector space.

Values are Fractions, vectors (tuples) or matrices (tuples of tuples); a
cochain stores one value per strictly increasing index tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .. import exactlin as el


def _add(x, y):
    if isinstance(x, tuple):
        return tuple(_add(a, b) for a, b in zip(x, y))
    return x + y


def _scale(c, x):
    if isinstance(x, tuple):
        return tuple(_scale(c, a) for a in x)
    return c * x


def _zero_like(x):
    return _scale(0, x)


@dataclass(frozen=True)
class Pairing:
    """A bilinear map used to multiply cochain values."""

    name: str
    apply: Callable


@dataclass(frozen=True)
class Cochain:
    degree: int
    l_dim: int
    zero: object
    values: dict

    def __call__(self, *idx):
        """Value on basis vectors e_idx (any order, repeats give zero)."""
        if len(idx) != self.degree:
            raise ValueError(f"cochain of degree {self.degree} got {len(idx)} arguments")
        if len(set(idx)) < len(idx):
            return self.zero
        order = sorted(range(len(idx)), key=lambda p: idx[p])
        sign = _perm_sign(order)
        v = self.values[tuple(idx[p] for p in order)]
        return v if sign > 0 else _scale(-1, v)

    @classmethod
    def from_function(cls, degree: int, l_dim: int, zero, f) -> "Cochain":
        vals = {idx: f(*idx) for idx in combinations(range(l_dim), degree)}
        return cls(degree, l_dim, zero, vals)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(self.degree, self.l_dim, self.zero,
                       {k: _add(v, other.values[k]) for k, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scaled(-1)

    def scaled(self, c) -> "Cochain":
        return Cochain(self.degree, self.l_dim, self.zero,
                       {k: _scale(c, v) for k, v in self.values.items()})

    def map(self, f, zero) -> "Cochain":
        return Cochain(self.degree, self.l_dim, zero, {k: f(v) for k, v in self.values.items()})

    def is_zero(self) -> bool:
        return all(el.is_zero(v) for v in self.values.values())

    def nonzero(self):
        return [(k, v) for k, v in self.values.items() if not el.is_zero(v)]

    def _check(self, other):
        if (self.degree, self.l_dim) != (other.degree, other.l_dim):
            raise ValueError("cochains of different degree or base")


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def wedge(pairing: Pairing, u: Cochain, v: Cochain, zero) -> Cochain:
    """Shuffle product: sum over (p, q)-shuffles of sgn * m(u(..), v(..))."""
    if u.l_dim != v.l_dim:
        raise ValueError("cochains on different bases")
    p, q = u.degree, v.degree

    def value(*idx):
        total = zero
        for pos in combinations(range(p + q), p):
            rest = [r for r in range(p + q) if r not in pos]
            sign = -1 if sum(s - k for k, s in enumerate(pos)) % 2 else 1
            term = pairing.apply(u(*(idx[r] for r in pos)), v(*(idx[r] for r in rest)))
            total = _add(total, term if sign > 0 else _scale(-1, term))
        return total

    return Cochain.from_function(p + q, u.l_dim, zero, value)


def d_rep(action: Callable, u: Cochain) -> Cochain:
    """Differential for an abelian l acting through action(i, value)."""

    def value(*idx):
        total = u.zero
        for r in range(len(idx)):
            rest = idx[:r] + idx[r + 1:]
            term = action(idx[r], u(*rest))
            total = _add(total, term if r % 2 == 0 else _scale(-1, term))
        return total

    return Cochain.from_function(u.degree + 1, u.l_dim, u.zero, value)


def d_xi(xi_matrices, u: Cochain) -> Cochain:
    """d_xi for a-valued cochains, xi(e_i) given as matrices."""
    return d_rep(lambda i, v: el.matvec(xi_matrices[i], v), u)


def d_xi_hat(xi_matrices, u: Cochain) -> Cochain:
    """Differential for Hom(a, W)-valued cochains with (xi^(L) f) = f o xi(L)."""
    return d_rep(lambda i, f: el.matmul(f, xi_matrices[i]) if f else f, u)


# ----- standard pairings -------------------------------------------------
EV = Pairing("ev", lambda f, x: el.matvec(f, x))
COMPOSE = Pairing("compose", lambda f, g: el.matmul(f, g))
COMMUTATOR = Pairing("commutator", lambda f, g: el.sub(el.matmul(f, g), el.matmul(g, f)))


def bilinear_pairing(name: str, fn: Callable) -> Pairing:
    return Pairing(name, fn)


# ----- cochains attached to a cocycle triple ------------------------------
def gamma_cochain(t) -> Cochain:
    return Cochain.from_function(1, t.l_dim, el.zeros(t.l_dim, t.a.dim),
                                 lambda i: t.gamma_matrices[i])


def xi_cochain(t) -> Cochain:
    n = t.a.dim
    return Cochain.from_function(1, t.l_dim, el.zeros(n, n), lambda i: t.xi_matrices[i])


def alpha_cochain(t) -> Cochain:
    al = t.derived.alpha
    return Cochain.from_function(2, t.l_dim, el.zero_vec(t.a.dim), lambda i, j: al[i][j])


def epsilon_cochain(t) -> Cochain:
    return Cochain.from_function(2, t.l_dim, el.zero_vec(t.l_dim),
                                 lambda i, j: t.epsilon[i][j])


def vector_cochain(l_dim: int, dim: int, rows) -> Cochain:
    """Degree-one cochain with value rows[i] on e_i (e.g. tau: l -> a)."""
    return Cochain.from_function(1, l_dim, el.zero_vec(dim), lambda i: el.vec(rows[i]))
