"""Orbit invariants that separate the classified cocycles."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import exactlin as el
from .exactlin import ZERO
from .quadext.cocycle import CocycleTriple, matrix_from_eps


def _single_xi(t: CocycleTriple):
    if t.l_dim != 1:
        raise ValueError("this invariant needs dim l = 1")
    X = t.xi_matrices[0]
    X2 = el.matmul(X, X)
    X3 = el.matmul(X2, X)
    return X, X2, X3


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _agree(values, what):
    vals = set(values)
    if len(vals) != 1:
        raise ValueError(f"{what} depends on the chosen vector: {sorted(vals)}")
    return vals.pop()


def invariant_sign_xi2(t: CocycleTriple, reverse: bool = False) -> int:
    """sign of omega(xi^2 v, v) for v with xi^2 v != 0 (0 if xi^2 = 0).

    With reverse=True the pairing is omega(v, xi^2 v), which flips the sign.
    Raises if the sign differs between basis vectors.
    """
    _, X2, _ = _single_xi(t)
    if el.is_zero(X2):
        return 0
    w = t.a.form
    signs = []
    for v in el.identity(t.a.dim):
        x2v = el.matvec(X2, v)
        if not el.is_zero(x2v):
            signs.append(_sign(w(v, x2v) if reverse else w(x2v, v)))
    return _agree(signs, "sign of omega(xi^2 v, v)")


def invariant_kappa7(t: CocycleTriple) -> Fraction:
    """omega(xi^2 v, v)^7 gamma(L, xi^3 v, L)^2 / omega(xi^3 v, v)^8 at L = e_1."""
    _, X2, X3 = _single_xi(t)
    if el.is_zero(X3):
        raise ValueError("kappa^7 needs xi^3 != 0")
    w = t.a.form
    e1 = (el.ONE,)
    vals = []
    for v in el.identity(t.a.dim):
        x3v = el.matvec(X3, v)
        den = w(x3v, v)
        if not el.is_zero(x3v) and den:
            g = t.gamma_apply(e1, x3v)[0]
            vals.append(w(el.matvec(X2, v), v) ** 7 * g ** 2 / den ** 8)
    if not vals:
        raise ValueError("no vector with omega(xi^3 v, v) != 0")
    return _agree(vals, "kappa^7")


def invariant_l(t: CocycleTriple) -> Fraction:
    """omega(v, xi^3 v) / omega(xi v, xi^2 v)."""
    X, X2, X3 = _single_xi(t)
    if el.is_zero(X3):
        raise ValueError("l needs xi^3 != 0")
    w = t.a.form
    vals = []
    for v in el.identity(t.a.dim):
        x3v = el.matvec(X3, v)
        den = w(el.matvec(X, v), el.matvec(X2, v))
        if not el.is_zero(x3v) and den:
            vals.append(w(v, x3v) / den)
    if not vals:
        raise ValueError("no vector with omega(xi v, xi^2 v) != 0")
    return _agree(vals, "l")


def applicable_invariants(t: CocycleTriple) -> dict:
    """All scalar invariants that are defined for t."""
    out = {}
    for name, fn in (
        ("sign_xi2", invariant_sign_xi2),
        ("sign_xi2_rev", lambda u: invariant_sign_xi2(u, reverse=True)),
        ("kappa7", invariant_kappa7),
        ("l_ratio", invariant_l),
    ):
        try:
            out[name] = Fraction(fn(t))
        except ValueError:
            pass
    return out


# ----- epsilon on l = Q^3 with a = 0 ------------------------------------
def charpoly_traceless(M):
    """(p2, p3) with char poly l^3 + p2 l + p3 for trace-free 3 x 3 M."""
    M = el.mat(M)
    p2 = sum(M[i][i] * M[j][j] - M[i][j] * M[j][i] for i in range(3) for j in range(i + 1, 3))
    return p2, -el.det(M)


def eps_orbit_key(M) -> tuple:
    """Key of M up to conjugation and nonzero scaling (M -> c P M P^-1).

    Strata: nilpotent; p3 = 0 with the sign of p2; p2 = 0; repeated
    eigenvalue with the rank of M - r (Jordan type); generic p2^3 / p3^2.
    """
    M = el.mat(M)
    if sum(M[i][i] for i in range(3)) != 0:
        raise ValueError("M must be trace-free")
    if el.rank(M) < 2:
        raise ValueError("M must have rank >= 2")
    p2, p3 = charpoly_traceless(M)
    if p2 == 0 and p3 == 0:
        return ("nilpotent",)
    if p3 == 0:
        return ("p3=0", _sign(p2))
    if p2 == 0:
        return ("p2=0",)
    ratio = p2 ** 3 / p3 ** 2
    if ratio == Fraction(-27, 4):
        r = -3 * p3 / (2 * p2)
        return ("repeated", el.rank(el.sub(M, el.scale(r, el.identity(3)))))
    return ("generic", ratio)


def eps_key_of(t: CocycleTriple) -> tuple:
    return eps_orbit_key(matrix_from_eps(t.epsilon))


def transform_eps_matrix(M, S):
    """M_eps of the pullback by S: det(S^T) S^T M S^-T."""
    St = el.transpose(el.mat(S))
    return el.scale(el.det(St), el.matmul(el.matmul(St, el.mat(M)), el.transpose(el.inverse(S))))


def eps_conjugacy_witness(M1, M2) -> Optional[tuple]:
    """(c, P) with M2 = c P M1 P^-1 for rational c and P, or None."""
    M1, M2 = el.mat(M1), el.mat(M2)
    if eps_orbit_key(M1) != eps_orbit_key(M2):
        return None
    p2, p3 = charpoly_traceless(M1)
    q2, q3 = charpoly_traceless(M2)
    cands = []
    if p2 == 0 and p3 == 0:
        cands = [el.ONE]
    elif p3 and p2:
        cands = [q3 * p2 / (p3 * q2)]
    elif p3 == 0:
        r = _rational_root(q2 / p2, 2)
        cands = [] if r is None else [r, -r]
    else:
        r = _rational_root(q3 / p3, 3)
        cands = [] if r is None else [r]
    for c in cands:
        P = _intertwiner(el.scale(c, M1), M2)
        if P is not None:
            return c, P
    return None


def _rational_root(x: Fraction, k: int):
    if x < 0:
        if k % 2 == 0:
            return None
        r = _rational_root(-x, k)
        return None if r is None else -r

    def iroot(n):
        lo, hi = 0, 1 << (n.bit_length() // k + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** k < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** k == n else None

    a, b = iroot(x.numerator), iroot(x.denominator)
    return None if a is None or b is None else Fraction(a, b)


def _intertwiner(A, B):
    """Invertible P with B P = P A, searched in the solution space."""
    rows = []
    for i in range(3):
        for j in range(3):
            row = [ZERO] * 9
            for k in range(3):
                row[k * 3 + j] += B[i][k]   # (B P)_ij
                row[i * 3 + k] -= A[k][j]   # (P A)_ij
            rows.append(tuple(row))
    ker = el.kernel(tuple(rows), 9)
    basis = ker.basis
    if not basis:
        return None
    coeffs = [1] * len(basis)
    for attempt in range(50):
        v = el.lincomb(coeffs, basis, 9)
        P = tuple(tuple(v[3 * i:3 * i + 3]) for i in range(3))
        if el.det(P) != 0:
            return P
        coeffs = [(attempt * 7 + 3 * k * k + k + 1) % 11 - 5 for k in range(len(basis))]
    return None
