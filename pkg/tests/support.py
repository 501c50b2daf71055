"""Seeded random generators shared by the property and acceptance tests."""
import random
from fractions import Fraction as F

from symplie import algebras
from symplie import exactlin as el
from symplie.group_action import PairIso, TauShift


def rat(rng, lo=-3, hi=3, dens=(1, 1, 2, 3)):
    return F(rng.randint(lo, hi), rng.choice(dens))


def nonzero_rat(rng, lo=-3, hi=3):
    while True:
        x = rat(rng, lo, hi)
        if x:
            return x


def random_tau(rng, m, n, with_sigma=True):
    tau = [[rat(rng) for _ in range(n)] for _ in range(m)]
    sb = [[F(0)] * m for _ in range(m)]
    if with_sigma:
        for i in range(m):
            for j in range(i, m):
                sb[i][j] = sb[j][i] = rat(rng)
    return TauShift(tau, sb)


def random_invertible(rng, m):
    while True:
        S = [[rat(rng) for _ in range(m)] for _ in range(m)]
        if el.det(S):
            return S


def transvection(a, v, c):
    """x -> x + c omega(v, x) v, a symplectic map of an abelian a."""
    n = a.dim
    cols = [el.add(el.unit(n, j), el.scale(c * a.form(v, el.unit(n, j)), v)) for j in range(n)]
    return el.from_columns(cols, n)


def random_abelian_sp(rng, a, steps=3):
    U = el.identity(a.dim)
    for _ in range(steps):
        v = tuple(rat(rng, -2, 2, (1, 2)) for _ in range(a.dim))
        U = el.matmul(transvection(a, v, rat(rng, -2, 2, (1, 2))), U)
    return U


def h3r_unipotent(p, q, k):
    """a1 -> a1 + p a3 + k a4, a2 -> a2 + q a3 + p a4."""
    cols = [(1, 0, p, k), (0, 1, q, p), (0, 0, 1, 0), (0, 0, 0, 1)]
    return el.from_columns([el.vec(c) for c in cols], 4)


def h3r_scaling(f):
    f = F(f)
    return el.diag([f ** -2, f, 1 / f, f ** 2])


H3R_FLIP = el.diag([1, -1, -1, 1])


def random_h3r_aut(rng):
    U = h3r_unipotent(rat(rng), rat(rng), rat(rng))
    U = el.matmul(h3r_scaling(rng.choice([F(1), F(2), F(-1), F(1, 2), F(3)])), U)
    if rng.random() < 0.5:
        U = el.matmul(H3R_FLIP, U)
    return U


def random_pair(rng, t):
    """A random pair (S, U) acting on the (l, a) of t."""
    a = t.a
    S = random_invertible(rng, t.l_dim)
    if a.dim == 0:
        U = ()
    elif a.g.is_abelian():
        U = random_abelian_sp(rng, a)
    elif a.dim == 4:
        U = random_h3r_aut(rng)
    else:
        raise ValueError("no generator for this a")
    return PairIso(S, U, a)


def rng_for(seed):
    return random.Random(seed)


__all__ = ["algebras", "rat", "nonzero_rat", "random_tau", "random_invertible", "random_pair",
           "random_abelian_sp", "random_h3r_aut", "h3r_unipotent", "h3r_scaling", "H3R_FLIP",
           "rng_for", "transvection"]
