"""Independent reference computations.

Nothing here calls into the package's linear algebra or cocycle code: ranks
and kernels go through sympy, and the standard model bracket is rebuilt
straight from its defining formulas.
"""
from fractions import Fraction
from itertools import combinations

import sympy as sp


def smat(rows):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                       for x in r] for r in rows])


def frac(x):
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def rank(rows, ncols=None):
    if not rows:
        return 0
    return smat(rows).rank()


def nullspace_dim(rows, ncols):
    if not rows:
        return ncols
    return ncols - smat(rows).rank()


def same_span(u, v, n):
    """Do the row lists u and v span the same subspace of Q^n?"""
    ru, rv = rank(u) if u else 0, rank(v) if v else 0
    both = list(u) + list(v)
    rb = rank(both) if both else 0
    return ru == rv == rb


# ----- Lie algebras as plain structure-constant tables -----------------
def table(dim, brackets):
    """brackets: {(i, j): {k: c}} for i < j -> dense c[i][j][k]."""
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), out in brackets.items():
        for k, v in out.items():
            c[i][j][k] += Fraction(v)
            c[j][i][k] -= Fraction(v)
    return c


def br(c, x, y):
    n = len(c)
    out = [Fraction(0)] * n
    for i in range(n):
        if x[i]:
            for j in range(n):
                if y[j]:
                    for k in range(n):
                        out[k] += x[i] * y[j] * c[i][j][k]
    return out


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def jacobi_defects(c):
    n = len(c)
    bad = {}
    for i, j, k in combinations(range(n), 3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        s = [a + b + d for a, b, d in zip(br(c, br(c, x, y), z), br(c, br(c, y, z), x),
                                           br(c, br(c, z, x), y))]
        if any(s):
            bad[(i, j, k)] = s
    return bad


def closedness_defects(c, omega):
    """(i,j,k) -> d omega = -(omega([x,y],z) + omega([y,z],x) + omega([z,x],y))."""
    n = len(c)

    def w(x, y):
        return sum(x[a] * omega[a][b] * y[b] for a in range(n) for b in range(n))

    bad = {}
    for i, j, k in combinations(range(n), 3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        v = -(w(br(c, x, y), z) + w(br(c, y, z), x) + w(br(c, z, x), y))
        if v:
            bad[(i, j, k)] = v
    return bad


def center_dim(c):
    n = len(c)
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return nullspace_dim(rows, n)


def lcs_dims(c):
    n = len(c)
    cur = smat([unit(n, i) for i in range(n)])
    dims = [n]
    while True:
        vecs = []
        for i in range(n):
            for r in range(cur.rows):
                vecs.append(br(c, unit(n, i), [frac(x) for x in cur.row(r)]))
        M = smat(vecs)
        rk = M.rank()
        if rk == dims[-1]:
            return dims
        dims.append(rk)
        if rk == 0:
            return dims
        cur = M.rref()[0][:rk, :]


# ----- the standard model from its defining formulas --------------------
def model_table(t):
    """Structure constants and form of d_{gamma,eps,xi}(l, a), basis l* + a + l.

    Uses only the raw tensors of t and omega_a; alpha and beta are solved
    from their defining identities with sympy.
    """
    m, a = t.l_dim, t.a
    n = a.dim
    N = 2 * m + n
    W = smat(a.omega) if n else sp.zeros(0, 0)
    ca = a.g.c  # c[i][j][k]
    gamma, eps, xi = t.gamma, t.epsilon, t.xi

    def z(k):
        return k

    def A(p):
        return m + p

    def L(i):
        return m + n + i

    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]

    def put(x, y, vec):
        for k, v in vec.items():
            c[x][y][k] += v
            c[y][x][k] -= v

    # [a_p, a_q] = [a_p, a_q]_a + beta(a_p, a_q)
    for p in range(n):
        for q in range(p + 1, n):
            out = {A(k): ca[p][q][k] for k in range(n) if ca[p][q][k]}
            for i in range(m):
                # beta(A1,A2)(e_i) = -w(xi_i A1, A2) - w(A1, xi_i A2)
                v = Fraction(0)
                for r in range(n):
                    v -= xi[i][p][r] * a.omega[r][q]
                    v -= a.omega[p][r] * xi[i][q][r]
                if v:
                    out[z(i)] = out.get(z(i), 0) + v
            put(A(p), A(q), out)
    # [e_i, a_p] = gamma(e_i)(a_p) + xi(e_i) a_p
    for i in range(m):
        for p in range(n):
            out = {}
            for k in range(m):
                if gamma[i][p][k]:
                    out[z(k)] = gamma[i][p][k]
            for r in range(n):
                if xi[i][p][r]:
                    out[A(r)] = xi[i][p][r]
            put(L(i), A(p), out)
    # [e_i, e_j] = eps(e_i, e_j) + alpha(e_i, e_j)
    for i in range(m):
        for j in range(i + 1, m):
            out = {z(k): eps[i][j][k] for k in range(m) if eps[i][j][k]}
            if n:
                # w_a(alpha, a_p) = gamma(e_i)(a_p)(e_j) - gamma(e_j)(a_p)(e_i)
                rhs = sp.Matrix([sp.Rational(str(gamma[i][p][j] - gamma[j][p][i]))
                                 for p in range(n)])
                sol = W.T.solve(rhs)
                for r in range(n):
                    if sol[r]:
                        out[A(r)] = out.get(A(r), 0) + frac(sol[r])
            put(L(i), L(j), out)
    omega = [[Fraction(0)] * N for _ in range(N)]
    for k in range(m):
        omega[z(k)][L(k)] = Fraction(1)
        omega[L(k)][z(k)] = Fraction(-1)
    for p in range(n):
        for q in range(n):
            omega[A(p)][A(q)] = a.omega[p][q]
    return c, omega


def model_is_symplectic_lie(t):
    c, omega = model_table(t)
    return not jacobi_defects(c) and not closedness_defects(c, omega)
