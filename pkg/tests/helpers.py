"""Shared test utilities: seeded random generators over small rationals and
an independent Bezout-identity route for solving Sylvester equations.

The Bezout solver deliberately avoids Gaussian elimination so it can serve
as a cross-check for the direct solver: with p the characteristic polynomial
of L and p r + q s = 1 the Bezout identity against the characteristic
polynomial q of R, the inverse of (L - R) is -H(L, R) r(R), where H is the
bivariate difference quotient (p(s) - p(t)) / (s - t).
"""

from __future__ import annotations

import random

from commfactor import (
    Matrix,
    char_poly,
    frac,
    poly_gcd,
    vadd,
    vscale,
)
from commfactor.multitrace import semisimple_projection


def rand_rational(rng: random.Random, num=9, den=9):
    return frac(rng.randint(-num, num), rng.randint(1, den))


def rand_int_rational(rng: random.Random, bound=5):
    return frac(rng.randint(-bound, bound))


def rand_vector(rng: random.Random, n, num=9, den=9):
    return tuple(rand_rational(rng, num, den) for _ in range(n))


def rand_matrix(rng: random.Random, rows, cols=None, num=9, den=9):
    cols = rows if cols is None else cols
    return Matrix([[rand_rational(rng, num, den) for _ in range(cols)]
                   for _ in range(rows)])


def rand_trace_zero_matrix(rng: random.Random, n, num=9, den=9):
    """Random n x n matrix with exactly zero trace."""
    m = [[rand_rational(rng, num, den) for _ in range(n)] for _ in range(n)]
    m[n - 1][n - 1] = -sum(m[i][i] for i in range(n - 1))
    return Matrix(m)


def rand_element(rng: random.Random, alg, num=9, den=9):
    return rand_vector(rng, alg.dim, num, den)


def rand_multitrace_zero(rng: random.Random, alg, wm, num=9, den=9):
    """Random element, re-centred so that every block trace vanishes."""
    a = rand_element(rng, alg, num, den)
    blocks, _ = semisimple_projection(alg, wm, a)
    for k, d in enumerate(wm.block_sizes):
        t = blocks[k].trace()
        if t:
            a = vadd(a, vscale(-t / d, wm.idempotent(k)))
    return a


def rand_radical_element(rng: random.Random, alg, wm, num=9, den=9):
    v = alg.zero()
    for b in wm.radical_basis:
        v = vadd(v, vscale(rand_rational(rng, num, den), b))
    return v


def upper_triangular_with_shared_eigenvalue(rng: random.Random, n1, n2,
                                            num=5):
    """Pair of upper-triangular matrices whose spectra share a value."""
    def ut(n):
        return [[rand_int_rational(rng, num) if j >= i else frac(0)
                 for j in range(n)] for i in range(n)]
    a = ut(n1)
    b = ut(n2)
    i = rng.randrange(n1)
    b[0][0] = a[i][i]
    return Matrix(a), Matrix(b)


def kronecker_bimodule_pair(rng: random.Random, p, q, *, share=False, num=3):
    """Commuting operator pair of the honest bimodule form.

    M = p x q matrices with a acting on the left and b on the right; on the
    row-major coordinates of M this gives L = a (x) I_q and R = I_p (x) b^T,
    which always commute and whose difference has every eigenvalue
    difference in its spectrum.  With ``share=True`` the matrices are made
    triangular with a shared diagonal entry, forcing a common eigenvalue.
    """
    if share:
        a_rows = [[rand_int_rational(rng, num) if j >= i else frac(0)
                   for j in range(p)] for i in range(p)]
        b_rows = [[rand_int_rational(rng, num) if j >= i else frac(0)
                   for j in range(q)] for i in range(q)]
        i = rng.randrange(p)
        b_rows[0][0] = a_rows[i][i]
        a, b = Matrix(a_rows), Matrix(b_rows)
    else:
        a = rand_matrix(rng, p, num=num, den=1)
        b = rand_matrix(rng, q, num=num, den=1)
    from commfactor import kron
    left = kron(a, Matrix.identity(q))
    right = kron(Matrix.identity(p), b.transpose())
    return left, right


def bezout_sylvester_solve(left: Matrix, right: Matrix, rhs):
    """Solve (left - right) x = rhs through the Bezout operator identity.

    Requires disjoint spectra.  Independent of Gaussian elimination on the
    difference operator: builds the explicit inverse -H(L, R) r(R).
    """
    p = char_poly(left)
    q = char_poly(right)
    g, r_cof, _ = poly_gcd(p, q)
    assert g.is_constant, "spectra must be disjoint for the Bezout route"
    n = left.rows
    # H(L, R) = sum_k p_k sum_{i+j=k-1} L^i R^j
    lpow = [Matrix.identity(n)]
    rpow = [Matrix.identity(n)]
    for _ in range(max(0, p.degree - 1)):
        lpow.append(lpow[-1] * left)
        rpow.append(rpow[-1] * right)
    h = Matrix.zero(n, n)
    for k, pk in enumerate(p.coeffs):
        if pk and k >= 1:
            for i in range(k):
                h = h + (lpow[i] * rpow[k - 1 - i]) * pk
    r_at = r_cof.at_matrix(right)
    inv = -(h * r_at)
    return inv.apply(rhs)
