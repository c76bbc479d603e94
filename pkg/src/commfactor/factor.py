"""Constructive commutator factorization.

Two layers:

* the classical matrix-algebra case (Albert-Muckenhoupt-Shoda): a square
  matrix over a field of characteristic zero is a commutator iff its trace
  is zero.  :func:`ams_factor` makes this effective by conjugating the
  matrix to zero diagonal and reading off an explicit witness pair.

* the recursive case for generalized block-triangular algebras: an element
  with multitrace zero is factored by peeling off the last semisimple
  block, recursing on the leading part, factoring the last block with
  :func:`ams_factor`, and stitching the two witnesses together through an
  exact Sylvester solve on the bimodule of radical components pointing into
  the last block.  A scalar shift of the left operator (found by
  :func:`~commfactor.sylvester.find_shift`) makes the Sylvester equation
  uniquely solvable without disturbing the commutator.

Every returned certificate is re-verified by exact multiplication before it
leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Algebra,
    InvalidWMData,
    TriangularAlgebra,
    WMData,
    is_gbt,
)
from .linalg import (
    DimensionMismatch,
    Matrix,
    ONE,
    ZERO,
    frac,
    vadd,
    vector,
    viszero,
    vscale,
    vzero,
)
from .multitrace import multitrace, semisimple_projection
from .sylvester import BimoduleProblem, find_shift, solve_sylvester

__all__ = [
    "NonzeroTrace",
    "NotGBT",
    "NonzeroMultitrace",
    "DegeneratePolynomial",
    "FactorizationCertificate",
    "CommutatorDecision",
    "zero_diagonal_similarity",
    "ams_factor",
    "gbt_factor",
    "is_commutator",
    "poly_image_witness",
]


class NonzeroTrace(ValueError):
    """Trace-zero input required."""


class NotGBT(ValueError):
    """The algebra is not generalized block-triangular in the given order."""


class NonzeroMultitrace(ValueError):
    """The element has a nonzero block trace, so it cannot be a commutator."""


class DegeneratePolynomial(ValueError):
    """alpha = beta = 0 defines the zero polynomial."""


@dataclass(frozen=True)
class FactorizationCertificate:
    """Witness pair with its exact verification.

    ``verified`` is True only when ``[x, y] = target`` was checked by exact
    multiplication; ``lambda_shifts`` records the scalar shift used at each
    recursion level (innermost first).
    """

    x: tuple
    y: tuple
    target: tuple
    verified: bool
    lambda_shifts: tuple = ()


@dataclass(frozen=True)
class CommutatorDecision:
    """Outcome of the commutator test.

    kind "yes" carries a certificate; "no" carries a nonzero multitrace
    entry as the reason; "unknown" is the honest answer for algebras outside
    the generalized block-triangular class whose element has multitrace
    zero.
    """

    kind: str  # "yes" | "no" | "unknown"
    certificate: FactorizationCertificate | None = None
    reason: object = None
    note: str | None = None

    @classmethod
    def yes(cls, cert: FactorizationCertificate) -> "CommutatorDecision":
        return cls("yes", certificate=cert)

    @classmethod
    def no(cls, reason) -> "CommutatorDecision":
        return cls("no", reason=reason)

    @classmethod
    def unknown(cls, note: str) -> "CommutatorDecision":
        return cls("unknown", note=note)


# ---------------------------------------------------------------------------
# matrix case
# ---------------------------------------------------------------------------

def _extend_to_basis(vectors, n):
    """Complete independent vectors to a basis using standard basis vectors."""
    from .linalg import span_basis, span_contains
    cols = list(vectors)
    basis = span_basis(cols)
    for k in range(n):
        if len(cols) == n:
            break
        e = tuple(ONE if i == k else ZERO for i in range(n))
        if not span_contains(basis, e):
            cols.append(e)
            basis = span_basis(cols)
    return cols


def zero_diagonal_similarity(a: Matrix) -> Matrix:
    """Invertible S with S^{-1} a S having all diagonal entries zero.

    Classical construction: as long as the matrix is nonzero it cannot be
    scalar (trace zero in characteristic zero), so some vector v has a*v not
    proportional to v; changing basis to start with (v, a*v) zeroes the
    (1, 1) entry, and the trailing principal submatrix again has trace zero,
    so induction applies.
    """
    if not a.is_square:
        raise NonzeroTrace("square matrix required")
    if a.trace() != 0:
        raise NonzeroTrace("matrix has nonzero trace")
    n = a.rows
    if n == 0:
        return Matrix.identity(0)
    if all(not a[i, i] for i in range(n)):
        return Matrix.identity(n)

    # find v with a v not proportional to v
    v = None
    for i in range(n):
        col = a.col(i)
        if any(col[j] for j in range(n) if j != i):
            v = tuple(ONE if j == i else ZERO for j in range(n))
            break
    if v is None:
        # a is diagonal and has at least one nonzero entry; since the trace
        # vanishes there are two distinct diagonal values
        i = 0
        j = next(k for k in range(1, n) if a[k, k] != a[0, 0])
        v = tuple(ONE if t in (i, j) else ZERO for t in range(n))
    av = a.apply(v)

    cols = _extend_to_basis([v, av], n)
    s1 = Matrix.from_columns(cols, rows=n)
    a1 = s1.inverse() * a * s1
    assert a1[0, 0] == 0
    sub = Matrix([row[1:] for row in a1.data[1:]]) if n > 1 else Matrix.zero(0, 0)
    s2 = zero_diagonal_similarity(sub)
    # embed s2 as diag(1, s2)
    rows = [[ONE] + [ZERO] * (n - 1)]
    for i in range(n - 1):
        rows.append([ZERO] + list(s2.data[i]))
    return s1 * Matrix(rows)


def ams_factor(a: Matrix):
    """Factor a trace-zero matrix as a commutator: returns (X, Y) with
    X Y - Y X = a exactly.

    After conjugating a to zero diagonal, X is the diagonal 0, 1, ..., n-1
    and Y has entries a'_{ij} / (i - j) off the diagonal; conjugating back
    gives the witnesses in the original basis.
    """
    if not a.is_square:
        raise NonzeroTrace("square matrix required")
    if a.trace() != 0:
        raise NonzeroTrace("matrix has nonzero trace")
    n = a.rows
    if a.is_zero:
        return Matrix.zero(n, n), Matrix.zero(n, n)
    s = zero_diagonal_similarity(a)
    s_inv = s.inverse()
    az = s_inv * a * s
    x0 = Matrix.diagonal(range(n))
    y_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(az[i, j] / (i - j) if i != j else ZERO)
        y_rows.append(row)
    y0 = Matrix(y_rows)
    x = s * x0 * s_inv
    y = s * y0 * s_inv
    assert x * y - y * x == a
    return x, y


# ---------------------------------------------------------------------------
# recursion data, cached per (algebra, wm)
# ---------------------------------------------------------------------------

class _BasedSubspace:
    """A subspace with a fixed ordered basis and exact coordinate maps."""

    __slots__ = ("vectors", "matrix", "_left_inv")

    def __init__(self, vectors, ambient_dim):
        self.vectors = tuple(vector(v) for v in vectors)
        self.matrix = Matrix.from_columns(self.vectors, rows=ambient_dim)
        if self.vectors:
            q = self.matrix
            qt = q.transpose()
            self._left_inv = (qt * q).inverse() * qt
        else:
            self._left_inv = None

    @property
    def dim(self):
        return len(self.vectors)

    def coords(self, v):
        if not self.vectors:
            if not viszero(v):
                raise ValueError("nonzero vector in a zero-dimensional subspace")
            return ()
        c = self._left_inv.apply(v)
        if self.matrix.apply(c) != tuple(vector(v)):
            raise ValueError("vector does not lie in the subspace")
        return c

    def lift(self, c):
        if not self.vectors:
            return vzero(self.matrix.rows)
        return self.matrix.apply(c)


class _LeadingSubalgebra:
    """The subalgebra on blocks 1..r-1 plus their radical components."""

    __slots__ = ("algebra", "wm", "based")

    def __init__(self, algebra, wm, based):
        self.algebra = algebra
        self.wm = wm
        self.based = based


def _peirce_basis(alg, wm, i0, j0):
    from .algebra import _peirce0
    return _peirce0(alg, wm, i0, j0).basis


@lru_cache(maxsize=None)
def _leading_subalgebra(alg: Algebra, wm: WMData) -> _LeadingSubalgebra:
    """Materialize the subalgebra on blocks 1..r-1 with its own WM data."""
    r = wm.r
    assert r >= 2
    cols = []
    for k in range(r - 1):
        for prow in wm.matrix_units[k]:
            cols.extend(prow)
    n_units = len(cols)
    rad_cols = []
    for i0 in range(r - 1):
        for j0 in range(i0 + 1, r - 1):
            rad_cols.extend(_peirce_basis(alg, wm, i0, j0))
    cols.extend(rad_cols)
    based = _BasedSubspace(cols, alg.dim)

    m = based.dim
    structure = []
    for i in range(m):
        row = []
        for j in range(m):
            row.append(based.coords(alg.mul(cols[i], cols[j])))
        structure.append(row)
    unit_a = alg.zero()
    for k in range(r - 1):
        unit_a = vadd(unit_a, wm.idempotent(k))
    unit = based.coords(unit_a)
    sub_alg = Algebra(structure, unit, check=False)

    # WM data in sub coordinates: the basis starts with the matrix units in
    # canonical order, then the radical vectors, so units are standard
    # basis vectors.
    units = []
    offset = 0
    for k in range(r - 1):
        d = wm.block_sizes[k]
        grid = []
        for p in range(d):
            prow = []
            for q in range(d):
                prow.append(sub_alg.basis_vector(offset + p * d + q))
            grid.append(tuple(prow))
        units.append(tuple(grid))
        offset += d * d
    rad_basis = [sub_alg.basis_vector(n_units + t) for t in range(len(rad_cols))]
    sub_wm = WMData(wm.block_sizes[: r - 1], units, rad_basis)

    from .algebra import verify_wm_data
    report = verify_wm_data(sub_alg, sub_wm)
    assert report.ok, f"leading subalgebra data invalid: {report.problems}"
    assert is_gbt(sub_alg, sub_wm), "leading subalgebra must stay block-triangular"
    return _LeadingSubalgebra(sub_alg, sub_wm, based)


@lru_cache(maxsize=None)
def _last_column_bimodule(alg: Algebra, wm: WMData) -> _BasedSubspace:
    """Basis of sum_i e_i rad(A) e_r (all radical components into block r)."""
    r = wm.r
    cols = []
    for i0 in range(r - 1):
        cols.extend(_peirce_basis(alg, wm, i0, r - 1))
    return _BasedSubspace(cols, alg.dim)


def _lift_block_matrix(wm: WMData, k: int, mat: Matrix, zero_vec):
    """sum_{pq} mat[p, q] * E^(k)_{pq} as an algebra element."""
    out = zero_vec
    grid = wm.matrix_units[k]
    for p in range(mat.rows):
        for q in range(mat.cols):
            c = mat[p, q]
            if c:
                out = vadd(out, vscale(c, grid[p][q]))
    return out


def _operator_on(alg, based: _BasedSubspace, x, side: str) -> Matrix:
    """Matrix of u -> x*u (side "left") or u -> u*x (side "right") on the
    based subspace; raises if the subspace is not invariant."""
    cols = []
    for u in based.vectors:
        prod = alg.mul(x, u) if side == "left" else alg.mul(u, x)
        cols.append(based.coords(prod))
    return Matrix.from_columns(cols, rows=based.dim)


def _factor_multitrace_zero(alg: Algebra, wm: WMData, a):
    """Recursive witness construction; a must have multitrace zero."""
    if viszero(a):
        return alg.zero(), alg.zero(), []
    r = wm.r
    blocks, j = semisimple_projection(alg, wm, a)
    if r == 1:
        if not viszero(j):
            raise InvalidWMData(
                "single-block data with a nonzero radical part is inconsistent")
        x_mat, y_mat = ams_factor(blocks[0])
        zero = alg.zero()
        return (_lift_block_matrix(wm, 0, x_mat, zero),
                _lift_block_matrix(wm, 0, y_mat, zero), [])

    idem = [wm.idempotent(k) for k in range(r)]
    # split the radical part into the leading square and the last column
    j0 = alg.zero()
    jr = alg.zero()
    for i0 in range(r - 1):
        ji = alg.mul(idem[i0], j)
        for k0 in range(i0 + 1, r - 1):
            j0 = vadd(j0, alg.mul(ji, idem[k0]))
        jr = vadd(jr, alg.mul(ji, idem[r - 1]))
    if vadd(j0, jr) != j:
        raise NotGBT("radical part has components outside the "
                     "strictly-upper block pattern")

    sub = _leading_subalgebra(alg, wm)
    zero = alg.zero()
    b0 = zero
    for k in range(r - 1):
        b0 = vadd(b0, _lift_block_matrix(wm, k, blocks[k], zero))
    a0 = vadd(b0, j0)

    x0_s, y0_s, shifts = _factor_multitrace_zero(
        sub.algebra, sub.wm, sub.based.coords(a0))
    x0 = sub.based.lift(x0_s)
    y0 = sub.based.lift(y0_s)

    c_mat = blocks[r - 1]
    cp_mat, cpp_mat = ams_factor(c_mat)
    cp = _lift_block_matrix(wm, r - 1, cp_mat, zero)
    cpp = _lift_block_matrix(wm, r - 1, cpp_mat, zero)

    bimod = _last_column_bimodule(alg, wm)
    if bimod.dim == 0:
        assert viszero(jr)
        lam = frac(0)
        z = zero
    else:
        left = _operator_on(alg, bimod, x0, "left")
        right = _operator_on(alg, bimod, cp, "right")
        lam = find_shift(left, right)
        problem = BimoduleProblem(left.add_diag(lam), right, bimod.coords(jr))
        sol = solve_sylvester(problem)
        assert sol.is_unique, "shifted Sylvester operator must be invertible"
        z = bimod.lift(sol.x)

    unit0 = zero
    for k in range(r - 1):
        unit0 = vadd(unit0, idem[k])
    x = vadd(vadd(x0, vscale(lam, unit0)), cp)
    y = vadd(vadd(y0, cpp), z)
    shifts.append(lam)
    return x, y, shifts


def gbt_factor(alg: Algebra, wm: WMData, a) -> FactorizationCertificate:
    """Factor a multitrace-zero element of a generalized block-triangular
    algebra as a commutator.

    Raises NotGBT or NonzeroMultitrace when the preconditions fail; the
    returned certificate is always verified by exact multiplication.
    """
    if len(a) != alg.dim:
        raise DimensionMismatch("element length does not match algebra dimension")
    if not is_gbt(alg, wm):
        raise NotGBT("algebra is not generalized block-triangular "
                     "in the supplied block order")
    mtr = multitrace(alg, wm, a)
    if not mtr.is_zero:
        raise NonzeroMultitrace(f"multitrace {[str(v) for v in mtr.values]} != 0")
    a = vector(a)
    x, y, shifts = _factor_multitrace_zero(alg, wm, a)
    if alg.commutator(x, y) != a:
        raise AssertionError("internal error: witness failed verification")
    return FactorizationCertificate(x=x, y=y, target=a, verified=True,
                                    lambda_shifts=tuple(shifts))


def is_commutator(alg: Algebra, wm: WMData, a) -> CommutatorDecision:
    """Decide commutator-hood where the theory decides it.

    Nonzero multitrace is a definitive no.  Multitrace zero plus a
    generalized block-triangular algebra yields a verified certificate.
    Outside that class the test is deliberately inconclusive: both outcomes
    occur, so the answer is "unknown".
    """
    mtr = multitrace(alg, wm, a)
    if not mtr.is_zero:
        reason = next(v for v in mtr.values if v)
        return CommutatorDecision.no(reason)
    if is_gbt(alg, wm):
        return CommutatorDecision.yes(gbt_factor(alg, wm, a))
    return CommutatorDecision.unknown(
        "multitrace zero, but the algebra is not generalized block-triangular; "
        "the multitrace criterion is inconclusive here")


# ---------------------------------------------------------------------------
# degree-2 multilinear images on triangular algebras
# ---------------------------------------------------------------------------

def poly_image_witness(tri: TriangularAlgebra, alpha, beta, target):
    """Witnesses for f(x, y) = alpha*x*y + beta*y*x hitting a split target.

    ``target`` is ((a1, a2), (b1, b2), m): a pair of elements of the left
    component, a pair of elements of the right component, and a bimodule
    coordinate vector.

    * alpha + beta != 0: the assembled target is f(a1, a2) + f(b1, b2) + m
      and (target / (alpha + beta), 1) is returned.
    * alpha + beta = 0 (f is a multiple of the commutator): the assembled
      target is [a1, a2] + [b1, b2] + m; a scalar shift on the right
      component makes the associated Sylvester equation solvable and the
      returned pair satisfies f(x, y) = target exactly.
    """
    alpha = frac(alpha)
    beta = frac(beta)
    if not alpha and not beta:
        raise DegeneratePolynomial("alpha = beta = 0")
    (a1, a2), (b1, b2), mvec = target
    t = tri.algebra
    ea1, ea2 = tri.embed_left(a1), tri.embed_left(a2)
    eb1, eb2 = tri.embed_right(b1), tri.embed_right(b2)
    em = tri.embed_mid(mvec)

    def f(x, y):
        return vadd(vscale(alpha, t.mul(x, y)), vscale(beta, t.mul(y, x)))

    if alpha + beta != 0:
        total = vadd(vadd(f(ea1, ea2), f(eb1, eb2)), em)
        return vscale(1 / (alpha + beta), total), t.unit

    gamma = alpha  # f = gamma * [x, y]
    # operators of left mult by a1 and right mult by b1 on the bimodule
    m_dim = tri.m_dim
    lcols = []
    rcols = []
    for k in range(m_dim):
        mk = t.basis_vector(tri.left.dim + tri.right.dim + k)
        lcols.append(tri.project_mid(t.mul(ea1, mk)))
        rcols.append(tri.project_mid(t.mul(mk, eb1)))
    left = Matrix.from_columns(lcols, rows=m_dim)
    right = Matrix.from_columns(rcols, rows=m_dim)
    # shift the right operator: spectra of L_{a1} and R_{b1 + lam 1} disjoint
    lam = find_shift(right, left)
    rhs = vscale(1 / gamma, vector(mvec))
    problem = BimoduleProblem(left, right.add_diag(lam), rhs)
    sol = solve_sylvester(problem)
    assert sol.is_unique
    z = sol.x

    one_right = tri.embed_right(tri.right.unit)
    x = vadd(vadd(ea1, eb1), vscale(lam, one_right))
    y = vadd(vadd(vscale(1 / gamma, ea2), vscale(1 / gamma, eb2)),
             tri.embed_mid(z))
    return x, y
