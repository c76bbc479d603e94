"""Exact linear algebra over the rationals.

Scalars are ``gmpy2.mpq`` values: arbitrary-precision rationals, always kept
in lowest terms with a positive denominator.  Nothing in this module ever
rounds, so every result is reproducible bit for bit.

The module is the kernel the rest of the package builds on:

* immutable dense matrices with fraction-exact arithmetic,
* Gaussian elimination (solving, rank, kernels, row-space bases),
* characteristic polynomials via the Faddeev-LeVerrier recurrence
  (the integer divisions it performs are exact in characteristic zero),
* univariate polynomials with the extended Euclidean algorithm, returning
  Bezout cofactors alongside the monic gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from gmpy2 import mpq

__all__ = [
    "Rational",
    "ZERO",
    "ONE",
    "frac",
    "DimensionMismatch",
    "NotSquare",
    "BothZero",
    "SingularMatrix",
    "vector",
    "vzero",
    "vadd",
    "vsub",
    "vscale",
    "vneg",
    "viszero",
    "Matrix",
    "mat_mul",
    "kron",
    "LinearSolution",
    "solve_linear",
    "kernel_basis",
    "rank",
    "span_basis",
    "span_contains",
    "Polynomial",
    "char_poly",
    "poly_gcd",
]

Rational = mpq
ZERO = mpq(0)
ONE = mpq(1)


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class NotSquare(ValueError):
    """A square matrix was required."""


class BothZero(ValueError):
    """gcd(0, 0) is undefined."""


class SingularMatrix(ValueError):
    """The matrix has no inverse."""


def frac(value=0, den=None) -> mpq:
    """Coerce ``value`` to an exact rational.

    Accepts ints, strings like ``"3"`` or ``"-5/7"``, ``fractions.Fraction``
    and ``mpq`` itself; a second argument gives an explicit denominator.
    Floats are rejected: silently converting binary floats would defeat the
    exactness guarantee.
    """
    if den is not None:
        return mpq(value, den)
    if isinstance(value, float):
        raise TypeError("refusing to coerce float %r to an exact rational" % (value,))
    return mpq(value)


# ---------------------------------------------------------------------------
# coordinate vectors (plain tuples of mpq)
# ---------------------------------------------------------------------------

def vector(entries: Iterable) -> tuple:
    return tuple(frac(x) for x in entries)


def vzero(n: int) -> tuple:
    return (ZERO,) * n


def _check_same_len(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")


def vadd(u, v):
    _check_same_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    _check_same_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    c = frac(c)
    return tuple(c * a for a in u)


def vneg(u):
    return tuple(-a for a in u)


def viszero(u) -> bool:
    return all(not a for a in u)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of exact rationals (row-major tuples)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], *, rows: int | None = None,
                 cols: int | None = None):
        grid = tuple(tuple(frac(x) for x in row) for row in data)
        if grid:
            r = len(grid)
            c = len(grid[0])
            if any(len(row) != c for row in grid):
                raise DimensionMismatch("ragged rows in matrix literal")
        else:
            r = rows if rows is not None else 0
            c = cols if cols is not None else 0
            grid = ((),) * r if c == 0 else grid
            if r and c:
                raise DimensionMismatch("non-empty matrix needs explicit rows")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", c)
        object.__setattr__(self, "data", grid)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "data", tuple((ZERO,) * cols for _ in range(rows)))
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        es = [frac(x) for x in entries]
        n = len(es)
        return cls([[es[i] if i == j else ZERO for j in range(n)] for i in range(n)]) \
            if n else cls.zero(0, 0)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        return cls(rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], *, rows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if not cols:
            if rows is None:
                raise DimensionMismatch("from_columns with no columns needs rows=")
            return cls.zero(rows, 0)
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return cls([[c[i] for c in cols] for i in range(n)])

    @classmethod
    def column(cls, entries: Sequence) -> "Matrix":
        return cls([[x] for x in entries], rows=len(tuple(entries)), cols=1) \
            if entries else cls.zero(0, 1)

    # -- basic queries -----------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def to_lists(self):
        return [list(row) for row in self.data]

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        out = Matrix.__new__(Matrix)
        object.__setattr__(out, "rows", self.rows)
        object.__setattr__(out, "cols", self.cols)
        object.__setattr__(out, "data", tuple(tuple(a + b for a, b in zip(r1, r2))
                                              for r1, r2 in zip(self.data, other.data)))
        return out

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return self + (-other)

    def __neg__(self):
        out = Matrix.__new__(Matrix)
        object.__setattr__(out, "rows", self.rows)
        object.__setattr__(out, "cols", self.cols)
        object.__setattr__(out, "data", tuple(tuple(-x for x in row) for row in self.data))
        return out

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            bc = other.cols
            rows_out = []
            for arow in self.data:
                acc = [ZERO] * bc
                for k, aik in enumerate(arow):
                    if aik:
                        brow = other.data[k]
                        for j, bkj in enumerate(brow):
                            if bkj:
                                acc[j] += aik * bkj
                rows_out.append(tuple(acc))
            out = Matrix.__new__(Matrix)
            object.__setattr__(out, "rows", self.rows)
            object.__setattr__(out, "cols", bc)
            object.__setattr__(out, "data", tuple(rows_out))
            return out
        c = frac(other)
        out = Matrix.__new__(Matrix)
        object.__setattr__(out, "rows", self.rows)
        object.__setattr__(out, "cols", self.cols)
        object.__setattr__(out, "data", tuple(tuple(c * x for x in row) for row in self.data))
        return out

    def __rmul__(self, other):
        return self * other

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product, returning a coordinate tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != cols {self.cols}")
        out = []
        for row in self.data:
            s = ZERO
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix.zero(self.cols, self.rows)
        return Matrix(tuple(zip(*self.data)))

    def trace(self):
        if not self.is_square:
            raise NotSquare(f"trace of {self.rows}x{self.cols} matrix")
        s = ZERO
        for i in range(self.rows):
            s += self.data[i][i]
        return s

    def add_diag(self, c) -> "Matrix":
        """self + c * identity (square only)."""
        if not self.is_square:
            raise NotSquare("add_diag needs a square matrix")
        c = frac(c)
        out = Matrix.__new__(Matrix)
        object.__setattr__(out, "rows", self.rows)
        object.__setattr__(out, "cols", self.cols)
        object.__setattr__(out, "data", tuple(tuple(x + c if i == j else x
                                                    for j, x in enumerate(row))
                                              for i, row in enumerate(self.data)))
        return out

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise NotSquare("inverse of a non-square matrix")
        n = self.rows
        if n == 0:
            return Matrix.zero(0, 0)
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.data)]
        pivots = _rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise SingularMatrix("matrix is singular")
        return Matrix([row[n:] for row in aug])

    # -- equality / display --------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product (raises DimensionMismatch on shape conflict)."""
    return a * b


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product a (x) b."""
    rows = []
    for i in range(a.rows):
        for p in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.data[i][j]
                if aij:
                    row.extend(aij * x for x in b.data[p])
                else:
                    row.extend([ZERO] * b.cols)
            rows.append(row)
    if not rows:
        return Matrix.zero(a.rows * b.rows, a.cols * b.cols)
    return Matrix(rows)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _rref(rows_: list, ncols: int) -> list:
    """Reduce ``rows_`` (list of mutable rows) to reduced row echelon form.

    Deterministic: the pivot is the first row with a nonzero entry in the
    current column.  Returns the list of pivot column indices.
    """
    pivots = []
    r = 0
    nr = len(rows_)
    for c in range(ncols):
        pr = None
        for i in range(r, nr):
            if rows_[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows_[r], rows_[pr] = rows_[pr], rows_[r]
        pv = rows_[r][c]
        if pv != 1:
            inv = 1 / pv
            rows_[r] = [x * inv for x in rows_[r]]
        prow = rows_[r]
        for i in range(nr):
            if i != r and rows_[i][c]:
                f = rows_[i][c]
                rows_[i] = [a - f * b for a, b in zip(rows_[i], prow)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return pivots


@dataclass(frozen=True)
class LinearSolution:
    """One particular solution plus a basis of the homogeneous kernel."""

    solution: tuple
    kernel: tuple

    @property
    def is_unique(self) -> bool:
        return not self.kernel


def solve_linear(m: Matrix, rhs) -> LinearSolution | None:
    """Solve m x = rhs exactly.

    ``rhs`` may be a column Matrix or a plain sequence.  Returns ``None``
    when the system is inconsistent; otherwise a particular solution (free
    variables set to zero) together with a kernel basis, so the full
    solution set is ``solution + span(kernel)``.
    """
    if isinstance(rhs, Matrix):
        if rhs.cols != 1:
            raise DimensionMismatch("rhs must be a column")
        b = rhs.col(0)
    else:
        b = vector(rhs)
    if len(b) != m.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != rows {m.rows}")
    n = m.cols
    aug = [list(row) + [bi] for row, bi in zip(m.data, b)]
    pivots = _rref(aug, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for idx, pc in enumerate(pivots):
        x[pc] = aug[idx][n]
    pivot_set = set(pivots)
    kern = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for idx, pc in enumerate(pivots):
            v[pc] = -aug[idx][f]
        kern.append(tuple(v))
    return LinearSolution(tuple(x), tuple(kern))


def kernel_basis(m: Matrix) -> tuple:
    """Basis of {v : m v = 0}."""
    sol = solve_linear(m, vzero(m.rows))
    assert sol is not None
    return sol.kernel


def rank(m: Matrix) -> int:
    """Exact rank via fraction-exact elimination."""
    work = [list(row) for row in m.data]
    return len(_rref(work, m.cols))


def span_basis(vectors: Iterable[Sequence], length: int | None = None) -> tuple:
    """Canonical basis (RREF rows) of the span of the given vectors.

    Two spans are equal iff their ``span_basis`` results are equal.
    """
    vs = [list(vector(v)) for v in vectors]
    if not vs:
        return ()
    ncols = len(vs[0])
    if length is not None and ncols != length:
        raise DimensionMismatch("unexpected vector length")
    _rref(vs, ncols)
    return tuple(tuple(row) for row in vs if any(row))


def span_contains(basis: Sequence[Sequence], v: Sequence) -> bool:
    """Membership test; ``basis`` must come from :func:`span_basis`."""
    res = list(vector(v))
    for row in basis:
        pc = next((i for i, x in enumerate(row) if x), None)
        if pc is None:
            continue
        f = res[pc]
        if f:
            for i, x in enumerate(row):
                if x:
                    res[i] -= f * x
    return not any(res)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((ONE,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((ZERO, ONE))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = frac(c)
        if not c:
            return Polynomial.zero()
        return Polynomial(tuple(c * a for a in self.coeffs))

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Polynomial.zero(), Polynomial(rem)
        quot = [ZERO] * (len(rem) - dq)
        lc = other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lc
                quot[k - dq] = f
                for i, oc in enumerate(other.coeffs):
                    if oc:
                        rem[k - dq + i] -= f * oc
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        return self.scale(1 / self.lc)

    def __call__(self, t):
        t = frac(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def at_matrix(self, m: Matrix) -> Matrix:
        """Evaluate at a square matrix (Horner with exact arithmetic)."""
        if not m.is_square:
            raise NotSquare("polynomial evaluation needs a square matrix")
        acc = Matrix.zero(m.rows, m.rows)
        for c in reversed(self.coeffs):
            acc = (acc * m).add_diag(c)
        return acc

    def shifted(self, c) -> "Polynomial":
        """Return q with q(t) = p(t + c)."""
        c = frac(c)
        if self.is_zero or not c:
            return self
        n = self.degree
        out = [ZERO] * (n + 1)
        for k, ak in enumerate(self.coeffs):
            if ak:
                for i in range(k + 1):
                    out[i] += ak * comb(k, i) * c ** (k - i)
        return Polynomial(out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return "Polynomial(" + " + ".join(terms) + ")"


def char_poly(m: Matrix) -> Polynomial:
    """Characteristic polynomial det(t I - m), monic of degree n.

    Uses the Faddeev-LeVerrier recurrence; the division by k at step k is
    exact over the rationals.
    """
    if not m.is_square:
        raise NotSquare("characteristic polynomial of a non-square matrix")
    n = m.rows
    cs = [ONE]  # cs[k] = coefficient of t^(n-k)
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        amk = m * mk
        ck = -amk.trace() / k
        cs.append(ck)
        if k < n:
            mk = amk.add_diag(ck)
    return Polynomial(tuple(reversed(cs)))


def poly_gcd(p: Polynomial, q: Polynomial):
    """Extended Euclid: returns (g, r, s) with g monic and p*r + q*s = g."""
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    r0, r1 = p, q
    s0, s1 = Polynomial.one(), Polynomial.zero()
    t0, t1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)
