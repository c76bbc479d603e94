"""Finite-dimensional unital associative algebras over the rationals.

An :class:`Algebra` is described by structure constants on a fixed basis:
``structure[i][j]`` is the coordinate vector of the product ``b_i * b_j``.
Construction verifies the unit law and associativity on all basis triples
(a ``check=False`` escape hatch exists for builders whose output is
associative by construction).

The module also houses Wedderburn-Malcev data (:class:`WMData`): an explicit
splitting of the algebra into a semisimple part, spanned by matrix units of
square blocks, plus a radical complement.  Such data is always supplied by a
builder or by the caller and then *verified*; it is never inferred from the
structure constants.  The Jacobson radical is computed independently through
the trace form of the left regular representation (valid in characteristic
zero) and used to cross-check supplied decompositions.

Builders: :func:`build_ut` for block-triangular matrix algebras and
:func:`build_triangular` for the triangular algebra of two semisimple
algebras acting on a bimodule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    ONE,
    ZERO,
    frac,
    kernel_basis,
    span_basis,
    span_contains,
    vadd,
    vector,
    viszero,
    vsub,
    vzero,
)

__all__ = [
    "InvalidAlgebra",
    "InvalidWMData",
    "EmptyBlockList",
    "NotSemisimple",
    "ActionLawViolation",
    "IndexOutOfRange",
    "NotInRadical",
    "Algebra",
    "Subspace",
    "WMData",
    "ValidationReport",
    "multiply",
    "commutator",
    "radical",
    "verify_wm_data",
    "peirce_component",
    "is_gbt",
    "build_ut",
    "build_triangular",
    "build_direct_sum",
    "TriangularAlgebra",
    "commutator_subspace",
    "quotient_dim",
]


class InvalidAlgebra(ValueError):
    """Structure constants violate the unit law or associativity."""


class InvalidWMData(ValueError):
    """Supplied Wedderburn-Malcev data is malformed."""


class EmptyBlockList(ValueError):
    """A block-triangular builder needs at least one block."""


class NotSemisimple(ValueError):
    """A semisimple algebra was required (nonzero radical found)."""


class ActionLawViolation(ValueError):
    """Bimodule action matrices break a module or compatibility law."""


class IndexOutOfRange(IndexError):
    """Block index outside 1..r."""


class NotInRadical(ValueError):
    """Element does not lie in the span of the radical basis."""


# ---------------------------------------------------------------------------
# the algebra itself
# ---------------------------------------------------------------------------

class Algebra:
    """Immutable algebra given by structure constants.

    ``structure[i][j]`` holds the coordinates of ``b_i * b_j`` in the basis
    ``b_0 .. b_{n-1}``; ``unit`` holds the coordinates of the multiplicative
    identity.  All scalars are exact rationals.
    """

    __slots__ = ("dim", "labels", "structure", "unit", "_table", "_hash")

    def __init__(self, structure, unit, labels=None, *, check: bool = True):
        struct = tuple(tuple(vector(v) for v in row) for row in structure)
        n = len(struct)
        for row in struct:
            if len(row) != n or any(len(v) != n for v in row):
                raise InvalidAlgebra("structure constants must form an n x n grid "
                                     "of length-n vectors")
        u = vector(unit)
        if len(u) != n:
            raise InvalidAlgebra("unit vector has wrong length")
        if labels is None:
            labels = tuple(f"b{i}" for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InvalidAlgebra("label count differs from dimension")
        # sparse view of the multiplication table: (k, coeff) pairs
        table = tuple(tuple(tuple((k, c) for k, c in enumerate(v) if c)
                            for v in row) for row in struct)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "structure", struct)
        object.__setattr__(self, "unit", u)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_hash", hash((n, labels, struct, u)))
        if check:
            self._check_unit()
            self._check_associativity()

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Algebra is immutable")

    # -- consistency checks --------------------------------------------------

    def _mul_basis_right(self, v, k: int):
        """Coordinates of v * b_k."""
        out = [ZERO] * self.dim
        for s, vs in enumerate(v):
            if vs:
                for t, c in self._table[s][k]:
                    out[t] += vs * c
        return tuple(out)

    def _mul_basis_left(self, i: int, v):
        """Coordinates of b_i * v."""
        out = [ZERO] * self.dim
        for s, vs in enumerate(v):
            if vs:
                for t, c in self._table[i][s]:
                    out[t] += vs * c
        return tuple(out)

    def _check_unit(self):
        for i in range(self.dim):
            bi = self.basis_vector(i)
            if self._mul_basis_right(self.unit, i) != bi:
                raise InvalidAlgebra(f"unit law fails on the left of {self.labels[i]}")
            if self._mul_basis_left(i, self.unit) != bi:
                raise InvalidAlgebra(f"unit law fails on the right of {self.labels[i]}")

    def _check_associativity(self):
        n = self.dim
        for i in range(n):
            row = self.structure[i]
            for j in range(n):
                p = row[j]
                for k in range(n):
                    lhs = self._mul_basis_right(p, k)
                    rhs = self._mul_basis_left(i, self.structure[j][k])
                    if lhs != rhs:
                        raise InvalidAlgebra(
                            "associativity fails on "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    # -- arithmetic ------------------------------------------------------------

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def zero(self) -> tuple:
        return vzero(self.dim)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    def element(self, terms: dict) -> tuple:
        """Build an element from a {label: coefficient} mapping."""
        out = [ZERO] * self.dim
        for lab, c in terms.items():
            out[self.label_index(lab)] += frac(c)
        return tuple(out)

    def mul(self, x, y) -> tuple:
        """Product of two elements (bilinear extension of the table)."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element length does not match algebra dimension")
        out = [ZERO] * self.dim
        table = self._table
        for i, xi in enumerate(x):
            if xi:
                ti = table[i]
                for j, yj in enumerate(y):
                    if yj:
                        s = xi * yj
                        for k, c in ti[j]:
                            out[k] += s * c
        return tuple(out)

    def commutator(self, x, y) -> tuple:
        """x*y - y*x."""
        return vsub(self.mul(x, y), self.mul(y, x))

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of v -> x*v on the algebra's own basis (columns are x*b_j)."""
        cols = [self._mul_basis_right(x, j) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of v -> v*x."""
        cols = [self._mul_basis_left(j, x) for j in range(self.dim)]
        # _mul_basis_left(j, x) is b_j * x, which is column j of R_x
        return Matrix.from_columns(cols, rows=self.dim)

    def _left_trace_vector(self) -> tuple:
        """tr(L_{b_s}) for every basis element, used by the trace form."""
        out = []
        for s in range(self.dim):
            t = ZERO
            for i in range(self.dim):
                for k, c in self._table[s][i]:
                    if k == i:
                        t += c
            out.append(t)
        return tuple(out)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.dim, self.labels, self.structure, self.unit) == \
               (other.dim, other.labels, other.structure, other.unit)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Algebra(dim={self.dim}, labels={list(self.labels)!r})"


def multiply(alg: Algebra, x, y) -> tuple:
    """Module-level alias for :meth:`Algebra.mul`."""
    return alg.mul(x, y)


def commutator(alg: Algebra, x, y) -> tuple:
    """Module-level alias for :meth:`Algebra.commutator`."""
    return alg.commutator(x, y)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """Subspace of an algebra, stored with a canonical (RREF) basis."""

    __slots__ = ("basis", "ambient_dim")

    def __init__(self, basis: Iterable[Sequence], ambient_dim: int | None = None):
        vs = [vector(v) for v in basis]
        if vs:
            ambient = len(vs[0])
            if ambient_dim is not None and ambient_dim != ambient:
                raise DimensionMismatch("ambient dimension mismatch")
        else:
            if ambient_dim is None:
                raise DimensionMismatch("empty subspace needs ambient_dim")
            ambient = ambient_dim
        canon = span_basis(vs, ambient if vs else None)
        if len(canon) != len(vs):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", canon)
        object.__setattr__(self, "ambient_dim", ambient)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_spanning(cls, vectors: Iterable[Sequence], ambient_dim: int | None = None) -> "Subspace":
        vs = [vector(v) for v in vectors]
        canon = span_basis(vs)
        if not canon and ambient_dim is None:
            if vs:
                ambient_dim = len(vs[0])
            else:
                raise DimensionMismatch("empty spanning set needs ambient_dim")
        sub = cls.__new__(cls)
        object.__setattr__(sub, "basis", canon)
        object.__setattr__(sub, "ambient_dim", len(canon[0]) if canon else ambient_dim)
        return sub

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong ambient dimension")
        return span_contains(self.basis, v)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


# ---------------------------------------------------------------------------
# Wedderburn-Malcev data
# ---------------------------------------------------------------------------

class WMData:
    """Explicit Wedderburn-Malcev decomposition.

    ``matrix_units[k][p][q]`` is the algebra element playing the role of the
    (p, q) matrix unit of the k-th semisimple block (block sizes in
    ``block_sizes``); ``radical_basis`` spans the radical complement.
    """

    __slots__ = ("block_sizes", "matrix_units", "radical_basis", "_hash")

    def __init__(self, block_sizes: Sequence[int], matrix_units, radical_basis):
        sizes = tuple(int(d) for d in block_sizes)
        if not sizes or any(d <= 0 for d in sizes):
            raise InvalidWMData("block sizes must be positive")
        units = tuple(tuple(tuple(vector(v) for v in prow) for prow in grid)
                      for grid in matrix_units)
        if len(units) != len(sizes):
            raise InvalidWMData("one matrix-unit grid per block required")
        for d, grid in zip(sizes, units):
            if len(grid) != d or any(len(prow) != d for prow in grid):
                raise InvalidWMData(f"matrix-unit grid is not {d} x {d}")
        rad = tuple(vector(v) for v in radical_basis)
        object.__setattr__(self, "block_sizes", sizes)
        object.__setattr__(self, "matrix_units", units)
        object.__setattr__(self, "radical_basis", rad)
        object.__setattr__(self, "_hash", hash((sizes, units, rad)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("WMData is immutable")

    @property
    def r(self) -> int:
        """Number of semisimple blocks."""
        return len(self.block_sizes)

    @property
    def semisimple_dim(self) -> int:
        return sum(d * d for d in self.block_sizes)

    def idempotent(self, k: int) -> tuple:
        """e_k = sum_p E^(k)_{pp} (0-based block index)."""
        grid = self.matrix_units[k]
        e = grid[0][0]
        for p in range(1, self.block_sizes[k]):
            e = vadd(e, grid[p][p])
        return e

    def flat_units(self):
        """All matrix units in canonical (block, row, col) order."""
        for grid in self.matrix_units:
            for prow in grid:
                yield from prow

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, WMData):
            return NotImplemented
        return (self.block_sizes, self.matrix_units, self.radical_basis) == \
               (other.block_sizes, other.matrix_units, other.radical_basis)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"WMData(blocks={list(self.block_sizes)}, "
                f"radical_dim={len(self.radical_basis)})")


@dataclass(frozen=True)
class ValidationReport:
    """List of violated invariants; empty means the data is valid."""

    problems: tuple

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# radical via the trace form
# ---------------------------------------------------------------------------

def radical(alg: Algebra) -> Subspace:
    """Jacobson radical, computed from the trace form of L.

    In characteristic zero the radical is exactly the kernel of the
    symmetric bilinear form (x, y) -> tr(L_{xy}); this is independent of any
    supplied decomposition and is used to cross-check user data.
    """
    n = alg.dim
    tvec = alg._left_trace_vector()
    gram_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = ZERO
            for k, c in alg._table[i][j]:
                if tvec[k]:
                    s += c * tvec[k]
            row.append(s)
        gram_rows.append(row)
    gram = Matrix(gram_rows) if n else Matrix.zero(0, 0)
    return Subspace.from_spanning(kernel_basis(gram), ambient_dim=n)


# ---------------------------------------------------------------------------
# verification of supplied WM data
# ---------------------------------------------------------------------------

def verify_wm_data(alg: Algebra, wm: WMData) -> ValidationReport:
    """Check every invariant of the decomposition; report all violations."""
    problems = []
    n = alg.dim
    for v in wm.flat_units():
        if len(v) != n:
            return ValidationReport(("matrix units have wrong length",))
    for v in wm.radical_basis:
        if len(v) != n:
            return ValidationReport(("radical basis vectors have wrong length",))

    # matrix-unit relations inside each block
    for k, d in enumerate(wm.block_sizes):
        grid = wm.matrix_units[k]
        for p in range(d):
            for q in range(d):
                for s in range(d):
                    for t in range(d):
                        prod = alg.mul(grid[p][q], grid[s][t])
                        want = grid[p][t] if q == s else alg.zero()
                        if prod != want:
                            problems.append(
                                f"matrix-unit relation fails in block {k + 1}: "
                                f"E[{p},{q}] * E[{s},{t}]")
    # products across distinct blocks vanish
    for k in range(wm.r):
        for l in range(wm.r):
            if k == l:
                continue
            bad = False
            for prow in wm.matrix_units[k]:
                for u in prow:
                    for qrow in wm.matrix_units[l]:
                        for v in qrow:
                            if not viszero(alg.mul(u, v)):
                                bad = True
            if bad:
                problems.append(
                    f"cross-block product is nonzero between blocks "
                    f"{k + 1} and {l + 1}")
    # orthogonal idempotents summing to the unit
    total = alg.zero()
    for k in range(wm.r):
        total = vadd(total, wm.idempotent(k))
    if total != alg.unit:
        problems.append("idempotents do not sum to the unit")

    # vector-space splitting
    units = list(wm.flat_units())
    combined = units + list(wm.radical_basis)
    if len(combined) != n:
        problems.append(
            f"semisimple + radical dimensions {len(combined)} != dim {n}")
    if len(span_basis(combined)) != len(combined):
        problems.append("matrix units and radical basis are linearly dependent")

    # the supplied radical must equal the trace-form radical
    if len(span_basis(wm.radical_basis)) != len(wm.radical_basis):
        problems.append("radical basis vectors are linearly dependent")
    computed = radical(alg)
    supplied = Subspace.from_spanning(wm.radical_basis, ambient_dim=n)
    if supplied != computed:
        problems.append("radical basis does not span the Jacobson radical")

    return ValidationReport(tuple(problems))


# ---------------------------------------------------------------------------
# Peirce decomposition and the block-triangularity test
# ---------------------------------------------------------------------------

def _peirce0(alg: Algebra, wm: WMData, i0: int, j0: int) -> Subspace:
    ei = wm.idempotent(i0)
    ej = wm.idempotent(j0)
    images = [alg.mul(alg.mul(ei, v), ej) for v in wm.radical_basis]
    return Subspace.from_spanning(images, ambient_dim=alg.dim)


def peirce_component(alg: Algebra, wm: WMData, i: int, j: int) -> Subspace:
    """Basis of e_i rad(A) e_j for 1-based block indices i, j."""
    if not (1 <= i <= wm.r) or not (1 <= j <= wm.r):
        raise IndexOutOfRange(f"block indices ({i}, {j}) outside 1..{wm.r}")
    return _peirce0(alg, wm, i - 1, j - 1)


@lru_cache(maxsize=None)
def _is_gbt_cached(alg: Algebra, wm: WMData) -> bool:
    for i0 in range(wm.r):
        for j0 in range(i0 + 1):
            if not _peirce0(alg, wm, i0, j0).is_zero:
                return False
    return True


def is_gbt(alg: Algebra, wm: WMData) -> bool:
    """True iff every Peirce component e_i rad(A) e_j with i >= j vanishes.

    The condition is evaluated in the supplied block order; no reordering
    search is attempted.
    """
    return _is_gbt_cached(alg, wm)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _unit_label(p: int, q: int, n: int) -> str:
    return f"E{p + 1}{q + 1}" if n <= 9 else f"E{p + 1}_{q + 1}"


@lru_cache(maxsize=None)
def _build_ut_cached(blocks: tuple):
    n = sum(blocks)
    block_of = []
    for k, d in enumerate(blocks):
        block_of.extend([k] * d)
    starts = []
    s = 0
    for d in blocks:
        starts.append(s)
        s += d

    positions = []
    for k, d in enumerate(blocks):
        base = starts[k]
        for p in range(d):
            for q in range(d):
                positions.append((base + p, base + q))
    rad_positions = []
    for p in range(n):
        for q in range(n):
            if block_of[p] < block_of[q]:
                rad_positions.append((p, q))
    positions.extend(rad_positions)

    index = {pos: i for i, pos in enumerate(positions)}
    m = len(positions)

    structure = []
    for (p, q) in positions:
        row = []
        for (s_, t) in positions:
            v = [ZERO] * m
            if q == s_:
                v[index[(p, t)]] = ONE
            row.append(tuple(v))
        structure.append(tuple(row))
    unit = [ZERO] * m
    for p in range(n):
        unit[index[(p, p)]] = ONE
    labels = [_unit_label(p, q, n) for (p, q) in positions]

    alg = Algebra(structure, unit, labels)

    units = []
    for k, d in enumerate(blocks):
        base = starts[k]
        grid = []
        for p in range(d):
            prow = []
            for q in range(d):
                prow.append(alg.basis_vector(index[(base + p, base + q)]))
            grid.append(tuple(prow))
        units.append(tuple(grid))
    rad_basis = [alg.basis_vector(index[pos]) for pos in rad_positions]
    wm = WMData(blocks, units, rad_basis)
    return alg, wm


def build_ut(*blocks: int):
    """Block-triangular matrix algebra with the given diagonal block sizes.

    Returns ``(Algebra, WMData)``.  Basis order: the diagonal-block matrix
    units (block by block, row-major), then the strictly-upper positions in
    global row-major order, which form the radical basis.
    """
    if len(blocks) == 1 and not isinstance(blocks[0], int):
        blocks = tuple(blocks[0])
    if not blocks:
        raise EmptyBlockList("at least one block size is required")
    bl = tuple(int(d) for d in blocks)
    if any(d <= 0 for d in bl):
        raise EmptyBlockList("block sizes must be positive")
    return _build_ut_cached(bl)


class TriangularAlgebra:
    """Output of :func:`build_triangular`.

    Holds the assembled algebra and WM data plus the component split
    (left algebra, right algebra, bimodule coordinates) needed to embed and
    project elements.  Iterating yields ``(algebra, wm)`` so the object can
    be unpacked like the other builders' return value.
    """

    __slots__ = ("algebra", "wm", "left", "right", "m_dim")

    def __init__(self, algebra, wm, left, right, m_dim):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "wm", wm)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "m_dim", m_dim)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("TriangularAlgebra is immutable")

    def __iter__(self):
        return iter((self.algebra, self.wm))

    def embed_left(self, v) -> tuple:
        if len(v) != self.left.dim:
            raise DimensionMismatch("left-component element has wrong length")
        return vector(v) + vzero(self.right.dim + self.m_dim)

    def embed_right(self, v) -> tuple:
        if len(v) != self.right.dim:
            raise DimensionMismatch("right-component element has wrong length")
        return vzero(self.left.dim) + vector(v) + vzero(self.m_dim)

    def embed_mid(self, v) -> tuple:
        if len(v) != self.m_dim:
            raise DimensionMismatch("bimodule element has wrong length")
        return vzero(self.left.dim + self.right.dim) + vector(v)

    def project_mid(self, v) -> tuple:
        head = self.left.dim + self.right.dim
        if len(v) != head + self.m_dim:
            raise DimensionMismatch("element has wrong length")
        if not viszero(v[:head]):
            raise ValueError("element has components outside the bimodule")
        return tuple(v[head:])

    def __repr__(self):
        return (f"TriangularAlgebra(left={self.left.dim}, right={self.right.dim}, "
                f"m={self.m_dim})")


def _combine_action(mats, coords, m_dim):
    acc = Matrix.zero(m_dim, m_dim)
    for c, mt in zip(coords, mats):
        if c:
            acc = acc + mt * c
    return acc


def build_triangular(a1: Algebra, wm1: WMData, a2: Algebra, wm2: WMData,
                     m_dim: int, left_action=None, right_action=None, *,
                     check: bool = True) -> TriangularAlgebra:
    """Triangular algebra of two semisimple algebras glued by a bimodule.

    ``left_action[i]`` is the matrix (on the chosen basis of the bimodule M)
    of left multiplication by the i-th basis element of ``a1``;
    ``right_action[j]`` the matrix of right multiplication by the j-th basis
    element of ``a2``.  All module laws plus the compatibility law
    (a*m)*b = a*(m*b) are checked on basis triples.  The result carries WM
    data with the blocks of ``a1`` followed by those of ``a2`` and M as the
    radical, and is always generalized block-triangular.
    """
    if radical(a1).dim != 0:
        raise NotSemisimple("left component has a nonzero radical")
    if radical(a2).dim != 0:
        raise NotSemisimple("right component has a nonzero radical")

    if left_action is None:
        left_action = [Matrix.zero(m_dim, m_dim)] * a1.dim
    if right_action is None:
        right_action = [Matrix.zero(m_dim, m_dim)] * a2.dim
    lact = [m if isinstance(m, Matrix) else Matrix(m) for m in left_action]
    ract = [m if isinstance(m, Matrix) else Matrix(m) for m in right_action]
    if len(lact) != a1.dim or len(ract) != a2.dim:
        raise DimensionMismatch("one action matrix per basis element required")
    for mt in lact + ract:
        if mt.rows != m_dim or mt.cols != m_dim:
            raise DimensionMismatch("action matrices must be m_dim x m_dim")

    ident = Matrix.identity(m_dim)
    if _combine_action(lact, a1.unit, m_dim) != ident:
        raise ActionLawViolation("left unit does not act as the identity")
    if _combine_action(ract, a2.unit, m_dim) != ident:
        raise ActionLawViolation("right unit does not act as the identity")
    for i in range(a1.dim):
        for j in range(a1.dim):
            if lact[i] * lact[j] != _combine_action(lact, a1.structure[i][j], m_dim):
                raise ActionLawViolation(
                    f"left module law fails on basis pair ({i}, {j})")
    for i in range(a2.dim):
        for j in range(a2.dim):
            if ract[j] * ract[i] != _combine_action(ract, a2.structure[i][j], m_dim):
                raise ActionLawViolation(
                    f"right module law fails on basis pair ({i}, {j})")
    for i in range(a1.dim):
        for j in range(a2.dim):
            if lact[i] * ract[j] != ract[j] * lact[i]:
                raise ActionLawViolation(
                    f"(a*m)*b != a*(m*b) on basis pair ({i}, {j})")

    n1, n2 = a1.dim, a2.dim
    n = n1 + n2 + m_dim

    def pad_left(v):
        return tuple(v) + vzero(n2 + m_dim)

    def pad_right(v):
        return vzero(n1) + tuple(v) + vzero(m_dim)

    def pad_mid(v):
        return vzero(n1 + n2) + tuple(v)

    zero_n = vzero(n)
    structure = [[zero_n] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            structure[i][j] = pad_left(a1.structure[i][j])
        for k in range(m_dim):
            structure[i][n1 + n2 + k] = pad_mid(lact[i].col(k))
    for i in range(n2):
        for j in range(n2):
            structure[n1 + i][n1 + j] = pad_right(a2.structure[i][j])
    for k in range(m_dim):
        for j in range(n2):
            structure[n1 + n2 + k][n1 + j] = pad_mid(ract[j].col(k))

    unit = pad_left(a1.unit)
    unit = vadd(unit, pad_right(a2.unit))
    labels = [f"a.{lab}" for lab in a1.labels] + [f"b.{lab}" for lab in a2.labels] \
        + [f"m{k + 1}" for k in range(m_dim)]

    alg = Algebra(structure, unit, labels, check=check)

    units = []
    for grid in wm1.matrix_units:
        units.append(tuple(tuple(pad_left(v) for v in prow) for prow in grid))
    for grid in wm2.matrix_units:
        units.append(tuple(tuple(pad_right(v) for v in prow) for prow in grid))
    rad_basis = [alg.basis_vector(n1 + n2 + k) for k in range(m_dim)]
    wm = WMData(wm1.block_sizes + wm2.block_sizes, units, rad_basis)

    if check:
        report = verify_wm_data(alg, wm)
        if not report.ok:
            raise InvalidWMData("; ".join(report.problems))
        assert is_gbt(alg, wm)
    return TriangularAlgebra(alg, wm, a1, a2, m_dim)


def build_direct_sum(a1: Algebra, wm1: WMData, a2: Algebra, wm2: WMData,
                     *, check: bool = True) -> TriangularAlgebra:
    """Direct product of two semisimple algebras (triangular with M = 0)."""
    return build_triangular(a1, wm1, a2, wm2, 0, None, None, check=check)


# ---------------------------------------------------------------------------
# commutator span
# ---------------------------------------------------------------------------

def commutator_subspace(alg: Algebra) -> Subspace:
    """Span of all commutators of basis pairs (equals span of c(A))."""
    vs = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            vs.append(vsub(alg.structure[i][j], alg.structure[j][i]))
    return Subspace.from_spanning(vs, ambient_dim=alg.dim)


def quotient_dim(alg: Algebra) -> int:
    """dim A - dim [A, A]."""
    return alg.dim - commutator_subspace(alg).dim
