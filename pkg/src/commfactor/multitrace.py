"""The multitrace invariant.

Given Wedderburn-Malcev data, every element splits uniquely as a semisimple
part (a tuple of block matrices read off the matrix-unit coordinates) plus a
radical part.  The multitrace is the multiset of block traces of the
semisimple part, canonically encoded as an ascending sorted tuple; an
element has multitrace zero when every block trace vanishes.

:func:`conjugate_wm` produces the alternative decompositions guaranteed by
the Wedderburn-Malcev uniqueness theorem: conjugation of the semisimple part
by a unit 1 + r with r radical.  The multitrace is invariant under such a
change of data, which the test suite exercises.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Algebra, InvalidWMData, NotInRadical, Subspace, WMData
from .linalg import Matrix, SingularMatrix, ZERO, vadd, viszero, vneg, vscale, vsub

__all__ = [
    "Multitrace",
    "semisimple_projection",
    "multitrace",
    "is_multitrace_zero",
    "conjugate_wm",
]


@dataclass(frozen=True)
class Multitrace:
    """Multiset of block traces, stored sorted ascending with multiplicity."""

    values: tuple

    @property
    def is_zero(self) -> bool:
        return all(not v for v in self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@lru_cache(maxsize=None)
def _coordinate_solver(alg: Algebra, wm: WMData) -> Matrix:
    """Inverse of the basis-change matrix [matrix units | radical basis]."""
    cols = list(wm.flat_units()) + list(wm.radical_basis)
    if len(cols) != alg.dim:
        raise InvalidWMData(
            f"decomposition spans {len(cols)} dimensions, algebra has {alg.dim}")
    basis = Matrix.from_columns(cols, rows=alg.dim)
    try:
        return basis.inverse()
    except SingularMatrix:
        raise InvalidWMData("matrix units and radical basis do not form a basis") \
            from None


def semisimple_projection(alg: Algebra, wm: WMData, a):
    """Split a = b + j along the decomposition.

    Returns (blocks, j): one d_k x d_k matrix per block holding the
    matrix-unit coordinates of the semisimple part, and the radical part j
    as an element of the algebra.  The identity
    ``a = sum_k sum_{pq} blocks[k][p,q] * E^(k)_{pq} + j`` holds exactly.
    """
    coeffs = _coordinate_solver(alg, wm).apply(a)
    blocks = []
    offset = 0
    bpart = alg.zero()
    for k, d in enumerate(wm.block_sizes):
        grid = wm.matrix_units[k]
        rows = []
        for p in range(d):
            rows.append(coeffs[offset + p * d: offset + (p + 1) * d])
        blocks.append(Matrix(rows))
        for p in range(d):
            for q in range(d):
                c = coeffs[offset + p * d + q]
                if c:
                    bpart = vadd(bpart, vscale(c, grid[p][q]))
        offset += d * d
    j = vsub(a, bpart)
    return tuple(blocks), j


def multitrace(alg: Algebra, wm: WMData, a) -> Multitrace:
    """Multiset of block traces of the semisimple part of ``a``."""
    coeffs = _coordinate_solver(alg, wm).apply(a)
    traces = []
    offset = 0
    for d in wm.block_sizes:
        t = ZERO
        for p in range(d):
            t += coeffs[offset + p * d + p]
        traces.append(t)
        offset += d * d
    return Multitrace(tuple(sorted(traces)))


def is_multitrace_zero(mtr: Multitrace) -> bool:
    return mtr.is_zero


def conjugate_wm(alg: Algebra, wm: WMData, rad_elem) -> WMData:
    """Conjugate the semisimple part by the unit 1 + r, r radical.

    The new matrix units are (1+r)^{-1} E (1+r); the inverse is the finite
    geometric series 1 - r + r^2 - ... (r is nilpotent).  The radical itself
    is an ideal and is left untouched.
    """
    rad_span = Subspace.from_spanning(wm.radical_basis, ambient_dim=alg.dim)
    if len(rad_elem) != alg.dim or not rad_span.contains(rad_elem):
        raise NotInRadical("conjugating element is not in the radical span")
    u = vadd(alg.unit, rad_elem)
    # (1 + r)^{-1} = sum_k (-r)^k, a finite sum by nilpotency
    neg = vneg(rad_elem)
    u_inv = alg.unit
    term = neg
    steps = 0
    while not viszero(term):
        u_inv = vadd(u_inv, term)
        term = alg.mul(term, neg)
        steps += 1
        if steps > alg.dim:
            raise InvalidWMData("radical element is not nilpotent")
    new_units = []
    for grid in wm.matrix_units:
        new_grid = []
        for prow in grid:
            new_grid.append(tuple(alg.mul(alg.mul(u_inv, e), u) for e in prow))
        new_units.append(tuple(new_grid))
    return WMData(wm.block_sizes, new_units, wm.radical_basis)
