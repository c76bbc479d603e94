"""Counterexample gallery.

Two hand-built algebras demarcate the limits of the multitrace criterion:

* ``example0``: the 4-dimensional subalgebra of 3x3 matrices with equal
  (1,1) and (2,2) entries and zeros below the diagonal pattern.  Its
  multitrace-zero elements fill the whole radical, but the commutator set
  is only the line through e13, so multitrace zero does not imply
  commutator outside the block-triangular class.

* ``m2_dual``: 2x2 matrices over the dual numbers (M_2 with a square-zero
  central generator x).  Here r = 1, the element x has multitrace zero,
  yet the commutator span is sl_2 + sl_2*x and misses x.

Each entry stores machine-checkable assertions that the CLI (and CI) can
replay.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .algebra import (
    Algebra,
    Subspace,
    WMData,
    commutator_subspace,
    is_gbt,
    quotient_dim,
    radical,
    verify_wm_data,
)
from .factor import is_commutator
from .linalg import ONE, ZERO
from .multitrace import multitrace

__all__ = ["GalleryEntry", "example0", "m2_dual", "gallery_names", "get_entry",
           "run_entry"]


@dataclass(frozen=True)
class GalleryEntry:
    """Named algebra plus the facts expected to hold for it."""

    name: str
    description: str
    algebra: Algebra
    wm: WMData
    assertions: tuple  # of (label, zero-argument callable -> bool)


def run_entry(entry: GalleryEntry):
    """Evaluate every stored assertion; returns [(label, ok), ...]."""
    return [(label, bool(check())) for label, check in entry.assertions]


@lru_cache(maxsize=None)
def example0() -> GalleryEntry:
    # basis: u1 = e11 + e22, u2 = e33, u3 = e12, u4 = e13 inside 3x3 matrices
    def emb(pairs):
        m = [[ZERO] * 3 for _ in range(3)]
        for (p, q), c in pairs:
            m[p][q] = c
        return m

    basis_mats = [
        emb([((0, 0), ONE), ((1, 1), ONE)]),
        emb([((2, 2), ONE)]),
        emb([((0, 1), ONE)]),
        emb([((0, 2), ONE)]),
    ]

    def mat_mul3(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
                for i in range(3)]

    def coords_of(m):
        # invert the embedding: a = m[0][0] (= m[1][1]), b = m[2][2],
        # c = m[0][1], d = m[0][2]
        assert m[0][0] == m[1][1] and not any(
            (m[1][0], m[1][2], m[2][0], m[2][1]))
        return (m[0][0], m[2][2], m[0][1], m[0][2])

    structure = []
    for bi in basis_mats:
        row = []
        for bj in basis_mats:
            row.append(coords_of(mat_mul3(bi, bj)))
        structure.append(row)
    unit = (ONE, ONE, ZERO, ZERO)
    labels = ("e11+e22", "e33", "e12", "e13")
    alg = Algebra(structure, unit, labels)

    u1, u2, u3, u4 = (alg.basis_vector(i) for i in range(4))
    wm = WMData(
        block_sizes=(1, 1),
        matrix_units=(((u1,),), ((u2,),)),
        radical_basis=(u3, u4),
    )

    e12, e13 = u3, u4
    cs = lambda: commutator_subspace(alg)
    assertions = (
        ("dimension is 4", lambda: alg.dim == 4),
        ("decomposition data is valid", lambda: verify_wm_data(alg, wm).ok),
        ("two one-dimensional blocks", lambda: wm.block_sizes == (1, 1)),
        ("radical is span{e12, e13}",
         lambda: radical(alg) == Subspace([u3, u4])),
        ("commutator span is the line through e13",
         lambda: cs() == Subspace([u4])),
        ("dim A/[A,A] is 3", lambda: quotient_dim(alg) == 3),
        ("not generalized block-triangular", lambda: not is_gbt(alg, wm)),
        ("e12 has multitrace zero",
         lambda: multitrace(alg, wm, e12).is_zero),
        ("e12 lies outside the commutator span",
         lambda: not cs().contains(e12)),
        ("the commutator test honestly reports unknown for e12",
         lambda: is_commutator(alg, wm, e12).kind == "unknown"),
        ("e13 lies inside the commutator span",
         lambda: cs().contains(e13)),
    )
    return GalleryEntry(
        name="example0",
        description="4-dimensional algebra whose multitrace-zero set strictly "
                    "contains its commutator set",
        algebra=alg, wm=wm, assertions=assertions)


@lru_cache(maxsize=None)
def m2_dual() -> GalleryEntry:
    # basis: E11, E12, E21, E22, then the same multiplied by a central
    # square-zero element x
    def unit_mul(p, q, s, t):
        return (p, t) if q == s else None

    idx = {}
    labels = []
    for grade in (0, 1):
        for p in range(2):
            for q in range(2):
                idx[(p, q, grade)] = len(labels)
                labels.append(f"e{p + 1}{q + 1}" + ("x" if grade else ""))
    n = 8
    structure = []
    for (p, q, g1) in list(idx):
        row = []
        for (s, t, g2) in list(idx):
            v = [ZERO] * n
            pos = unit_mul(p, q, s, t)
            if pos is not None and g1 + g2 <= 1:
                v[idx[(pos[0], pos[1], g1 + g2)]] = ONE
            row.append(tuple(v))
        structure.append(tuple(row))
    unit = [ZERO] * n
    unit[idx[(0, 0, 0)]] = ONE
    unit[idx[(1, 1, 0)]] = ONE
    alg = Algebra(structure, unit, labels)

    bv = alg.basis_vector
    units = ((( bv(idx[(0, 0, 0)]), bv(idx[(0, 1, 0)]) ),
              ( bv(idx[(1, 0, 0)]), bv(idx[(1, 1, 0)]) )),)
    rad = tuple(bv(idx[(p, q, 1)]) for p in range(2) for q in range(2))
    wm = WMData(block_sizes=(2,), matrix_units=units, radical_basis=rad)

    e = lambda p, q, g: bv(idx[(p, q, g)])
    x_elem = alg.element({"e11x": 1, "e22x": 1})
    sl2 = [e(0, 1, 0), e(1, 0, 0),
           tuple(a - b for a, b in zip(e(0, 0, 0), e(1, 1, 0)))]
    sl2x = [e(0, 1, 1), e(1, 0, 1),
            tuple(a - b for a, b in zip(e(0, 0, 1), e(1, 1, 1)))]
    expected_span = Subspace(sl2 + sl2x)
    cs = lambda: commutator_subspace(alg)
    assertions = (
        ("dimension is 8", lambda: alg.dim == 8),
        ("decomposition data is valid", lambda: verify_wm_data(alg, wm).ok),
        ("single semisimple block", lambda: wm.r == 1),
        ("commutator span is contained in sl2 + sl2*x",
         lambda: all(expected_span.contains(v) for v in cs())),
        ("commutator span equals sl2 + sl2*x (dimension 6)",
         lambda: cs() == expected_span),
        ("dim A/[A,A] is 2", lambda: quotient_dim(alg) == 2),
        ("the bound dim A/[A,A] >= r is strict here",
         lambda: quotient_dim(alg) > wm.r),
        ("not generalized block-triangular", lambda: not is_gbt(alg, wm)),
        ("x has multitrace zero", lambda: multitrace(alg, wm, x_elem).is_zero),
        ("x lies outside the commutator span",
         lambda: not cs().contains(x_elem)),
    )
    return GalleryEntry(
        name="m2_dual",
        description="2x2 matrices over the dual numbers: a single-block "
                    "algebra whose radical is not inside the commutator span",
        algebra=alg, wm=wm, assertions=assertions)


_ENTRIES: dict[str, Callable[[], GalleryEntry]] = {
    "example0": example0,
    "m2_dual": m2_dual,
}


def gallery_names():
    return tuple(_ENTRIES)


def get_entry(name: str) -> GalleryEntry:
    try:
        return _ENTRIES[name]()
    except KeyError:
        raise KeyError(f"unknown gallery entry {name!r}") from None
