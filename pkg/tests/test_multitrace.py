import random

import pytest

from commfactor import (
    Matrix,
    NotInRadical,
    build_ut,
    conjugate_wm,
    frac,
    is_multitrace_zero,
    multitrace,
    semisimple_projection,
    vadd,
    verify_wm_data,
    viszero,
    vscale,
)
from commfactor.gallery import example0, m2_dual
from commfactor.multitrace import Multitrace
from helpers import rand_element, rand_multitrace_zero, rand_radical_element


def bv(alg, label):
    return alg.basis_vector(alg.label_index(label))


# -- projection ---------------------------------------------------------------

def test_projection_of_unit():
    alg, wm = build_ut(2, 1)
    blocks, j = semisimple_projection(alg, wm, alg.unit)
    assert blocks[0] == Matrix.identity(2)
    assert blocks[1] == Matrix.identity(1)
    assert viszero(j)


def test_projection_of_radical_element():
    alg, wm = build_ut(1, 1)
    e12 = bv(alg, "E12")
    blocks, j = semisimple_projection(alg, wm, e12)
    assert blocks[0] == Matrix.zero(1, 1)
    assert blocks[1] == Matrix.zero(1, 1)
    assert j == e12


def test_projection_example0_radical():
    entry = example0()
    alg, wm = entry.algebra, entry.wm
    e13 = alg.basis_vector(3)
    blocks, j = semisimple_projection(alg, wm, e13)
    assert all(b.is_zero for b in blocks)
    assert j == e13


def test_projection_reconstructs_exactly():
    rng = random.Random(5)
    alg, wm = build_ut(2, 2)
    for _ in range(10):
        a = rand_element(rng, alg)
        blocks, j = semisimple_projection(alg, wm, a)
        rebuilt = j
        for k, d in enumerate(wm.block_sizes):
            for p in range(d):
                for q in range(d):
                    rebuilt = vadd(rebuilt, vscale(blocks[k][p, q],
                                                   wm.matrix_units[k][p][q]))
        assert rebuilt == tuple(a)


def test_projection_idempotent():
    rng = random.Random(6)
    alg, wm = build_ut(2, 1)
    for _ in range(10):
        a = rand_element(rng, alg)
        blocks, _ = semisimple_projection(alg, wm, a)
        b_elem = alg.zero()
        for k, d in enumerate(wm.block_sizes):
            for p in range(d):
                for q in range(d):
                    b_elem = vadd(b_elem, vscale(blocks[k][p, q],
                                                 wm.matrix_units[k][p][q]))
        blocks2, j2 = semisimple_projection(alg, wm, b_elem)
        assert blocks2 == blocks
        assert viszero(j2)


# -- multitrace ----------------------------------------------------------------

def test_multitrace_of_unit():
    alg, wm = build_ut(2, 1)
    assert multitrace(alg, wm, alg.unit).values == (frac(1), frac(2))


def test_multitrace_of_radical_is_zero():
    entry = example0()
    alg, wm = entry.algebra, entry.wm
    mtr = multitrace(alg, wm, alg.basis_vector(3))
    assert mtr.values == (frac(0), frac(0))
    assert mtr.is_zero


def test_multitrace_of_commutators_vanishes():
    rng = random.Random(7)
    for blocks in [(1, 1), (2, 1), (2, 2)]:
        alg, wm = build_ut(*blocks)
        for _ in range(10):
            x = rand_element(rng, alg)
            y = rand_element(rng, alg)
            assert multitrace(alg, wm, alg.commutator(x, y)).is_zero


def test_is_multitrace_zero():
    assert is_multitrace_zero(Multitrace((frac(0), frac(0))))
    assert not is_multitrace_zero(Multitrace((frac(1), frac(2))))
    assert not is_multitrace_zero(Multitrace((frac(0), frac(1, 2))))


def test_multitrace_zero_set_is_linear():
    rng = random.Random(8)
    alg, wm = build_ut(2, 2)
    for _ in range(10):
        a = rand_multitrace_zero(rng, alg, wm)
        b = rand_multitrace_zero(rng, alg, wm)
        c = frac(rng.randint(-5, 5), rng.randint(1, 3))
        assert multitrace(alg, wm, vadd(a, b)).is_zero
        assert multitrace(alg, wm, vscale(c, a)).is_zero


# -- change of decomposition -----------------------------------------------------

def test_conjugate_by_zero_is_identity():
    alg, wm = build_ut(2, 1)
    assert conjugate_wm(alg, wm, alg.zero()) == wm


def test_conjugate_ut2_explicit():
    alg, wm = build_ut(1, 1)
    e12 = bv(alg, "E12")
    new = conjugate_wm(alg, wm, e12)
    # (1 - e12) e11 (1 + e12) = e11 + e12, (1 - e12) e22 (1 + e12) = e22 - e12
    assert new.matrix_units[0][0][0] == vadd(bv(alg, "E11"), e12)
    assert new.matrix_units[1][0][0] == vadd(bv(alg, "E22"), vscale(-1, e12))
    assert verify_wm_data(alg, new).ok


def test_conjugate_requires_radical_element():
    alg, wm = build_ut(1, 1)
    with pytest.raises(NotInRadical):
        conjugate_wm(alg, wm, alg.unit)


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (2, 2)])
def test_conjugated_data_verifies(blocks):
    rng = random.Random(9)
    alg, wm = build_ut(*blocks)
    for _ in range(3):
        r = rand_radical_element(rng, alg, wm, num=3, den=2)
        new = conjugate_wm(alg, wm, r)
        assert verify_wm_data(alg, new).ok


def test_multitrace_invariant_under_conjugation():
    rng = random.Random(10)
    for entry_alg in [build_ut(2, 1), build_ut(2, 2),
                      (example0().algebra, example0().wm),
                      (m2_dual().algebra, m2_dual().wm)]:
        alg, wm = entry_alg
        for _ in range(5):
            r = rand_radical_element(rng, alg, wm, num=3, den=2)
            new = conjugate_wm(alg, wm, r)
            a = rand_element(rng, alg)
            assert multitrace(alg, new, a) == multitrace(alg, wm, a)
