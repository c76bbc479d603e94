import random

import pytest
from hypothesis import given, settings, strategies as st

from commfactor import (
    ActionLawViolation,
    Algebra,
    EmptyBlockList,
    IndexOutOfRange,
    InvalidAlgebra,
    Matrix,
    NotSemisimple,
    Subspace,
    WMData,
    build_direct_sum,
    build_triangular,
    build_ut,
    commutator,
    commutator_subspace,
    frac,
    is_gbt,
    multiply,
    peirce_component,
    quotient_dim,
    radical,
    verify_wm_data,
    vadd,
    vscale,
)
from commfactor.gallery import example0, m2_dual
from commfactor.linalg import span_basis
from helpers import rand_element, rand_radical_element

small_rationals = st.builds(frac, st.integers(-5, 5), st.integers(1, 3))


def bv(alg, label):
    return alg.basis_vector(alg.label_index(label))


# -- multiplication ------------------------------------------------------------

def test_multiply_matrix_units_ut2():
    alg, _ = build_ut(1, 1)
    assert multiply(alg, bv(alg, "E11"), bv(alg, "E12")) == bv(alg, "E12")
    assert multiply(alg, bv(alg, "E12"), bv(alg, "E12")) == alg.zero()


def test_multiply_unit_law():
    alg, _ = build_ut(2, 1)
    rng = random.Random(0)
    x = rand_element(rng, alg)
    assert multiply(alg, alg.unit, x) == tuple(x)
    assert multiply(alg, x, alg.unit) == tuple(x)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_multiplication_is_associative_on_elements(data):
    alg, _ = build_ut(2, 1)
    draw_vec = lambda: tuple(data.draw(small_rationals) for _ in range(alg.dim))
    x, y, z = draw_vec(), draw_vec(), draw_vec()
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


def test_commutator_matrix_units():
    m2, _ = build_ut(2)
    e11_minus_e22 = tuple(a - b for a, b in zip(bv(m2, "E11"), bv(m2, "E22")))
    assert commutator(m2, bv(m2, "E12"), bv(m2, "E21")) == e11_minus_e22


def test_commutator_alternating():
    alg, _ = build_ut(2, 1)
    x = rand_element(random.Random(1), alg)
    assert commutator(alg, x, x) == alg.zero()


def test_commutator_with_idempotent():
    alg, _ = build_ut(1, 1)
    assert commutator(alg, bv(alg, "E12"), bv(alg, "E22")) == bv(alg, "E12")


def test_bad_structure_rejected():
    # one basis element whose square is itself but which is not the unit of
    # a two-dimensional algebra: violates associativity or the unit law
    with pytest.raises(InvalidAlgebra):
        Algebra([[(0, 1), (0, 0)], [(0, 0), (1, 0)]], (1, 0))


# -- radical ---------------------------------------------------------------------

def test_radical_ut2():
    alg, _ = build_ut(1, 1)
    assert radical(alg) == Subspace([bv(alg, "E12")])


def test_radical_semisimple():
    m2, _ = build_ut(2)
    assert radical(m2).is_zero


def test_radical_example0():
    entry = example0()
    alg = entry.algebra
    e12 = alg.basis_vector(2)
    e13 = alg.basis_vector(3)
    assert radical(alg) == Subspace([e12, e13])


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (2, 2), (1, 1, 1)])
def test_radical_is_nilpotent_ideal(blocks):
    alg, wm = build_ut(*blocks)
    rad = radical(alg)
    # two-sided ideal: b_i * v and v * b_i stay inside
    for v in rad:
        for i in range(alg.dim):
            assert rad.contains(alg.mul(alg.basis_vector(i), v))
            assert rad.contains(alg.mul(v, alg.basis_vector(i)))
    # nilpotent: powers of the ideal shrink to zero within dim steps
    current = list(rad.basis)
    for _ in range(alg.dim):
        if not current:
            break
        nxt = [alg.mul(u, v) for u in current for v in rad.basis]
        current = [v for v in span_basis(nxt)]
    assert not current


def test_trace_form_nondegenerate_on_quotient():
    # independent oracle: Gram matrix of (x, y) -> tr(L_{xy}) has rank
    # dim - dim radical, i.e. the induced form on the quotient is
    # nondegenerate
    from commfactor.linalg import rank as mat_rank
    for blocks in [(1, 1), (2, 1)]:
        alg, _ = build_ut(*blocks)
        gram = []
        for i in range(alg.dim):
            row = []
            for j in range(alg.dim):
                prod = alg.mul(alg.basis_vector(i), alg.basis_vector(j))
                row.append(alg.left_mult_matrix(prod).trace())
            gram.append(row)
        assert mat_rank(Matrix(gram)) == alg.dim - radical(alg).dim


# -- WM data verification ---------------------------------------------------------

def test_verify_wm_data_canonical():
    alg, wm = build_ut(2, 1)
    assert verify_wm_data(alg, wm).ok


def test_verify_wm_data_zeroed_unit():
    alg, wm = build_ut(2, 1)
    units = [list(list(prow) for prow in grid) for grid in wm.matrix_units]
    units[0][0][1] = alg.zero()  # clobber E12 of the first block
    bad = WMData(wm.block_sizes, units, wm.radical_basis)
    report = verify_wm_data(alg, bad)
    assert not report.ok
    assert any("matrix-unit relation" in p for p in report.problems)


def test_verify_wm_data_short_radical():
    alg, wm = build_ut(2, 1)
    bad = WMData(wm.block_sizes, wm.matrix_units, wm.radical_basis[:-1])
    report = verify_wm_data(alg, bad)
    assert not report.ok
    assert any("dimensions" in p or "radical" in p for p in report.problems)


# -- Peirce components -------------------------------------------------------------

def test_peirce_ut2():
    alg, wm = build_ut(1, 1)
    assert peirce_component(alg, wm, 1, 2) == Subspace([bv(alg, "E12")])
    assert peirce_component(alg, wm, 2, 1).is_zero


def test_peirce_example0():
    entry = example0()
    alg, wm = entry.algebra, entry.wm
    e12 = alg.basis_vector(2)
    e13 = alg.basis_vector(3)
    assert peirce_component(alg, wm, 1, 1) == Subspace([e12])
    assert peirce_component(alg, wm, 1, 2) == Subspace([e13])
    assert peirce_component(alg, wm, 2, 1).is_zero
    assert peirce_component(alg, wm, 2, 2).is_zero


def test_peirce_index_range():
    alg, wm = build_ut(1, 1)
    with pytest.raises(IndexOutOfRange):
        peirce_component(alg, wm, 0, 1)
    with pytest.raises(IndexOutOfRange):
        peirce_component(alg, wm, 1, 3)


def test_radical_is_direct_sum_of_upper_peirce_components():
    alg, wm = build_ut(2, 2, 1)
    total = []
    for i in range(1, wm.r + 1):
        for j in range(1, wm.r + 1):
            total.extend(peirce_component(alg, wm, i, j).basis)
    assert Subspace.from_spanning(total, ambient_dim=alg.dim) == radical(alg)


# -- block-triangularity test --------------------------------------------------------

def test_is_gbt_ut():
    alg, wm = build_ut(2, 1)
    assert is_gbt(alg, wm)


def test_is_gbt_example0_false():
    entry = example0()
    assert not is_gbt(entry.algebra, entry.wm)


def test_is_gbt_semisimple():
    alg, wm = build_ut(3)
    assert is_gbt(alg, wm)


# -- builders ---------------------------------------------------------------------

def test_build_ut_single_block_is_full_matrix_algebra():
    alg, wm = build_ut(3)
    assert alg.dim == 9
    assert wm.radical_basis == ()
    assert radical(alg).is_zero


def test_build_ut_all_ones_is_upper_triangular():
    alg, wm = build_ut(1, 1, 1)
    assert alg.dim == 6
    assert len(wm.radical_basis) == 3
    assert is_gbt(alg, wm)


def test_build_ut_2_1_dimension():
    alg, wm = build_ut(2, 1)
    assert alg.dim == 7
    assert wm.block_sizes == (2, 1)
    assert len(wm.radical_basis) == 2


def test_build_ut_empty():
    with pytest.raises(EmptyBlockList):
        build_ut()
    with pytest.raises(EmptyBlockList):
        build_ut(0)


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (2, 2), (1, 2, 1), (3, 2)])
def test_build_ut_outputs_verify(blocks):
    alg, wm = build_ut(*blocks)
    assert verify_wm_data(alg, wm).ok
    assert is_gbt(alg, wm)


def test_build_triangular_scalar_case_is_ut2():
    k_alg, k_wm = build_ut(1)
    tri = build_triangular(k_alg, k_wm, k_alg, k_wm, 1,
                           [Matrix([[1]])], [Matrix([[1]])])
    ut2, _ = build_ut(1, 1)
    assert tri.algebra.structure == ut2.structure
    assert tri.algebra.unit == ut2.unit


def test_build_triangular_column_case_is_ut21():
    m2, m2_wm = build_ut(2)
    k, k_wm = build_ut(1)
    # M = K^2 column vectors; matrix units act by matrix multiplication,
    # the scalar on the right acts as the identity
    lact = [Matrix([[1, 0], [0, 0]]), Matrix([[0, 1], [0, 0]]),
            Matrix([[0, 0], [1, 0]]), Matrix([[0, 0], [0, 1]])]
    ract = [Matrix.identity(2)]
    tri = build_triangular(m2, m2_wm, k, k_wm, 2, lact, ract)
    ut21, _ = build_ut(2, 1)
    assert tri.algebra.structure == ut21.structure
    assert tri.algebra.unit == ut21.unit
    assert is_gbt(tri.algebra, tri.wm)


def test_build_triangular_action_law_violation():
    k_alg, k_wm = build_ut(1)
    # right action that is not unital
    with pytest.raises(ActionLawViolation):
        build_triangular(k_alg, k_wm, k_alg, k_wm, 1,
                         [Matrix([[1]])], [Matrix([[2]])])


def test_build_triangular_incompatible_actions():
    m2, m2_wm = build_ut(2)
    # left action of M2 on M = M2 by multiplication; a right action that
    # multiplies on the LEFT breaks (a m) b = a (m b)
    def left_on(m):
        return kron_left(m)

    from commfactor.linalg import kron
    units = [Matrix([[1, 0], [0, 0]]), Matrix([[0, 1], [0, 0]]),
             Matrix([[0, 0], [1, 0]]), Matrix([[0, 0], [0, 1]])]

    def kron_left(u):
        return kron(u, Matrix.identity(2))

    lact = [kron_left(u) for u in units]
    bad_ract = [kron_left(u) for u in units]  # acts on the wrong side
    with pytest.raises(ActionLawViolation):
        build_triangular(m2, m2_wm, m2, m2_wm, 4, lact, bad_ract)


def test_build_triangular_rejects_nonsemisimple():
    ut2, ut2_wm = build_ut(1, 1)
    k, k_wm = build_ut(1)
    with pytest.raises(NotSemisimple):
        build_triangular(ut2, ut2_wm, k, k_wm, 0, None, None)


def test_build_direct_sum():
    k, k_wm = build_ut(1)
    ds = build_direct_sum(k, k_wm, k, k_wm)
    assert ds.algebra.dim == 2
    assert radical(ds.algebra).is_zero
    assert verify_wm_data(ds.algebra, ds.wm).ok
    assert commutator_subspace(ds.algebra).is_zero


# -- commutator span and the quotient ----------------------------------------------

def test_commutator_subspace_m2_is_sl2():
    m2, _ = build_ut(2)
    sl2 = Subspace([bv(m2, "E12"), bv(m2, "E21"),
                    tuple(a - b for a, b in zip(bv(m2, "E11"), bv(m2, "E22")))])
    assert commutator_subspace(m2) == sl2
    assert commutator_subspace(m2).dim == 3


def test_commutator_subspace_example0():
    entry = example0()
    assert commutator_subspace(entry.algebra) == Subspace([entry.algebra.basis_vector(3)])


def test_commutative_algebra_has_zero_span():
    k, k_wm = build_ut(1)
    ds = build_direct_sum(k, k_wm, k, k_wm)
    assert quotient_dim(ds.algebra) == 2


def test_quotient_dims():
    assert quotient_dim(example0().algebra) == 3
    m2, _ = build_ut(2)
    assert quotient_dim(m2) == 1
    alg21, _ = build_ut(2, 1)
    assert quotient_dim(alg21) == 2


@pytest.mark.parametrize("blocks", [(1, 1), (2, 1), (2, 2), (1, 2, 1)])
def test_quotient_dim_equals_block_count_on_gbt(blocks):
    alg, wm = build_ut(*blocks)
    assert quotient_dim(alg) == wm.r


def test_quotient_dim_bound_on_gallery():
    for entry in (example0(), m2_dual()):
        assert quotient_dim(entry.algebra) >= entry.wm.r


def test_peirce_elements_are_commutators_with_idempotent():
    # e_i a e_j = [e_i a e_j, e_j] for i != j and a in the radical
    rng = random.Random(11)
    for blocks in [(1, 1), (2, 1), (2, 2, 1)]:
        alg, wm = build_ut(*blocks)
        for _ in range(5):
            a = rand_radical_element(rng, alg, wm)
            for i in range(wm.r):
                for j in range(wm.r):
                    if i == j:
                        continue
                    ei, ej = wm.idempotent(i), wm.idempotent(j)
                    part = alg.mul(alg.mul(ei, a), ej)
                    assert commutator(alg, part, ej) == part
