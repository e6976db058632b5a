import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookspecht.linalg import (
    RATIONALS,
    DimensionError,
    Field,
    SparseMatrix,
    Subspace,
    coordinate_subspace,
    map_image_kernel,
    rank,
    rref_span,
    spin,
    vector,
)
from oracles import dense_rank

F5 = Field(5)


def test_field_parse_and_arithmetic():
    assert Field.parse("rational") == RATIONALS
    assert Field.parse("fp:7").p == 7
    with pytest.raises(ValueError):
        Field.parse("fp:9")
    with pytest.raises(ValueError):
        Field.parse("reals")
    assert F5.inv(F5(2)) == 3
    assert F5(-1) == 4
    assert RATIONALS.inv(Fraction(3, 4)) == Fraction(4, 3)
    assert F5(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_rationals_are_reduced():
    x = RATIONALS(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)


def test_vector_drops_zeros():
    assert vector([0, 1, 0, -2]) == {1: 1, 3: -2}
    assert vector([5, 10, 3], F5) == {2: 3}


def test_empty_span():
    S = rref_span([], 5)
    assert S.dim == 0 and S.ambient_dim == 5


def test_spanning_set_of_plane():
    S = rref_span([vector([1, 0]), vector([1, 1])], 2)
    assert S.dim == 2
    assert S.basis == [{0: 1}, {1: 1}]
    assert S.pivots == [0, 1]


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        rref_span([{7: 1}], 5)
    with pytest.raises(DimensionError):
        SparseMatrix(2, 2, [{3: 1}, {}])


def _echelon_ok(S: Subspace):
    assert S.pivots == sorted(set(S.pivots))
    for p, b in zip(S.pivots, S.basis):
        assert b and min(b) == p and b[p] == S.field.one
        for q, c in zip(S.pivots, S.basis):
            if c is not b:
                assert p not in c


def test_random_rank_matches_dense_oracle_over_f5():
    rng = random.Random(1)
    for _ in range(50):
        rows = [[rng.randrange(5) for _ in range(6)] for _ in range(10)]
        S = rref_span([vector(r, F5) for r in rows], 6, F5)
        assert S.dim == dense_rank(rows, 5)
        _echelon_ok(S)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), max_size=8))
def test_rank_matches_dense_oracle_over_q(rows):
    S = rref_span([vector(r) for r in rows], 5)
    assert S.dim == dense_rank(rows)
    _echelon_ok(S)
    # idempotent and canonical
    assert rref_span(S.basis, 5) == S
    assert rref_span(list(reversed([vector(r) for r in rows])), 5) == S


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=6),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_membership(rows, extra):
    S = rref_span([vector(r) for r in rows], 4)
    T = rref_span([vector(r) for r in rows + [extra]], 4)
    assert S.contains(vector(extra)) == (T.dim == S.dim)


def test_spin_of_zero_vector():
    G = SparseMatrix.identity(3)
    assert spin([{}], [G]).dim == 0


def test_spin_closure_cyclic_shift():
    shift = SparseMatrix(4, 4, [{1: 1}, {2: 1}, {3: 1}, {}])
    S = spin([{0: 1}], [shift])
    assert S.dim == 4
    S = spin([{2: 1}], [shift])
    assert S == coordinate_subspace([2, 3], 4)
    for b in S.basis:
        assert S.contains(shift.apply(b))


def test_spin_rejects_bad_generators():
    with pytest.raises(DimensionError):
        spin([{0: 1}], [SparseMatrix(3, 2)], ambient_dim=3)


def test_map_image_kernel_trivial():
    im, ker = map_image_kernel(SparseMatrix.zero(4, 6))
    assert (im.dim, ker.dim) == (0, 6)
    im, ker = map_image_kernel(SparseMatrix.identity(5))
    assert (im.dim, ker.dim) == (5, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.randoms(use_true_random=False))
def test_rank_nullity_and_kernel(nrows, ncols, rng):
    dense = [[rng.randrange(-2, 3) for _ in range(ncols)] for _ in range(nrows)]
    M = SparseMatrix.from_dense(dense)
    im, ker = map_image_kernel(M)
    assert im.dim + ker.dim == ncols
    assert im.dim == dense_rank(dense)
    for z in ker.basis:
        assert M.apply(z) == {}


def test_matrix_product_and_transpose():
    A = SparseMatrix.from_dense([[1, 2], [0, 1]])
    B = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (A @ B).to_dense() == [[2, 1], [1, 0]]
    assert A.transpose().to_dense() == [[1, 0], [2, 1]]
    assert (A - A) == SparseMatrix.zero(2, 2)
    assert rank(A) == 2
    with pytest.raises(DimensionError):
        A @ SparseMatrix.zero(3, 3)


def test_intersection_and_sum():
    U = coordinate_subspace([0, 1], 4)
    V = rref_span([{1: 1, 2: 1}, {0: 1}], 4)
    I = U.intersection(V)
    assert I == coordinate_subspace([0], 4)
    assert (U + V).dim == 3
    assert I <= U and I <= V and I < U


def test_monomial_detection():
    assert SparseMatrix(2, 2, [{1: -1}, {0: 1}]).is_monomial()
    assert not SparseMatrix(2, 2, [{1: 1}, {1: 1}]).is_monomial()
