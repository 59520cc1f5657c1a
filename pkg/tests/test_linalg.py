from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkhilbert.prolong.linalg import (
    LinearMap,
    bareiss_reduce,
    block_diag,
    hstack,
    kron,
    vstack,
)


def rref_rank(rows):
    """Textbook Gauss-Jordan over Fraction; the oracle for rank."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


small = st.integers(-3, 3)
sparse_entry = st.one_of(st.just(0), st.just(0), small)


@st.composite
def matrices(draw, max_dim=7):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return [[draw(sparse_entry) for _ in range(c)] for _ in range(r)]


@given(matrices())
@settings(max_examples=200)
def test_rank_and_kernel_against_rref(rows):
    A = LinearMap.from_dense(rows)
    rk = rref_rank(rows)
    assert A.rank() == rk
    K = A.kernel()
    assert K.dim == A.cols - rk
    assert (A @ K.matrix).is_zero()
    # kernel vectors are independent and integral
    assert K.matrix.rank() == K.dim
    assert all(isinstance(v, int) for _, _, v in K.matrix.entries())


@given(matrices(6))
@settings(max_examples=200)
def test_partial_inverse_property(rows):
    A = LinearMap.from_dense(rows)
    S = A.partial_inverse()
    assert S.shape == (A.cols, A.rows)
    assert A @ S @ A == A


@given(matrices(5), matrices(5))
@settings(max_examples=50)
def test_kron_matches_dense(a, b):
    A, B = LinearMap.from_dense(a), LinearMap.from_dense(b)
    K = kron(A, B).to_dense()
    for i in range(A.rows):
        for k in range(B.rows):
            for j in range(A.cols):
                for l in range(B.cols):
                    assert K[i * B.rows + k][j * B.cols + l] == a[i][j] * b[k][l]
    assert kron(A, B).rank() == A.rank() * B.rank()


def test_bareiss_determinant():
    pivots, det = bareiss_reduce([[2, 1], [1, 3]])
    assert pivots == [0, 1]
    assert abs(det) == 5


def test_rational_entries():
    A = LinearMap.from_dense([[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]])
    assert A.rank() == 1
    K = A.kernel()
    assert K.dim == 1
    assert (A @ K.matrix).is_zero()


def test_block_helpers():
    A = LinearMap.from_dense([[1, 2], [3, 4]])
    I = LinearMap.identity(2)
    assert hstack([A, I]).shape == (2, 4)
    assert vstack([A, I]).shape == (4, 2)
    D = block_diag([A, I])
    assert D.to_dense() == [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert D.block(range(0, 2), range(0, 2)) == A
    assert A.T.to_dense() == [[1, 3], [2, 4]]
    assert (A - A).is_zero()
    assert A.apply({0: 1, 1: 1}) == {0: 3, 1: 7}


def test_empty_and_zero_maps():
    Z = LinearMap.zeros(3, 4)
    assert Z.rank() == 0
    assert Z.kernel().dim == 4
    assert (Z @ Z.partial_inverse()).is_zero()


def test_shape_mismatch():
    with pytest.raises(ValueError):
        LinearMap.identity(2) @ LinearMap.identity(3)


def test_subspace_contains():
    K = LinearMap.from_dense([[1, 1, 0]]).kernel()
    assert K.contains({0: 1, 1: -1})
    assert K.contains({2: 5})
    assert not K.contains({0: 1})
