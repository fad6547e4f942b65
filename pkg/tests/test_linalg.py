import numpy as np
import pytest
from hypothesis import given, strategies as st

from syzygy import FieldSpec, linalg

F = FieldSpec(101)
QQ = FieldSpec(0)


def matrices(max_rows=6, max_cols=6, p=101):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(rows=matrices())
def test_rank_is_transpose_invariant(rows):
    A = linalg.asarray(rows, F)
    assert linalg.rank(A, F) == linalg.rank(A.T.copy(), F)


@given(rows=matrices())
def test_rref_spans_same_space(rows):
    A = linalg.asarray(rows, F)
    R, piv = linalg.rref(A, F)
    assert R.shape[0] == len(piv) == linalg.rank(A, F)
    assert linalg.same_row_space(A, R, F)
    for k, j in enumerate(piv):
        assert R[k, j] == 1 and np.count_nonzero(R[:, j]) == 1


@given(rows=matrices())
def test_left_kernel(rows):
    A = linalg.asarray(rows, F)
    K = linalg.left_kernel(A, F)
    assert K.shape[0] == A.shape[0] - linalg.rank(A, F)
    if K.shape[0]:
        assert not np.any(linalg.matmul(K, A, F))
        assert linalg.rank(K, F) == K.shape[0]


@given(rows=matrices(4, 4, p=7))
def test_rational_rank_matches_mod_p_generically(rows):
    # rank over QQ is at least the rank mod p for integer matrices
    Aq = linalg.asarray(rows, QQ)
    A7 = linalg.asarray(rows, FieldSpec(7))
    assert linalg.rank(Aq, QQ) >= linalg.rank(A7, FieldSpec(7))


@given(rows=matrices(), v=st.lists(st.integers(0, 100), min_size=6, max_size=6))
def test_reduce_modulo_kills_row_space(rows, v):
    A = linalg.asarray(rows, F)
    R, piv = linalg.rref(A, F)
    w = linalg.asarray([v[: A.shape[1]]], F)
    r = linalg.reduce_modulo(w, R, piv, F)
    assert all(r[0, j] == 0 for j in piv)
    stacked = np.vstack([A, w])
    assert linalg.rank(stacked, F) == linalg.rank(A, F) + (1 if np.any(r) else 0)


def test_large_prime_products_do_not_overflow():
    G = FieldSpec(32003)
    A = linalg.asarray([[32002] * 40 for _ in range(40)], G, 40)
    A[np.arange(40), np.arange(40)] = 5
    # int64 accumulation of 40 products near p^2 must stay exact
    M = linalg.matmul(A, A, G)
    direct = [[sum(int(A[i, k]) * int(A[k, j]) for k in range(40)) % 32003 for j in range(3)] for i in range(3)]
    assert M[:3, :3].tolist() == direct
