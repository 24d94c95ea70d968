import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from syzygy.exactlinalg import (DENSE_CUTOFF, PrimeField, SparseMatrix, kernel_dim, rank,
                                random_primes, row_echelon)


def brute_kernel_size(rows, p):
    """Count solutions of A x = 0 over F_p by enumeration."""
    a = np.asarray(rows, dtype=np.int64).reshape(len(rows), -1)
    n = a.shape[1]
    count = 0
    for x in itertools.product(range(p), repeat=n):
        if not (a @ np.array(x, dtype=np.int64) % p).any():
            count += 1
    return count


small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=0, max_size=5))


@pytest.mark.parametrize("dense", [True, False])
def test_rank_examples(dense):
    assert rank(SparseMatrix.identity(3), dense=dense) == 3
    assert rank(SparseMatrix.zeros(5, 7), dense=dense) == 0
    assert rank(SparseMatrix.from_dense([[1, 2, 3], [2, 4, 6]], p=7), dense=dense) == 1


@pytest.mark.parametrize("dense", [True, False])
def test_kernel_dim_examples(dense):
    assert kernel_dim(SparseMatrix.identity(3), dense=dense) == 0
    assert kernel_dim(SparseMatrix.zeros(2, 5), dense=dense) == 5
    assert kernel_dim(SparseMatrix.from_dense([[1, 2, 3], [2, 4, 6]], p=7), dense=dense) == 2


@pytest.mark.parametrize("dense", [True, False])
def test_row_echelon_examples(dense):
    ident = SparseMatrix.identity(3)
    ech, piv = row_echelon(ident, dense=dense)
    assert ech == ident and piv == [0, 1, 2]

    ech, piv = row_echelon(SparseMatrix.zeros(3, 4), dense=dense)
    assert ech.is_zero() and piv == []

    ech, piv = row_echelon(SparseMatrix.from_dense([[0, 1], [1, 0]]), dense=dense)
    assert ech.to_dense().tolist() == [[1, 0], [0, 1]] and piv == [0, 1]


def test_matrix_validation():
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((0, 0, 1), (0, 0, 2)), 7)
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((2, 0, 1),), 7)
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((0, 0, 7),), 7)
    with pytest.raises(ValueError):
        PrimeField(32004)
    assert PrimeField(7).inv(3) == 5


def test_from_triples_sums_and_drops():
    m = SparseMatrix.from_triples(2, 2, [(0, 0, 3), (0, 0, 4), (1, 1, 2)], p=7)
    assert m.entries == ((1, 1, 2),)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_against_enumeration(rows):
    if not rows:
        return
    p = 5
    m = SparseMatrix.from_dense(rows, p)
    size = brute_kernel_size(rows, p)
    assert p ** kernel_dim(m, dense=False) == size
    assert p ** kernel_dim(m, dense=True) == size


def random_matrix(rng, nrows, ncols, p, density=0.3):
    a = rng.integers(0, p, size=(nrows, ncols))
    a[rng.random((nrows, ncols)) > density] = 0
    return SparseMatrix.from_dense(a, p)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.integers(1, 12),
       st.sampled_from([2, 3, 7, 32003]))
def test_rank_properties(seed, nrows, ncols, p):
    rng = np.random.default_rng(seed)
    m = random_matrix(rng, nrows, ncols, p)
    r = rank(m)
    assert r <= min(nrows, ncols)
    assert r == rank(m.transpose())
    ech, piv = row_echelon(m)
    assert len(piv) == r
    assert piv == sorted(set(piv))
    assert row_echelon(ech) == (ech, piv)
    # sparse and dense routes give the identical reduced form
    assert row_echelon(m, dense=True) == row_echelon(m, dense=False)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8), st.integers(1, 8), st.integers(1, 8))
def test_rank_of_product(seed, a, b, c):
    rng = np.random.default_rng(seed)
    p = 101
    A = random_matrix(rng, a, b, p, 0.6)
    B = random_matrix(rng, b, c, p, 0.6)
    AB = A @ B
    assert np.array_equal(AB.to_dense(), A.to_dense() @ B.to_dense() % p)
    assert rank(AB) <= min(rank(A), rank(B))


def test_large_sparse_matches_dense():
    rng = np.random.default_rng(3)
    p = 32003
    # low rank by construction: 300x40 times 40x280
    A = random_matrix(rng, DENSE_CUTOFF + 44, 40, p, 0.2)
    B = random_matrix(rng, 40, DENSE_CUTOFF + 24, p, 0.2)
    M = A @ B
    assert rank(M) == rank(M, dense=True) == rank(M.transpose(), dense=False)
    assert rank(M) <= 40


def test_random_primes_reproducible():
    a = random_primes(4, seed=11)
    assert a == random_primes(4, seed=11)
    assert len(set(a)) == 4 and all(10_000 < x < 2**16 for x in a)
    assert 32003 not in random_primes(5, seed=1, exclude=[32003])
