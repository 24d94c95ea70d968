"""Exact linear algebra over prime fields.

Matrices are stored sparsely as (row, col, value) triples with values
reduced into ``[1, p)``.  Elimination runs on dict-of-rows for large
matrices and on dense numpy arrays below :data:`DENSE_CUTOFF`; both paths
produce the same reduced row echelon form (which is unique).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from sympy import isprime, nextprime

DEFAULT_PRIME = 32003
DENSE_CUTOFF = 256

# products of two residues must fit in int64 with room for accumulation
MAX_PRIME = 2**31 - 1


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not (2 <= self.p <= MAX_PRIME) or not isprime(self.p):
            raise ValueError(f"modulus {self.p} is not a word-sized prime")

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def __call__(self, a: int) -> int:
        return a % self.p


def random_primes(count: int, seed: int = 0, lo: int = 10_000, hi: int = 2**16,
                  exclude: Iterable[int] = ()) -> list[int]:
    """``count`` distinct primes in ``(lo, hi)``, reproducible from ``seed``."""
    rng = random.Random(f"primes:{seed}")
    out: list[int] = []
    banned = set(exclude)
    while len(out) < count:
        cand = nextprime(rng.randrange(lo, hi))
        if cand < hi and cand not in banned and cand not in out:
            out.append(cand)
    return out


@dataclass(frozen=True)
class SparseMatrix:
    """Matrix over F_p given by its nonzero entries.

    ``entries`` is a tuple of ``(row, col, value)`` with no repeated
    positions and every value in ``[1, p)``.
    """

    nrows: int
    ncols: int
    entries: tuple[tuple[int, int, int], ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ValueError(f"entry ({r}, {c}) out of range")
            if not 0 < v < self.p:
                raise ValueError(f"entry ({r}, {c}) = {v} not a nonzero residue")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))

    @classmethod
    def from_triples(cls, nrows: int, ncols: int,
                     triples: Iterable[tuple[int, int, int]],
                     p: int = DEFAULT_PRIME) -> SparseMatrix:
        """Build a matrix, summing repeated positions and dropping zeros."""
        acc: dict[tuple[int, int], int] = {}
        for r, c, v in triples:
            acc[(r, c)] = (acc.get((r, c), 0) + v) % p
        entries = tuple(sorted((r, c, v) for (r, c), v in acc.items() if v))
        return cls(nrows, ncols, entries, p)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]] | np.ndarray,
                   p: int = DEFAULT_PRIME) -> SparseMatrix:
        a = np.asarray(rows, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        a = a % p
        rr, cc = np.nonzero(a)
        entries = tuple((int(r), int(c), int(a[r, c])) for r, c in zip(rr, cc))
        return cls(a.shape[0], a.shape[1], entries, p)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int = DEFAULT_PRIME) -> SparseMatrix:
        return cls(nrows, ncols, (), p)

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> SparseMatrix:
        return cls(n, n, tuple((i, i, 1) for i in range(n)), p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for r, c, v in self.entries:
            a[r, c] = v
        return a

    def rows(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.nrows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.ncols, self.nrows,
                            tuple(sorted((c, r, v) for r, c, v in self.entries)),
                            self.p)

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.p != other.p:
            raise ValueError("matrices over different fields")
        p = self.p
        right = other.rows()
        acc: dict[tuple[int, int], int] = {}
        for r, k, v in self.entries:
            for c, w in right[k].items():
                acc[(r, c)] = (acc.get((r, c), 0) + v * w) % p
        entries = tuple(sorted((r, c, v) for (r, c), v in acc.items() if v))
        return SparseMatrix(self.nrows, other.ncols, entries, p)


def _sparse_echelon(rows: list[dict[int, int]], p: int) -> list[tuple[int, dict[int, int]]]:
    """Forward elimination; returns (pivot column, row) pairs by column.

    Pivot rule: leftmost nonzero column first; among the rows whose
    leading entry sits in that column, the one with fewest entries.
    """
    buckets: dict[int, list[dict[int, int]]] = {}
    heap: list[int] = []
    for row in rows:
        if row:
            lead = min(row)
            if lead not in buckets:
                buckets[lead] = []
                heapq.heappush(heap, lead)
            buckets[lead].append(row)

    pivots: list[tuple[int, dict[int, int]]] = []
    while heap:
        col = heapq.heappop(heap)
        bucket = buckets.pop(col)
        k = min(range(len(bucket)), key=lambda i: len(bucket[i]))
        piv = bucket[k]
        inv = pow(piv[col], -1, p)
        piv = {c: v * inv % p for c, v in piv.items()}
        pivots.append((col, piv))
        for i, row in enumerate(bucket):
            if i == k:
                continue
            f = row[col]
            new = dict(row)
            for c, v in piv.items():
                w = (new.get(c, 0) - f * v) % p
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if new:
                lead = min(new)
                if lead not in buckets:
                    buckets[lead] = []
                    heapq.heappush(heap, lead)
                buckets[lead].append(new)
    return pivots


def _sparse_rref(m: SparseMatrix) -> tuple[list[dict[int, int]], list[int]]:
    p = m.p
    pivots = _sparse_echelon(m.rows(), p)
    cols = [c for c, _ in pivots]
    reduced = [row for _, row in pivots]
    # back substitution, last pivot first
    for i in range(len(reduced) - 1, -1, -1):
        col, piv = cols[i], reduced[i]
        for j in range(i):
            row = reduced[j]
            f = row.get(col)
            if not f:
                continue
            for c, v in piv.items():
                w = (row.get(c, 0) - f * v) % p
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
    return reduced, cols


def _dense_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy() % p
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _use_dense(m: SparseMatrix) -> bool:
    return m.nrows < DENSE_CUTOFF and m.ncols < DENSE_CUTOFF


def row_echelon(m: SparseMatrix, *, dense: bool | None = None) -> tuple[SparseMatrix, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns.

    The echelon matrix has exactly ``rank(m)`` rows, each with a 1 in its
    pivot column and zeros in every other pivot column.
    """
    if dense is None:
        dense = _use_dense(m)
    if dense:
        red, cols = _dense_rref(m.to_dense(), m.p)
        out = SparseMatrix.from_dense(red, m.p) if red.size else SparseMatrix.zeros(0, m.ncols, m.p)
        return SparseMatrix(len(cols), m.ncols, out.entries, m.p), cols
    reduced, cols = _sparse_rref(m)
    entries = tuple((i, c, v) for i, row in enumerate(reduced) for c, v in sorted(row.items()))
    return SparseMatrix(len(cols), m.ncols, entries, m.p), cols


def rank(m: SparseMatrix, *, dense: bool | None = None) -> int:
    if not m.entries:
        return 0
    if dense is None:
        dense = _use_dense(m)
    if dense:
        return len(_dense_rref(m.to_dense(), m.p)[1])
    # eliminate along the shorter side
    if m.nrows > m.ncols:
        m = m.transpose()
    return len(_sparse_echelon(m.rows(), m.p))


def kernel_dim(m: SparseMatrix, *, dense: bool | None = None) -> int:
    """Dimension of the (right) null space, ``ncols - rank``."""
    return m.ncols - rank(m, dense=dense)
