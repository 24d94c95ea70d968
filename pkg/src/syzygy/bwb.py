"""Borel-Weil-Bott on Grassmannians.

A weight ``mu = (mu_1 >= ... >= mu_r)`` stands for the bundle
``Σ^mu S*`` on ``G(r, n)``, with ``S`` the rank-``r`` tautological
subbundle.  So the Plücker line bundle is ``mu = (1, ..., 1)`` and
``L^{-q} ⊗ Sym^{q'} S*`` on ``G(2, k+2)`` is ``mu = (q' - q, -q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class GrassmannWeight:
    r: int
    n: int
    mu: tuple[int, ...]

    def __post_init__(self):
        if not 0 < self.r < self.n:
            raise ValueError(f"need 0 < r < n, got r={self.r}, n={self.n}")
        if len(self.mu) != self.r:
            raise ValueError(f"weight {self.mu} does not have length r={self.r}")
        if any(a < b for a, b in zip(self.mu, self.mu[1:])):
            raise ValueError(f"weight {self.mu} is not weakly decreasing")

    @property
    def dim_grassmannian(self) -> int:
        return self.r * (self.n - self.r)


@dataclass(frozen=True)
class CohomologyResult:
    nonzero_degree: int | None
    dimension: int

    def h(self, p: int) -> int:
        return self.dimension if p == self.nonzero_degree else 0


def weyl_dimension(lam: Sequence[int]) -> int:
    """Dimension of the GL_n irreducible with dominant weight ``lam``."""
    n = len(lam)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def bott(w: GrassmannWeight) -> CohomologyResult:
    """Cohomology of ``Σ^mu S*`` on ``G(r, n)``.

    Pad ``mu`` with zeros to length ``n``, add ``ρ = (n-1, ..., 0)``.  A
    repeated entry means all cohomology vanishes; otherwise the only nonzero
    group sits in degree equal to the number of inversions, with dimension
    the Weyl dimension of ``sort(w + ρ) - ρ``.
    """
    n = w.n
    shifted = [a + n - 1 - i for i, a in enumerate(tuple(w.mu) + (0,) * (n - w.r))]
    if len(set(shifted)) < n:
        return CohomologyResult(None, 0)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    srt = sorted(shifted, reverse=True)
    lam = [a - (n - 1 - i) for i, a in enumerate(srt)]
    return CohomologyResult(inversions, weyl_dimension(lam))


def appendix_weight(k: int, q: int, qq: int) -> GrassmannWeight:
    """Weight of ``L^{-q} ⊗ Sym^{qq} S*`` on ``G(2, k+2)``."""
    return GrassmannWeight(2, k + 2, (qq - q, -q))


def serre_dual_weight(w: GrassmannWeight) -> GrassmannWeight:
    """Weight of ``(Σ^mu S*)^* ⊗ K`` where ``K = O(-n)``."""
    return GrassmannWeight(w.r, w.n, tuple(-a - w.n for a in reversed(w.mu)))


class AppendixViolation(AssertionError):
    pass


@dataclass(frozen=True)
class AppendixRow:
    k: int
    q: int
    qq: int
    degree: int | None
    dimension: int


def verify_appendix(k_max: int) -> list[AppendixRow]:
    """Sweep ``1 <= k <= k_max``, ``1 <= q, q' <= 2k+2`` and check the vanishing pattern.

    For ``L^{-q} ⊗ Sym^{q'} S*`` on ``G(2, k+2)``: cohomology lives only in
    degrees ``k`` and ``2k``; degree ``k`` vanishes when ``q' - q + 1 < 0``;
    degree ``2k`` vanishes when ``q' - q >= -k - 1``.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for k in range(1, k_max + 1):
        for q in range(1, 2 * k + 3):
            for qq in range(1, 2 * k + 3):
                res = bott(appendix_weight(k, q, qq))
                where = f"(k={k}, q={q}, q'={qq}): degree {res.nonzero_degree}, dim {res.dimension}"
                if res.dimension:
                    if res.nonzero_degree not in (k, 2 * k):
                        raise AppendixViolation(f"cohomology outside degrees k, 2k at {where}")
                    if res.nonzero_degree == k and -q + qq + 1 < 0:
                        raise AppendixViolation(f"H^k should vanish at {where}")
                    if res.nonzero_degree == 2 * k and -q + qq >= -k - 1:
                        raise AppendixViolation(f"H^2k should vanish at {where}")
                rows.append(AppendixRow(k, q, qq, res.nonzero_degree, res.dimension))
    return rows


def dimension_identity(k: int) -> bool:
    """``C(2k+1, k+1)`` equals ``dim Sym^k`` of a ``(k+2)``-dimensional space."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return comb(2 * k + 1, k + 1) == comb(k + (k + 2) - 1, k)
