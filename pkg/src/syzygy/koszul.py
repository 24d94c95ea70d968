"""Koszul complexes of graded rings and their cohomology dimensions.

For ``V = R_1`` the differential

    δ: ∧^p V ⊗ R_q → ∧^{p-1} V ⊗ R_{q+1}
    e_{i1}∧…∧e_{ip} ⊗ f ↦ Σ_j (-1)^{j-1} e_{i1}∧…ê_{ij}…∧e_{ip} ⊗ x_{ij}·f

is assembled in the fixed bases (wedge tuples in lex order, tensor basis
row-major) and ``dim K_{p,q} = dim ker δ_{p,q} - rank δ_{p+1,q-1}``.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable

from syzygy.exactlinalg import SparseMatrix, kernel_dim, rank
from syzygy.polyring import GradedRingPresentation

DEFAULT_ENTRY_BUDGET = 50_000_000


class ResourceLimit(Exception):
    """A differential would exceed the configured entry budget."""


class MissingEntry(KeyError):
    pass


class BadPrime(Exception):
    """Betti tables computed at different primes disagree."""


@lru_cache(maxsize=None)
def wedge_basis(v_dim: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing ``p``-tuples of ``range(v_dim)`` in lex order."""
    if p < 0:
        return ()
    return tuple(combinations(range(v_dim), p))


@lru_cache(maxsize=None)
def _wedge_index(v_dim: int, p: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(wedge_basis(v_dim, p))}


def differential_shape(R: GradedRingPresentation, p: int, q: int) -> tuple[int, int]:
    v = R.dim(1)
    ncols = comb(v, p) * R.dim(q) if p >= 0 else 0
    nrows = comb(v, p - 1) * R.dim(q + 1) if p >= 1 else 0
    return nrows, ncols


def koszul_differential(R: GradedRingPresentation, p: int, q: int,
                        entry_budget: int | None = None) -> SparseMatrix:
    """Matrix of ``δ: ∧^p V ⊗ R_q → ∧^{p-1} V ⊗ R_{q+1}``."""
    nrows, ncols = differential_shape(R, p, q)
    if entry_budget is not None and nrows * ncols > entry_budget:
        raise ResourceLimit(f"δ_{{{p},{q}}} is {nrows}x{ncols}, budget {entry_budget}")
    if nrows == 0 or ncols == 0:
        return SparseMatrix.zeros(nrows, ncols, R.p)

    v = R.dim(1)
    src_dim, dst_dim = R.dim(q), R.dim(q + 1)
    cols_of = []
    for mat in R.multiplication_maps(q):
        per_col: list[list[tuple[int, int]]] = [[] for _ in range(src_dim)]
        for t, s, a in mat.entries:
            per_col[s].append((t, a))
        cols_of.append(per_col)

    target = _wedge_index(v, p - 1)
    P = R.p
    entries = []
    for ci, tup in enumerate(wedge_basis(v, p)):
        faces = []
        for j, i in enumerate(tup):
            sign = 1 if j % 2 == 0 else -1
            faces.append((i, sign, target[tup[:j] + tup[j + 1:]] * dst_dim))
        base = ci * src_dim
        for s in range(src_dim):
            col = base + s
            for i, sign, row0 in faces:
                for t, a in cols_of[i][s]:
                    entries.append((row0 + t, col, a if sign > 0 else P - a))
    entries.sort()
    return SparseMatrix(nrows, ncols, tuple(entries), P)


class _RankCache:
    def __init__(self, R, entry_budget):
        self.R = R
        self.budget = entry_budget
        self._ranks: dict[tuple[int, int], int] = {}

    def rank(self, p: int, q: int) -> int:
        if p < 1 or q < 0:
            return 0
        key = (p, q)
        if key not in self._ranks:
            self._ranks[key] = rank(koszul_differential(self.R, p, q, self.budget))
        return self._ranks[key]

    def koszul_dim(self, p: int, q: int) -> int:
        if p < 0 or q < 0:
            return 0
        ncols = comb(self.R.dim(1), p) * self.R.dim(q)
        return ncols - self.rank(p, q) - self.rank(p + 1, q - 1)


def koszul_dim(R: GradedRingPresentation, p: int, q: int,
               entry_budget: int | None = DEFAULT_ENTRY_BUDGET) -> int:
    """``dim K_{p,q}`` over F_p; zero for negative ``p`` or ``q``."""
    if p < 0 or q < 0:
        return 0
    ker = kernel_dim(koszul_differential(R, p, q, entry_budget))
    im = rank(koszul_differential(R, p + 1, q - 1, entry_budget)) if q >= 1 else 0
    return ker - im


@dataclass
class BettiTable:
    entries: dict[tuple[int, int], int]
    variety: str = ""
    prime: int = 0
    seed: int = 0
    g: int | None = None

    def __getitem__(self, pq: tuple[int, int]) -> int:
        try:
            return self.entries[pq]
        except KeyError:
            raise MissingEntry(pq) from None

    def get(self, p: int, q: int, default=None):
        return self.entries.get((p, q), default)

    @property
    def max_p(self) -> int:
        return max((p for p, _ in self.entries), default=-1)

    @property
    def max_q(self) -> int:
        return max((q for _, q in self.entries), default=-1)

    def row(self, q: int) -> list[int]:
        return [self.entries[(p, q)] for p in range(self.max_p + 1)]

    def same_dims(self, other: BettiTable) -> bool:
        return self.entries == other.entries

    def to_json(self) -> str:
        rows = [[p, q, d] for (p, q), d in sorted(self.entries.items(), key=lambda t: (t[0][1], t[0][0]))]
        return json.dumps({"variety": self.variety, "prime": self.prime,
                           "seed": self.seed, "entries": rows})

    @classmethod
    def from_json(cls, text: str) -> BettiTable:
        d = json.loads(text)
        return cls({(p, q): dim for p, q, dim in d["entries"]},
                   d["variety"], d["prime"], d["seed"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "q", "dim"])
        for (p, q), d in sorted(self.entries.items(), key=lambda t: (t[0][1], t[0][0])):
            w.writerow([p, q, d])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, variety: str = "", prime: int = 0, seed: int = 0) -> BettiTable:
        rows = csv.DictReader(io.StringIO(text))
        return cls({(int(r["p"]), int(r["q"])): int(r["dim"]) for r in rows},
                   variety, prime, seed)

    def pretty(self) -> str:
        ps = range(self.max_p + 1)
        width = max([len(str(d)) for d in self.entries.values()] + [len(str(self.max_p)), 1])
        lines = [f"{self.variety}  (p={self.prime}, seed={self.seed})",
                 "q\\p " + " ".join(str(p).rjust(width) for p in ps)]
        for q in range(self.max_q + 1):
            cells = []
            for p in ps:
                d = self.entries.get((p, q))
                cells.append(("." if d == 0 else "?" if d is None else str(d)).rjust(width))
            lines.append(f"{q:<3} " + " ".join(cells))
        return "\n".join(lines)


def betti_table(R: GradedRingPresentation, max_p: int, max_q: int, *,
                entry_budget: int | None = DEFAULT_ENTRY_BUDGET,
                variety: str | None = None, seed: int = 0, g: int | None = None) -> BettiTable:
    """Dims of ``K_{p,q}`` for ``0 <= p <= max_p``, ``0 <= q <= max_q``."""
    cache = _RankCache(R, entry_budget)
    entries = {}
    for q in range(max_q + 1):
        for p in range(max_p + 1):
            entries[(p, q)] = cache.koszul_dim(p, q)
    return BettiTable(entries, variety if variety is not None else R.name, R.p, seed, g)


def complex_check(R: GradedRingPresentation, p: int, q: int) -> bool:
    """True when ``δ_{p-1,q+1} ∘ δ_{p,q}`` is the zero matrix."""
    first = koszul_differential(R, p, q)
    second = koszul_differential(R, p - 1, q + 1)
    return (second @ first).is_zero()


def duality_check(t: BettiTable, g: int) -> list[tuple[int, int, int, bool]]:
    """Compare ``dim K_{p,2}`` with ``dim K_{g-p-2,1}`` for ``0 <= p <= g-2``."""
    out = []
    for p in range(g - 1):
        a, b = t[(p, 2)], t[(g - p - 2, 1)]
        out.append((p, a, b, a == b))
    return out


def prime_stable_table(factory: Callable[[int], GradedRingPresentation], primes: list[int],
                       max_p: int, max_q: int, **kwargs) -> BettiTable:
    """Betti table that agrees at two primes.

    Tables at ``primes[0]`` and ``primes[1]`` must match; on a mismatch a
    third prime arbitrates.  Raises :class:`BadPrime` when no two agree.
    """
    if len(primes) < 2:
        raise ValueError("need at least two primes")
    tables = []
    for p in primes[:2]:
        tables.append(betti_table(factory(p), max_p, max_q, **kwargs))
    if tables[0].same_dims(tables[1]):
        return tables[0]
    if len(primes) < 3:
        raise BadPrime(f"tables differ at primes {primes[0]} and {primes[1]}")
    third = betti_table(factory(primes[2]), max_p, max_q, **kwargs)
    for t in tables:
        if t.same_dims(third):
            return third
    raise BadPrime(f"tables differ at primes {primes[:3]}")


# exterior-algebra contraction identity

def koszul_split(alpha: dict[tuple[int, ...], int]) -> dict[tuple[int, tuple[int, ...]], int]:
    """``δ: ∧^l V → V ⊗ ∧^{l-1} V`` on integer coefficient vectors."""
    out: dict[tuple[int, tuple[int, ...]], int] = {}
    for tup, c in alpha.items():
        for j, i in enumerate(tup):
            key = (i, tup[:j] + tup[j + 1:])
            out[key] = out.get(key, 0) + (c if j % 2 == 0 else -c)
    return {k: v for k, v in out.items() if v}


def wedge_product(tensor: dict[tuple[int, tuple[int, ...]], int]) -> dict[tuple[int, ...], int]:
    """``V ⊗ ∧^{l-1} V → ∧^l V``, ``v ⊗ w ↦ v ∧ w``."""
    out: dict[tuple[int, ...], int] = {}
    for (i, rest), c in tensor.items():
        if i in rest:
            continue
        pos = sum(1 for r in rest if r < i)
        key = rest[:pos] + (i,) + rest[pos:]
        out[key] = out.get(key, 0) + (c if pos % 2 == 0 else -c)
    return {k: v for k, v in out.items() if v}


def contraction_scalar(alpha: dict[tuple[int, ...], int]) -> int | None:
    """Scalar ``c`` with ``wedge(δ(α)) = c·α``, or None if not proportional."""
    image = wedge_product(koszul_split(alpha))
    nz = {k: v for k, v in alpha.items() if v}
    if not nz:
        return None
    if set(image) != set(nz):
        return None
    k0 = next(iter(nz))
    if image[k0] % nz[k0]:
        return None
    c = image[k0] // nz[k0]
    return c if all(image[k] == c * v for k, v in nz.items()) else None


def wedge_contraction_check(v_dim: int, l: int, trials: int, seed: int = 0) -> bool:
    """Check ``∧∘δ = ±l·Id`` on ``trials`` random vectors of ``∧^l V``."""
    if not 1 <= l <= v_dim:
        raise ValueError("need 1 <= l <= v_dim")
    rng = random.Random(seed)
    basis = wedge_basis(v_dim, l)
    signs = set()
    for _ in range(trials):
        alpha = {}
        while not alpha:
            alpha = {t: c for t in basis if (c := rng.randint(-50, 50))}
        c = contraction_scalar(alpha)
        if c is None or abs(c) != l:
            return False
        signs.add(c)
    return len(signs) <= 1
