"""Homogeneous polynomials over F_p and graded-ring presentations.

A :class:`GradedRingPresentation` computes the graded pieces ``R_q`` of a
section ring either as a quotient of a polynomial ring by homogeneous
generators, or (for plane curves) as degree ``e*q`` forms modulo the
multiples of a single relation.  Each piece carries a standard-monomial
basis together with normal forms for the remaining monomials, which is all
the Koszul code needs.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Union

import numpy as np

from syzygy.exactlinalg import DEFAULT_PRIME, SparseMatrix, row_echelon

Monomial = tuple[int, ...]


class DegenerateSample(Exception):
    """A random draw produced a graded piece of the wrong dimension."""


def grevlex_key(m: Monomial) -> tuple:
    # ascending sort on this key lists a fixed degree largest-first in grevlex
    return (-sum(m),) + tuple(reversed(m))


@lru_cache(maxsize=None)
def monomials_of_degree(n_vars: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``n_vars`` variables, grevlex descending."""
    if d < 0:
        return ()
    if n_vars == 0:
        return ((),) if d == 0 else ()

    def gen(n, d):
        if n == 1:
            yield (d,)
            return
        for a in range(d, -1, -1):
            for rest in gen(n - 1, d - a):
                yield (a,) + rest

    return tuple(sorted(gen(n_vars, d), key=grevlex_key))


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(n_vars, d))}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Poly:
    """Homogeneous polynomial with coefficients reduced mod ``p``."""

    n_vars: int
    terms: Mapping[Monomial, int]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        clean = {m: c % self.p for m, c in self.terms.items() if c % self.p}
        degs = {sum(m) for m in clean}
        if len(degs) > 1:
            raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degs)}")
        if any(len(m) != self.n_vars for m in clean):
            raise ValueError("monomial length does not match n_vars")
        object.__setattr__(self, "terms", clean)

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return sum(next(iter(self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: Poly) -> Poly:
        out: dict[Monomial, int] = {}
        for m, a in self.terms.items():
            for n, b in other.terms.items():
                k = mono_mul(m, n)
                out[k] = (out.get(k, 0) + a * b) % self.p
        return Poly(self.n_vars, out, self.p)

    def times_monomial(self, m: Monomial) -> dict[Monomial, int]:
        return {mono_mul(m, k): c for k, c in self.terms.items()}

    def restrict(self, var: int) -> Poly:
        """Set variable ``var`` to zero and drop it from the ring."""
        terms = {m[:var] + m[var + 1:]: c for m, c in self.terms.items() if m[var] == 0}
        return Poly(self.n_vars - 1, terms, self.p)

    def to_json(self) -> list:
        return [[list(m), c] for m, c in sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]))]


def random_form(n_vars: int, d: int, rng: random.Random, p: int = DEFAULT_PRIME) -> Poly:
    """Dense form of degree ``d`` with coefficients drawn uniformly from F_p."""
    return Poly(n_vars, {m: rng.randrange(p) for m in monomials_of_degree(n_vars, d)}, p)


@dataclass(frozen=True)
class Quotient:
    generators: tuple[Poly, ...]


@dataclass(frozen=True)
class VeroneseQuotient:
    step: int
    relation: Poly


Form = Union[Quotient, VeroneseQuotient]


@dataclass(frozen=True)
class GradedPiece:
    """Basis and reduction data for one graded piece ``R_q``.

    ``normal_forms`` maps every non-standard monomial of the ambient degree
    to its coordinates in ``basis``; standard monomials are their own
    normal form.
    """

    q: int
    ambient_degree: int
    basis: tuple[Monomial, ...]
    index: Mapping[Monomial, int]
    normal_forms: Mapping[Monomial, tuple[tuple[int, int], ...]]
    relation_rank: int

    @property
    def dim(self) -> int:
        return len(self.basis)


class GradedRingPresentation:
    """Graded ring ``R = ⊕ R_q`` presented inside a polynomial ring.

    Args:
        n_vars: number of ambient variables.
        form: :class:`Quotient` or :class:`VeroneseQuotient`.
        p: prime modulus.
        hilbert: expected ``dim R_q``; checked on every computed piece.
        name: identifier carried into Betti tables.
        genus: sectional genus of the polarization, when meaningful.
    """

    def __init__(self, n_vars: int, form: Form, p: int = DEFAULT_PRIME,
                 hilbert: Callable[[int], int] | None = None, name: str = "",
                 genus: int | None = None):
        self.n_vars = n_vars
        self.genus = genus
        self.form = form
        self.p = p
        self.hilbert = hilbert
        self.name = name
        self._pieces: dict[int, GradedPiece] = {}
        self._mult: dict[int, tuple[SparseMatrix, ...]] = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return f"GradedRingPresentation({self.name or self.form.__class__.__name__}, n_vars={self.n_vars}, p={self.p})"

    def ambient_degree(self, q: int) -> int:
        if isinstance(self.form, VeroneseQuotient):
            return self.form.step * q
        return q

    def _relation_rows(self, d: int) -> list[dict[Monomial, int]]:
        if isinstance(self.form, VeroneseQuotient):
            f = self.form.relation
            return [f.times_monomial(m) for m in monomials_of_degree(self.n_vars, d - f.degree)]
        rows = []
        for f in self.form.generators:
            for m in monomials_of_degree(self.n_vars, d - f.degree):
                rows.append(f.times_monomial(m))
        return rows

    def _compute_piece(self, q: int) -> GradedPiece:
        d = self.ambient_degree(q)
        monos = monomials_of_degree(self.n_vars, d)
        idx = monomial_index(self.n_vars, d)
        rows = self._relation_rows(d)
        triples = [(i, idx[m], c) for i, row in enumerate(rows) for m, c in row.items()]
        mat = SparseMatrix.from_triples(len(rows), len(monos), triples, self.p)
        ech, pivots = row_echelon(mat)
        pivset = set(pivots)
        basis = tuple(m for j, m in enumerate(monos) if j not in pivset)
        bidx = {m: i for i, m in enumerate(basis)}
        col_to_basis = {idx[m]: i for m, i in bidx.items()}
        erows = ech.rows()
        normal = {}
        p = self.p
        for r, pc in enumerate(pivots):
            # pivot monomial + sum(a_c * std_c) lies in the relation space
            nf = tuple(sorted((col_to_basis[c], (-v) % p) for c, v in erows[r].items() if c != pc))
            normal[monos[pc]] = nf
        piece = GradedPiece(q, d, basis, bidx, normal, len(pivots))
        if self.hilbert is not None:
            expected = self.hilbert(q)
            if piece.dim != expected:
                raise DegenerateSample(
                    f"{self.name or 'ring'}: dim R_{q} = {piece.dim}, expected {expected}")
        return piece

    def graded_piece(self, q: int) -> GradedPiece:
        if q < 0:
            return GradedPiece(q, -1, (), {}, {}, 0)
        with self._lock:
            if q not in self._pieces:
                self._pieces[q] = self._compute_piece(q)
            return self._pieces[q]

    def dim(self, q: int) -> int:
        return self.graded_piece(q).dim

    def reduce(self, terms: Mapping[Monomial, int], q: int) -> np.ndarray:
        """Coordinates in the basis of ``R_q`` of an ambient form of matching degree."""
        piece = self.graded_piece(q)
        p = self.p
        out = np.zeros(piece.dim, dtype=np.int64)
        for m, c in terms.items():
            c %= p
            if not c:
                continue
            j = piece.index.get(m)
            if j is not None:
                out[j] = (out[j] + c) % p
                continue
            if m not in piece.normal_forms:
                raise ValueError(f"monomial {m} is not of ambient degree {piece.ambient_degree}")
            for j, a in piece.normal_forms[m]:
                out[j] = (out[j] + c * a) % p
        return out

    def lift(self, coords, q: int) -> dict[Monomial, int]:
        piece = self.graded_piece(q)
        return {piece.basis[i]: int(c) % self.p for i, c in enumerate(coords) if int(c) % self.p}

    def multiply_reduce(self, a, q1: int, b, q2: int) -> np.ndarray:
        """Product of ``a ∈ R_{q1}`` and ``b ∈ R_{q2}`` in the basis of ``R_{q1+q2}``."""
        fa, fb = self.lift(a, q1), self.lift(b, q2)
        prod: dict[Monomial, int] = {}
        p = self.p
        for m, x in fa.items():
            for n, y in fb.items():
                k = mono_mul(m, n)
                prod[k] = (prod.get(k, 0) + x * y) % p
        return self.reduce(prod, q1 + q2)

    def multiplication_maps(self, q: int) -> tuple[SparseMatrix, ...]:
        """Matrices of multiplication by each basis element of ``R_1``, ``R_q -> R_{q+1}``."""
        with self._lock:
            if q in self._mult:
                return self._mult[q]
            src = self.graded_piece(q)
            dst = self.graded_piece(q + 1)
            gens = self.graded_piece(1).basis
            maps = []
            for x in gens:
                triples = []
                for s, m in enumerate(src.basis):
                    k = mono_mul(x, m)
                    t = dst.index.get(k)
                    if t is not None:
                        triples.append((t, s, 1))
                    else:
                        triples.extend((t, s, a) for t, a in dst.normal_forms[k])
                maps.append(SparseMatrix.from_triples(dst.dim, src.dim, triples, self.p))
            self._mult[q] = tuple(maps)
            return self._mult[q]

    def hilbert_check(self, max_q: int) -> list[tuple[int, int, int]]:
        """(q, computed, expected) for ``q = 0..max_q``; raises on mismatch."""
        out = []
        for q in range(max_q + 1):
            piece = self.graded_piece(q)
            out.append((q, piece.dim, self.hilbert(q) if self.hilbert else piece.dim))
        return out

