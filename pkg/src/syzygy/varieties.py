"""Graded rings of the test varieties.

Every constructor is a pure function of its parameters, the seed and the
prime: coefficients are drawn from ``random.Random(seed)`` in a fixed
order, so a :class:`VarietySpec` always rebuilds the identical presentation.
Each presentation carries the Riemann-Roch Hilbert function of the variety
it models; a random draw that misses it raises ``DegenerateSample``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, TypeVar

from syzygy.exactlinalg import DEFAULT_PRIME
from syzygy.polyring import (DegenerateSample, GradedRingPresentation, Poly, Quotient,
                             VeroneseQuotient, random_form)

T = TypeVar("T")

K3_TYPES = {
    # name: (number of variables, generator degrees, genus)
    "quartic_P3": (4, (4,), 3),
    "ci23_P4": (5, (2, 3), 4),
    "ci222_P5": (6, (2, 2, 2), 5),
}

# Clifford index of the canonical constructors (g=6 is a plane quintic)
CANONICAL_CLIFFORD = {3: 1, 4: 1, 5: 2, 6: 1}


def rnc_hilbert(n: int) -> Callable[[int], int]:
    return lambda q: n * q + 1


def canonical_hilbert(g: int) -> Callable[[int], int]:
    def h(q):
        if q == 0:
            return 1
        if q == 1:
            return g
        return (2 * q - 1) * (g - 1)
    return h


def k3_hilbert(g: int) -> Callable[[int], int]:
    return lambda q: 1 if q == 0 else q * q * (g - 1) + 2


def rational_normal_curve(n: int, p: int = DEFAULT_PRIME) -> GradedRingPresentation:
    """Degree-``n`` rational normal curve cut out by the 2x2 minors of its Hankel matrix."""
    if not 2 <= n <= 8:
        raise ValueError("rational normal curve needs 2 <= n <= 8")
    nv = n + 1

    def x(i, j):
        e = [0] * nv
        e[i] += 1
        e[j] += 1
        return tuple(e)

    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            # | x_i  x_j     |
            # | x_i+1 x_j+1  |
            terms: dict = {}
            for m, c in ((x(i, j + 1), 1), (x(i + 1, j), -1)):
                terms[m] = terms.get(m, 0) + c
            gens.append(Poly(nv, terms, p))
    return GradedRingPresentation(nv, Quotient(tuple(gens)), p, rnc_hilbert(n), f"rnc(n={n})")


def canonical_curve(g: int, seed: int = 0, p: int = DEFAULT_PRIME) -> GradedRingPresentation:
    """Canonical ring of a random curve of genus 3, 4, 5 or 6.

    Genus 3 and 6 are plane quartics and quintics, presented through
    degree ``e*q`` plane forms with ``e = d - 3``; genus 4 is a
    quadric-cubic and genus 5 a three-quadric complete intersection.
    """
    rng = random.Random(seed)
    h = canonical_hilbert(g)
    name = f"canonical(g={g})"
    if g == 3:
        form = VeroneseQuotient(1, random_form(3, 4, rng, p))
        return GradedRingPresentation(3, form, p, h, name, genus=g)
    if g == 4:
        gens = (random_form(4, 2, rng, p), random_form(4, 3, rng, p))
        return GradedRingPresentation(4, Quotient(gens), p, h, name, genus=g)
    if g == 5:
        gens = tuple(random_form(5, 2, rng, p) for _ in range(3))
        return GradedRingPresentation(5, Quotient(gens), p, h, name, genus=g)
    if g == 6:
        form = VeroneseQuotient(2, random_form(3, 5, rng, p))
        return GradedRingPresentation(3, form, p, h, name, genus=g)
    raise ValueError(f"no canonical curve constructor for genus {g}")


def ci_k3(kind: str, seed: int = 0, p: int = DEFAULT_PRIME) -> GradedRingPresentation:
    if kind not in K3_TYPES:
        raise ValueError(f"unknown K3 type {kind!r}; expected one of {sorted(K3_TYPES)}")
    nv, degrees, g = K3_TYPES[kind]
    rng = random.Random(seed)
    gens = tuple(random_form(nv, d, rng, p) for d in degrees)
    return GradedRingPresentation(nv, Quotient(gens), p, k3_hilbert(g), kind, genus=g)


def hyperplane_section(S: GradedRingPresentation, which_var: int | None = None) -> GradedRingPresentation:
    """Restrict a complete-intersection K3 to the hyperplane ``x_i = 0``.

    The variable is dropped, so the result lives in one fewer variable and
    is checked against the canonical-curve Hilbert function.
    """
    if not isinstance(S.form, Quotient):
        raise TypeError("hyperplane_section needs a Quotient presentation")
    if S.genus is None:
        raise ValueError("presentation has no genus attached")
    var = S.n_vars - 1 if which_var is None else which_var
    if not 0 <= var < S.n_vars:
        raise ValueError(f"variable index {var} out of range")
    gens = tuple(f.restrict(var) for f in S.form.generators)
    if any(f.is_zero() for f in gens):
        raise DegenerateSample(f"a generator of {S.name} vanishes on x_{var} = 0")
    return GradedRingPresentation(S.n_vars - 1, Quotient(gens), S.p,
                                  canonical_hilbert(S.genus), f"{S.name}|x{var}=0", genus=S.genus)


@dataclass(frozen=True)
class VarietySpec:
    """Serializable recipe for a presentation.

    ``constructor`` is one of ``rnc``, ``canonical``, a K3 type
    (``quartic_P3``, ``ci23_P4``, ``ci222_P5``) or a K3 type with suffix
    ``_section``.
    """

    constructor: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    prime: int = DEFAULT_PRIME

    def to_json(self) -> str:
        return json.dumps({"constructor": self.constructor, "params": dict(sorted(self.params.items())),
                           "seed": self.seed, "prime": self.prime})

    @classmethod
    def from_json(cls, text: str) -> VarietySpec:
        d = json.loads(text)
        return cls(d["constructor"], dict(d.get("params", {})), int(d["seed"]), int(d["prime"]))

    def with_seed(self, seed: int) -> VarietySpec:
        return VarietySpec(self.constructor, dict(self.params), seed, self.prime)

    def with_prime(self, prime: int) -> VarietySpec:
        return VarietySpec(self.constructor, dict(self.params), self.seed, prime)

    @property
    def label(self) -> str:
        extra = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.constructor}({extra})" if extra else self.constructor

    def build(self) -> GradedRingPresentation:
        c, ps = self.constructor, self.params
        if c == "rnc":
            return rational_normal_curve(int(ps["n"]), self.prime)
        if c == "canonical":
            return canonical_curve(int(ps["g"]), self.seed, self.prime)
        if c in K3_TYPES:
            return ci_k3(c, self.seed, self.prime)
        if c.endswith("_section") and c[: -len("_section")] in K3_TYPES:
            S = ci_k3(c[: -len("_section")], self.seed, self.prime)
            var = ps.get("var")
            return hyperplane_section(S, None if var is None else int(var))
        raise ValueError(f"unknown constructor {c!r}")

    @property
    def genus(self) -> int | None:
        c = self.constructor
        if c == "canonical":
            return int(self.params["g"])
        base = c[: -len("_section")] if c.endswith("_section") else c
        if base in K3_TYPES:
            return K3_TYPES[base][2]
        return None

    @property
    def clifford_index(self) -> int | None:
        """Clifford index of the curve this spec models, when known."""
        c = self.constructor
        if c == "canonical":
            return CANONICAL_CLIFFORD[int(self.params["g"])]
        if c.endswith("_section"):
            # sections of a K3 with Picard group ZL are Brill-Noether general
            return (self.genus - 1) // 2
        return None


def with_reseed(spec: VarietySpec, compute: Callable[[GradedRingPresentation], T],
                attempts: int = 3) -> tuple[T, VarietySpec]:
    """Run ``compute`` on ``spec``, retrying with seed+1, seed+2 on degeneracy."""
    last = None
    for i in range(attempts):
        s = spec.with_seed(spec.seed + i)
        try:
            return compute(s.build()), s
        except DegenerateSample as exc:
            last = exc
    raise DegenerateSample(f"{spec.label}: degenerate after {attempts} seeds: {last}")


def menagerie(seed: int = 0, prime: int = DEFAULT_PRIME) -> list[VarietySpec]:
    """The full suite of bundled varieties."""
    specs = [VarietySpec("rnc", {"n": n}, seed, prime) for n in range(2, 7)]
    specs += [VarietySpec("canonical", {"g": g}, seed, prime) for g in (3, 4, 5, 6)]
    specs += [VarietySpec(k, {}, seed, prime) for k in K3_TYPES]
    specs += [VarietySpec(f"{k}_section", {}, seed, prime) for k in K3_TYPES]
    return specs
