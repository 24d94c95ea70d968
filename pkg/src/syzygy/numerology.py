"""Closed-form numerology for curves on K3 surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CurveClass:
    g: int
    gon: int | None = None
    cliff: int | None = None

    def __post_init__(self):
        if self.gon is not None and self.cliff is not None and self.g >= 4:
            if not self.cliff <= self.gon - 2 <= self.cliff + 1:
                raise ValueError(f"inconsistent gonality {self.gon} and Clifford index {self.cliff}")


@dataclass(frozen=True)
class LMInvariants:
    """Chern data and Euler characteristic of the rank-2 bundle attached to a ``g^1_{k+1}``."""

    k: int
    c1_sq: int
    c2: int
    chi: int


def generic_gonality(g: int) -> int:
    """Gonality of a Brill-Noether general curve of genus ``g``."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    return (g + 3) // 2


def generic_clifford_index(g: int) -> int:
    return generic_gonality(g) - 2


def brill_noether_number(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def lm_chi(k: int) -> LMInvariants:
    """Riemann-Roch on a K3 for ``det E = L``, ``L^2 = 4k - 2``, ``c_2(E) = k + 1``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c1_sq = 4 * k - 2
    c2 = k + 1
    # chi(E) = rank * chi(O_S) + (c1^2 - 2 c2) / 2, chi(O_S) = 2
    twice = 2 * 2 * 2 + c1_sq - 2 * c2
    assert twice % 2 == 0
    chi = twice // 2
    assert chi == k + 2, (k, chi)
    return LMInvariants(k, c1_sq, c2, chi)


def in_corollary_range(g: int, gon: int) -> bool:
    """``g/3 + 1 <= gon <= g/2 + 1``, exactly."""
    return Fraction(g, 3) + 1 <= gon <= Fraction(g, 2) + 1


def corollary_pairs(g_max: int) -> set[tuple[int, int]]:
    """``(2k - δ, k + 1 - δ)`` for ``k >= 0``, ``0 <= δ <= k/2``, with genus ``<= g_max``."""
    out = set()
    for k in range(0, g_max + 1):
        for delta in range(0, k // 2 + 1):
            g = 2 * k - delta
            if g <= g_max:
                out.add((g, k + 1 - delta))
    return out


class RangeMismatch(AssertionError):
    pass


def corollary2_range(g_max: int) -> dict:
    """Check the inequality description of the parametrized (genus, gonality) pairs.

    Every ``(g, gon)`` with ``2 <= gon <= g <= g_max`` is tested both ways.
    Raises :class:`RangeMismatch` with the first counterexample.
    """
    if g_max < 4:
        raise ValueError("g_max must be >= 4")
    param = {(g, gon) for g, gon in corollary_pairs(g_max) if 2 <= gon <= g}
    members = []
    for g in range(2, g_max + 1):
        for gon in range(2, g + 1):
            a = in_corollary_range(g, gon)
            b = (g, gon) in param
            if a != b:
                raise RangeMismatch(f"(g, gon) = ({g}, {gon}): inequalities {a}, parametrization {b}")
            if a:
                members.append((g, gon))
    return {"g_max": g_max, "checked": sum(g - 1 for g in range(2, g_max + 1)),
            "members": len(members), "ok": True}


def green_prediction(g: int, cliff: int) -> list[tuple[int, str]]:
    """Expected vanishing of ``K_{p,1}(C, K_C)`` for ``0 <= p <= g - 1``.

    Labels are ``"nonzero"`` (forced by special linear series),
    ``"zero"`` (forced for every nonhyperelliptic curve),
    ``"conjectured-zero"`` (the conjectural direction) and ``"unknown"``
    for hyperelliptic input, where the canonical map is not an embedding.
    """
    if g < 3 or cliff < 0:
        raise ValueError("need g >= 3 and cliff >= 0")
    if cliff > (g - 1) // 2:
        raise ValueError(f"Clifford index {cliff} too large for genus {g}")
    if cliff == 0:
        return [(p, "unknown") for p in range(g)]
    out = []
    for p in range(g):
        if p == 0 or p >= g - 2:
            out.append((p, "zero"))
        elif p <= g - cliff - 2:
            out.append((p, "nonzero"))
        else:
            out.append((p, "conjectured-zero"))
    return out


def prediction_matches(label: str, dim: int) -> bool | None:
    if label == "unknown":
        return None
    if label == "nonzero":
        return dim != 0
    return dim == 0
