import json
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from syzygy.exactlinalg import rank
from syzygy.koszul import (BadPrime, BettiTable, MissingEntry, ResourceLimit, betti_table,
                           complex_check, contraction_scalar, duality_check, koszul_differential,
                           koszul_dim, koszul_split, prime_stable_table, wedge_basis,
                           wedge_contraction_check, wedge_product)
from syzygy.varieties import VarietySpec, canonical_curve, ci_k3, menagerie, rational_normal_curve

MENAGERIE = {s.label: s for s in menagerie(seed=0)}


@pytest.fixture(scope="module")
def rings():
    return {label: spec.build() for label, spec in MENAGERIE.items()}


def test_wedge_basis():
    assert wedge_basis(4, 2) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert len(wedge_basis(8, 5)) == comb(8, 5)
    assert wedge_basis(3, 0) == ((),)


def test_p0_differential_has_no_rows():
    R = rational_normal_curve(3)
    for q in range(3):
        d = koszul_differential(R, 0, q)
        assert d.nrows == 0 and d.ncols == R.dim(q)


def test_twisted_cubic_first_differential():
    R = rational_normal_curve(3)
    d = koszul_differential(R, 2, 0)
    assert d.shape == (16, 6)
    assert rank(d) == 6


def test_sign_convention():
    # δ(e0∧e1 ⊗ 1) = e1 ⊗ x0 - e0 ⊗ x1
    R = rational_normal_curve(3)
    d = koszul_differential(R, 2, 0).to_dense()
    col = d[:, 0]
    dim1 = R.dim(1)
    assert col[1 * dim1 + 0] == 1          # e1 ⊗ x0
    assert col[0 * dim1 + 1] == R.p - 1    # e0 ⊗ x1
    assert (col != 0).sum() == 2


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(MENAGERIE)), st.integers(1, 6), st.integers(0, 2))
def test_complex_condition(label, p, q):
    R = MENAGERIE[label].build()
    p = min(p, R.dim(1))
    assert complex_check(R, p, q)


@pytest.mark.parametrize("label", sorted(MENAGERIE))
def test_euler_characteristic_of_strands(rings, label):
    R = rings[label]
    v = R.dim(1)
    for d in range(0, 5):
        expected = sum((-1) ** p * comb(v, p) * R.dim(d - p) for p in range(0, min(v, d) + 1))
        got = sum((-1) ** p * koszul_dim(R, p, d - p) for p in range(0, min(v, d) + 1))
        assert got == expected, d


@pytest.mark.parametrize("label", sorted(MENAGERIE))
def test_linear_syzygy_count_is_quadric_count(rings, label):
    R = rings[label]
    v = R.dim(1)
    assert koszul_dim(R, 1, 1) == comb(v + 1, 2) - R.dim(2)


def test_koszul_dim_examples():
    assert koszul_dim(canonical_curve(4, 0), 2, 1) == 0
    assert koszul_dim(rational_normal_curve(5), 0, 0) == 1
    assert koszul_dim(rational_normal_curve(3), 1, 1) == 3
    assert koszul_dim(rational_normal_curve(3), -1, 2) == 0
    assert koszul_dim(rational_normal_curve(3), 1, -1) == 0


def test_betti_table_examples():
    t = betti_table(rational_normal_curve(3), 3, 2)
    assert t.row(1) == [0, 3, 2, 0]
    assert t.row(2) == [0, 0, 0, 0]

    t = betti_table(canonical_curve(4, 0), 3, 3)
    assert (t[(1, 1)], t[(1, 2)], t[(2, 1)], t[(0, 2)]) == (1, 1, 0, 0)

    t = betti_table(ci_k3("ci23_P4", 0), 3, 3)
    assert t[(2, 1)] == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_eagon_northcott(n):
    t = betti_table(rational_normal_curve(n), n, 2)
    assert t.row(1) == [p * comb(n, p + 1) for p in range(n + 1)]
    assert not any(t.row(2))


def test_duality_examples():
    t4 = betti_table(canonical_curve(4, 0), 2, 2)
    rep = {p: (a, b, eq) for p, a, b, eq in duality_check(t4, 4)}
    assert rep[1] == (1, 1, True)
    assert rep[2] == (0, 0, True)
    t3 = betti_table(canonical_curve(3, 0), 1, 2)
    rep = {p: (a, b, eq) for p, a, b, eq in duality_check(t3, 3)}
    assert rep[0] == (0, 0, True)


def test_duality_missing_entry():
    t = betti_table(canonical_curve(4, 0), 2, 1)
    with pytest.raises(MissingEntry):
        duality_check(t, 4)


def test_resource_limit():
    R = ci_k3("ci222_P5", 0)
    with pytest.raises(ResourceLimit):
        betti_table(R, 3, 3, entry_budget=1000)


def test_table_serialization_round_trip():
    t = betti_table(rational_normal_curve(3), 3, 2, variety="rnc(n=3)", seed=9)
    back = BettiTable.from_json(t.to_json())
    assert back.entries == t.entries and (back.variety, back.prime, back.seed) == ("rnc(n=3)", t.prime, 9)
    csv_text = t.to_csv()
    assert csv_text.splitlines()[0] == "p,q,dim"
    assert BettiTable.from_csv(csv_text).entries == t.entries
    assert set(json.loads(t.to_json())) == {"variety", "prime", "seed", "entries"}


def test_prime_stable_table_agrees():
    spec = VarietySpec("canonical", {"g": 5}, seed=2)
    t = prime_stable_table(lambda pr: spec.with_prime(pr).build(), [10007, 10009], 3, 2)
    assert t[(1, 1)] == 3 and t.prime == 10007


def test_bad_prime_detection_and_arbitration():
    # a factory that misbehaves at one prime
    def factory(pr):
        return rational_normal_curve(3 if pr != 10009 else 4, pr)

    with pytest.raises(BadPrime):
        prime_stable_table(factory, [10007, 10009], 2, 1)
    t = prime_stable_table(factory, [10007, 10009, 10037], 2, 1)
    assert t.row(1) == [0, 3, 2]
    with pytest.raises(BadPrime):
        prime_stable_table(lambda pr: rational_normal_curve({10007: 2, 10009: 3}.get(pr, 4), pr),
                           [10007, 10009, 10037], 1, 1)


def test_monotone_vanishing_on_menagerie(rings):
    for label, R in rings.items():
        v = R.dim(1)
        t = betti_table(R, v, 1)
        zero_from = next((p for p in range(1, v + 1) if t[(p, 1)] == 0), None)
        if zero_from is not None:
            assert all(t[(l, 1)] == 0 for l in range(zero_from, v + 1)), label


# contraction identity

def test_contraction_l1():
    assert koszul_split({(2,): 1}) == {(2, ()): 1}
    assert contraction_scalar({(2,): 1}) == 1


def test_contraction_pure_wedge():
    # δ(e1∧e2) = e1⊗e2 - e2⊗e1, wedge back: 2 e1∧e2
    assert koszul_split({(1, 2): 1}) == {(1, (2,)): 1, (2, (1,)): -1}
    assert wedge_product(koszul_split({(1, 2): 1})) == {(1, 2): 2}
    assert abs(contraction_scalar({(1, 2): 1})) == 2


def test_contraction_l5():
    assert wedge_contraction_check(8, 5, trials=5, seed=3)


@pytest.mark.parametrize("l", range(1, 6))
def test_contraction_scalar_is_l(l):
    rng = random.Random(l)
    alpha = {t: rng.randint(1, 9) for t in wedge_basis(7, l)}
    assert contraction_scalar(alpha) == l
