import pytest

from syzygy.numerology import (CurveClass, RangeMismatch, brill_noether_number, corollary2_range,
                               corollary_pairs, generic_clifford_index, generic_gonality,
                               green_prediction, in_corollary_range, lm_chi, prediction_matches)


@pytest.mark.parametrize("g,gon", [(7, 5), (8, 5), (2, 2), (3, 3), (4, 3), (10, 6)])
def test_generic_gonality(g, gon):
    assert generic_gonality(g) == gon


def test_generic_gonality_matches_brill_noether():
    # smallest d with a g^1_d, i.e. rho(g, 1, d) >= 0
    for g in range(2, 40):
        d = next(d for d in range(1, g + 3) if brill_noether_number(g, 1, d) >= 0)
        assert generic_gonality(g) == d
        assert generic_clifford_index(g) == d - 2


def test_lm_chi_examples():
    inv = lm_chi(2)
    assert (inv.c1_sq, inv.c2, inv.chi) == (6, 3, 4)
    assert lm_chi(1).chi == 3
    assert lm_chi(100).chi == 102
    with pytest.raises(ValueError):
        lm_chi(0)


def test_corollary_examples():
    assert in_corollary_range(8, 5) and (8, 5) in corollary_pairs(20)
    assert in_corollary_range(6, 4) and (6, 4) in corollary_pairs(20)
    assert not in_corollary_range(9, 6) and (9, 6) not in corollary_pairs(20)
    # boundary: gon = g/3 + 1 exactly
    assert in_corollary_range(9, 4) and not in_corollary_range(9, 3)


def test_corollary2_range():
    rep = corollary2_range(200)
    assert rep["ok"] and rep["checked"] == sum(g - 1 for g in range(2, 201))
    with pytest.raises(ValueError):
        corollary2_range(3)


def test_corollary2_range_reports_counterexample(monkeypatch):
    import syzygy.numerology as mod
    monkeypatch.setattr(mod, "in_corollary_range", lambda g, gon: gon <= g / 2 + 1)
    with pytest.raises(RangeMismatch, match=r"\(g, gon\)"):
        corollary2_range(10)


def labels(g, cliff):
    return dict(green_prediction(g, cliff))


def test_green_prediction_genus4():
    lab = labels(4, 1)
    assert lab[2] == "zero" and lab[1] == "nonzero"


def test_green_prediction_plane_quintic():
    lab = labels(6, 1)
    assert lab[4] == "zero" and lab[3] == "nonzero"


def test_green_prediction_genus5_generic():
    lab = labels(5, 2)
    assert lab[1] == "nonzero" and lab[2] == "conjectured-zero" and lab[3] == "zero"


def test_green_prediction_genus3_edge():
    lab = labels(3, 1)
    # K_1,1 is dual to K_0,2, which vanishes by Noether
    assert lab == {0: "zero", 1: "zero", 2: "zero"}


def test_green_prediction_hyperelliptic_unknown():
    assert set(labels(5, 0).values()) == {"unknown"}


def test_green_prediction_rejects_bad_input():
    with pytest.raises(ValueError):
        green_prediction(5, 3)
    with pytest.raises(ValueError):
        green_prediction(2, 0)


def test_prediction_matches():
    assert prediction_matches("nonzero", 3) is True
    assert prediction_matches("conjectured-zero", 0) is True
    assert prediction_matches("zero", 1) is False
    assert prediction_matches("unknown", 1) is None


def test_curve_class_relation():
    CurveClass(8, gon=5, cliff=3)
    with pytest.raises(ValueError):
        CurveClass(8, gon=6, cliff=2)
