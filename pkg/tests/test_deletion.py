import pytest

from pogarr.arrangement import WeakCombinatorics as W, delete_line, delete_point_star, line_profile
from pogarr.deletion import DichotomyError, analyze_deletion, deletion_dichotomy, deletion_screen
from pogarr.syzygy import classify

from conftest import pencil

WIMAN = W(45, {3: 120, 4: 45, 5: 36})


def test_klein_line_forced_by_the_bound(klein_arr):
    a = analyze_deletion(klein_arr, 5, (9, 11), assume_free=True)
    assert a.restriction_count == 8 and a.mdr_lower_bound == 8
    assert (a.verdict, a.deletion_exponents, a.classification) == ("POG", (9, 11, 12), "MPOG")
    assert a.epsilon == 0 and a.deletion_mdr is None


def test_wiman_without_coordinates():
    a = deletion_dichotomy(WIMAN, (19, 25), {3: 8, 4: 4, 5: 4})
    assert a.restriction_count == 16 and a.mdr_lower_bound == 16
    assert (a.verdict, a.deletion_exponents) == ("POG", (19, 25, 28))
    assert a.deletion_weak == W(44, {2: 8, 3: 116, 4: 45, 5: 32})


def test_dual_hesse_line(hesse):
    a = analyze_deletion(hesse, 0)
    assert (a.restriction_count, a.mdr_lower_bound) == (4, 4)
    assert (a.verdict, a.deletion_exponents, a.classification) == ("POG", (4, 4, 4), "NearlyFree")
    assert a.parent_exponents == (4, 4)


def test_deletion_screen(hesse, klein_arr):
    h2 = delete_line(hesse, 0)
    v = deletion_screen(h2)
    assert set(v.candidates) == {(4, 4, 4), (5, 3, 5)}
    assert deletion_screen(h2, (4, 4)).candidates == ((4, 4, 4),)
    quad = next(i for i, p in enumerate(klein_arr.lattice) if p.multiplicity == 4)
    assert deletion_screen(delete_point_star(klein_arr, quad)).not_pog
    assert deletion_screen("d=17;t2=16,t3=24,t4=8").not_pog


def test_every_hesse_line_agrees_with_syzygies(hesse):
    for i in range(hesse.d):
        a = analyze_deletion(hesse, i, verify=True)
        assert a.verified and a.deletion_mdr == 4
        assert a.deletion_exponents[2] == hesse.d - 1 - a.restriction_count
        assert a.restriction_count == sum(line_profile(hesse, i).values())


@pytest.mark.parametrize("i", [0, 10])
def test_klein_lines_agree_with_syzygies(klein_arr, i):
    a = analyze_deletion(klein_arr, i, (9, 11), assume_free=True, mode="modular", verify=True)
    assert a.verified and a.deletion_exponents == (9, 11, 12)


@pytest.mark.parametrize("d", range(4, 8))
def test_pencil_deletion_stays_free(d):
    a = analyze_deletion(pencil(d), 0)
    assert a.verdict == "Free" and a.deletion_exponents == (0, d - 2)
    assert a.deletion_mdr == 0
    assert classify(delete_line(pencil(d), 0)).exponents == (0, d - 2)


def test_non_free_parent_is_rejected(hesse):
    with pytest.raises(DichotomyError, match="dichotomy inapplicable"):
        analyze_deletion(delete_line(hesse, 0), 0)


def test_wrong_parent_exponents_are_rejected(hesse):
    with pytest.raises(DichotomyError, match="dichotomy inapplicable"):
        deletion_dichotomy(hesse.weak, (3, 4), {3: 4})
    with pytest.raises(DichotomyError, match="disagree"):
        analyze_deletion(hesse, 0, (3, 5))


def test_undecided_without_mdr():
    # pencil profile: the bound is 0, so only a computed mdr decides
    a = deletion_dichotomy(W(5, {5: 1}), (0, 4), {5: 1})
    assert a.verdict is None and a.classification is None
    b = deletion_dichotomy(W(5, {5: 1}), (0, 4), {5: 1}, deletion_mdr=0)
    assert b.verdict == "Free" and b.deletion_exponents == (0, 3)


def test_proof_trace_is_recorded(klein_arr):
    a = analyze_deletion(klein_arr, 0, (9, 11), assume_free=True)
    text = " | ".join(a.proof_trace)
    assert "r = |A' cap l| = 8" in text and "(9, 11, 12)" in text
    assert a.as_dict()["classification"] == "MPOG"
