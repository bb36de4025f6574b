import math

import pytest

from zsindex.enumeration import iter_min_zero_sum4
from zsindex.normalform import (
    TAG_ALL_BIG,
    TAG_ALL_SMALL,
    TAG_NORMAL,
    TAG_NU1,
    TAG_NU3,
    TAG_OPAQUE,
    NormalForm,
    classify,
    normal_form_sequence,
    to_unit_leading,
)
from zsindex.zseq import is_minimal_zero_sum, make_sequence, nu, scale, weight


def all_normal_forms(n):
    """All arithmetic (a, b, c) triples for one modulus; c = a + b - 1 < n/2."""
    for a in range(2, n):
        if 2 * (2 * a - 1) >= n:
            break
        for b in range(a, n):
            c = a + b - 1
            if 2 * c >= n:
                break
            yield NormalForm(n, a, b, c)


def test_to_unit_leading_examples():
    assert to_unit_leading(make_sequence(175, [5, 77, 133, 135])) is None
    m, scaled = to_unit_leading(make_sequence(11, [2, 6, 7, 7]))
    assert m == 6 and scaled.coeffs == (1, 3, 9, 9)
    m, scaled = to_unit_leading(make_sequence(25, [1, 11, 18, 20]))
    assert m == 1 and scaled.coeffs == (1, 11, 18, 20)


def test_classify_examples():
    out = classify(make_sequence(7, [4, 5, 6, 6]))
    assert out.tag == TAG_NU3 and out.forced_multiplier == 6
    assert sum(7 - x for x in (4, 5, 6, 6)) == 7

    out = classify(make_sequence(11, [4, 5, 5, 8]))
    assert out.tag == TAG_ALL_SMALL and out.forced_multiplier == 9
    assert weight(make_sequence(11, [4, 5, 5, 8]), 9) == 11

    out = classify(make_sequence(25, [1, 11, 18, 20]))
    assert out.tag == TAG_NORMAL
    assert (out.normal_form.a, out.normal_form.b, out.normal_form.c) == (5, 7, 11)
    assert out.scaling == 1

    out = classify(make_sequence(11, [2, 6, 7, 7]))
    assert out.tag == TAG_ALL_BIG and out.forced_multiplier == 2
    assert weight(make_sequence(11, [2, 6, 7, 7]), 2) == 11


def test_classify_opaque_when_no_coefficient_is_a_unit():
    out = classify(make_sequence(175, [5, 77, 133, 135]))
    assert out.tag == TAG_OPAQUE
    assert out.forced_multiplier is None and out.normal_form is None


def test_classify_reapplies_ladder_after_scaling():
    # (3,5,9,13)/15 has the nu=2 split shape, but rescaling by inv(13)=7
    # produces (1,3,5,6) whose coefficient sum is 15, so the scaled copy is
    # certified by multiplier 1.
    out = classify(make_sequence(15, [3, 5, 9, 13]))
    assert out.tag == TAG_NU1
    assert out.forced_multiplier == 1
    assert out.scaling == 7
    assert weight(make_sequence(15, [3, 5, 9, 13]), 7) == 15


def test_classify_routes_even_boundary_to_opaque():
    # x2 = n/2 exactly; the would-be forced multipliers are not units mod 10
    out = classify(make_sequence(10, [1, 5, 6, 8]))
    assert out.tag == TAG_OPAQUE


def test_classify_rejects_invalid_input():
    with pytest.raises(ValueError):
        classify(make_sequence(5, [1, 2, 3, 4]))  # not minimal
    with pytest.raises(ValueError):
        classify(make_sequence(5, [1, 4]))  # not length 4


def test_normal_form_sequence_examples():
    assert normal_form_sequence(NormalForm(25, 5, 7, 11)).coeffs == (1, 11, 18, 20)
    assert normal_form_sequence(NormalForm(49, 3, 17, 19)).coeffs == (1, 19, 32, 46)
    assert normal_form_sequence(NormalForm(25, 2, 4, 5)).coeffs == (1, 5, 21, 23)


def test_normal_form_validation():
    with pytest.raises(ValueError):
        NormalForm(25, 5, 7, 12)  # 1 + c != a + b
    with pytest.raises(ValueError):
        NormalForm(25, 1, 5, 5)  # a must exceed 1
    with pytest.raises(ValueError):
        NormalForm(25, 7, 5, 11)  # a <= b
    with pytest.raises(ValueError):
        NormalForm(20, 4, 7, 10)  # c < n/2


def test_classify_is_total_with_consistent_fields():
    tags_with_fm = {TAG_NU1: 1, TAG_NU3: None, TAG_ALL_SMALL: None, TAG_ALL_BIG: 2}
    for n in range(3, 45):
        for seq in iter_min_zero_sum4(n):
            out = classify(seq)
            if out.tag == TAG_NU1:
                assert out.forced_multiplier == 1
            elif out.tag == TAG_NU3:
                assert out.forced_multiplier == n - 1
            elif out.tag == TAG_ALL_SMALL:
                assert out.forced_multiplier == n - 2
            elif out.tag == TAG_ALL_BIG:
                assert out.forced_multiplier == 2
            elif out.tag == TAG_NORMAL:
                assert out.normal_form is not None and out.scaling is not None
            else:
                assert out.tag == TAG_OPAQUE
                assert out.forced_multiplier is None and out.normal_form is None


def test_forced_multipliers_reach_weight_n():
    for n in range(3, 61):
        for seq in iter_min_zero_sum4(n):
            out = classify(seq)
            if out.forced_multiplier is None:
                continue
            target = seq if out.scaling is None else scale(seq, out.scaling)
            assert weight(target, out.forced_multiplier) == n
            if out.scaling is not None:
                composed = (out.forced_multiplier * out.scaling) % n
                assert weight(seq, composed) == n


def test_normal_branch_soundness():
    for n in range(5, 61):
        for seq in iter_min_zero_sum4(n):
            out = classify(seq)
            if out.tag != TAG_NORMAL:
                continue
            nf = out.normal_form
            assert 1 + nf.c == nf.a + nf.b
            assert 1 < nf.a <= nf.b < nf.c and 2 * nf.c < n
            associated = normal_form_sequence(nf)
            assert associated == scale(seq, out.scaling)
            assert is_minimal_zero_sum(associated)
            assert nu(associated) == 2


def test_round_trip_for_all_normal_forms_up_to_200():
    for n in range(5, 201):
        for nf in all_normal_forms(n):
            out = classify(normal_form_sequence(nf))
            assert out.tag == TAG_NORMAL
            assert out.scaling == 1
            assert out.normal_form == nf
