"""Regularity witnesses, inverses, and the classification flags."""

import numpy as np
import pytest

from conftest import k2, meet_two, small_fixture_tables, trivial
from gsg import (
    GammaSemigroup,
    NotAssociative,
    alpha_inverses,
    alpha_regular_witness,
    classify,
    completely_regular_witness,
)
from gsg.families import left_zero, right_zero, zmod
from oracles import brute_regularity


@pytest.mark.parametrize("s", small_fixture_tables(), ids=lambda s: s.name)
def test_witnesses_match_reference_scan(s):
    ref = brute_regularity(s)
    for a in s.elements:
        assert alpha_regular_witness(s, a) == ref[a]["regular"]
        assert completely_regular_witness(s, a) == ref[a]["commuting"]
        assert list(alpha_inverses(s, a)) == ref[a]["inverses"]


@pytest.mark.parametrize("s", small_fixture_tables(), ids=lambda s: s.name)
def test_flags_agree_with_per_element_data(s):
    rep = classify(s)
    assert rep.is_alpha_regular == all(
        e.alpha_regular is not None for e in rep.per_element)
    assert rep.is_completely_alpha_regular == all(
        e.completely_regular is not None for e in rep.per_element)
    singleton = all(len(set(e.inverse_elements)) == 1 for e in rep.per_element)
    assert rep.is_gamma_inverse == (rep.is_alpha_regular and singleton)
    # completeness implies regularity
    for e in rep.per_element:
        if e.completely_regular is not None:
            assert e.alpha_regular is not None


def test_z2_values():
    z2 = zmod(2)
    assert alpha_regular_witness(z2, "1") == ("1", "g")   # 1+1+1 = 1 mod 2
    assert alpha_inverses(z2, "0") == (("0", "g"),)
    assert classify(z2).is_completely_alpha_regular


def test_constant_table_values():
    s = k2()
    assert alpha_regular_witness(s, "a") is None   # agxga = b for every x
    assert alpha_inverses(s, "a") == ()
    assert completely_regular_witness(s, "a") is None
    rep = classify(s)
    assert not rep.is_alpha_regular and not rep.is_gamma_inverse
    # b is fine: b g x g b = b, and the first witness is the first element
    assert alpha_regular_witness(s, "b") == ("a", "g")


def test_left_zero_values():
    s = left_zero(["x", "y"], ["g"], name="L2")
    # xgbgx = x and bgxgb = b hold for every b, so both pairs qualify
    assert alpha_inverses(s, "x") == (("x", "g"), ("y", "g"))
    assert completely_regular_witness(s, "x") == ("x", "g")
    # y commutes only with itself: ygx = y but xgy = x
    assert completely_regular_witness(s, "y") == ("y", "g")
    rep = classify(s)
    assert rep.is_completely_alpha_regular and not rep.is_gamma_inverse


def test_two_gamma_meet_values():
    s = meet_two("x", "y", ["g", "h"], "M2")
    assert alpha_inverses(s, "x") == (("x", "g"), ("x", "h"))
    assert alpha_inverses(s, "y") == (("y", "h"),)
    assert classify(s).is_gamma_inverse   # one inverse element each, two routes
    assert classify(s).is_completely_alpha_regular


def test_gamma_inverse_flag_across_moduli():
    # with two gammas the inverse of a against gamma_j is -a-2j, so the
    # inverse element is unique exactly when 2 = 0 mod n
    assert classify(zmod(2, gammas=2)).is_gamma_inverse
    assert not classify(zmod(4, gammas=2)).is_gamma_inverse
    assert classify(zmod(3)).is_gamma_inverse
    assert not classify(right_zero(["x", "y", "z"], ["g"])).is_gamma_inverse


def test_idempotents_are_regular():
    for s in small_fixture_tables():
        for a in s.elements:
            for g in s.gammas:
                if s.mul(a, g, a) != a:
                    continue
                # a itself witnesses both equations
                assert s.mul(s.mul(a, g, a), g, a) == a
                assert alpha_regular_witness(s, a) is not None
                assert completely_regular_witness(s, a) is not None


def test_trivial_table_all_flags():
    rep = classify(trivial("u"))
    assert (rep.is_alpha_regular, rep.is_gamma_inverse,
            rep.is_completely_alpha_regular) == (True, True, True)


def test_classify_requires_associativity():
    t = np.zeros((2, 1, 2), dtype=np.int64)
    t[0, 0, 0] = 1   # agb = b except aga = b'... scrambled enough to break
    t[1, 0, 1] = 0
    s = GammaSemigroup("X", ("a", "b"), ("g",), t)
    from oracles import brute_assoc_witness, table_dict
    assert brute_assoc_witness(s.elements, s.gammas, table_dict(s)) is not None
    with pytest.raises(NotAssociative):
        classify(s)
