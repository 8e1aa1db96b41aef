"""Pre-accurate word enumeration and the wrapping constructions for S and T."""

import pytest

from conftest import all_words

from lef.approx import check_lwf_wrapping, subset_from_words
from lef.fsg import zero_element
from lef.lwf import (
    apriori_length_bound,
    build_lwf_wrapping,
    enumerate_preaccurate,
    fallback_element,
    sm_ideal_quotient,
)
from lef.oracle import sm_canonical


# ---------------------------------------------------------------------------
# pre-accurate word sets L_n


def test_preaccurate_t_n1_is_the_generators():
    pre = enumerate_preaccurate("t", 1)
    assert pre.words == ("a", "b", "c", "d", "e", "x")
    assert pre.base_words == ("a", "b", "c", "d", "e", "x")
    assert not pre.truncated
    assert pre.max_length == 1


def test_preaccurate_t_n2():
    pre = enumerate_preaccurate("t", 2)
    assert len(pre.words) == 46
    assert pre.max_length == 3
    assert not pre.truncated
    # closure property: every listed word of length > n is a product of two
    # pre-accurate words equal to a base element
    assert set(pre.base_words) <= set(pre.words)


def test_preaccurate_s_is_truncated():
    pre = enumerate_preaccurate("s", 2, length_cap=10)
    assert len(pre.words) == 55
    assert pre.truncated  # L_2(S) is infinite; the cap cuts it off


def test_preaccurate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_preaccurate("sm:3", 1)  # not a word preset
    with pytest.raises(ValueError):
        enumerate_preaccurate("t", 0)
    with pytest.raises(ValueError):
        enumerate_preaccurate("t", 3, length_cap=2)


def test_preaccurate_q_generators():
    # the q preset is a word host too; its length-1 layer is the generators
    pre = enumerate_preaccurate("q", 1)
    assert pre.words == ("a", "b", "c", "e", "x")


def test_preaccurate_json():
    pre = enumerate_preaccurate("t", 1)
    data = pre.as_json()
    assert data["preset"] == "t"
    assert data["n"] == 1
    assert data["words"] == ["a", "b", "c", "d", "e", "x"]


def test_apriori_length_bound():
    assert apriori_length_bound(1) == 2 ** 36
    assert apriori_length_bound(2) == 2 * 2 ** (6 ** 3)


def test_fallback_element():
    w = fallback_element("t", 2)
    assert w == "aaa"
    assert len(w) == 3


# ---------------------------------------------------------------------------
# the S_m ideal quotient carrier


def test_sm_ideal_quotient():
    mt, word_map = sm_ideal_quotient(3, 1)
    zero = zero_element(mt)
    assert zero is not None
    # e-run folding matches the canonical form
    e = word_map["e"]
    ee = word_map["ee"]
    assert mt.mul(e, ee) == e  # eee = e (m = 3)
    assert mt.mul(ee, ee) == ee  # e^4 ~ e^2
    assert sm_canonical("eeee", 3) == "ee"
    # words beyond the e-reduced length bound collapse to zero
    a = word_map["a"]
    assert mt.mul(a, a) == zero


def test_sm_ideal_quotient_rejects_bad_m():
    with pytest.raises(ValueError):
        sm_ideal_quotient(1, 1)


# ---------------------------------------------------------------------------
# wrapping constructions


def test_wrap_t_n1(wrap_t_n1):
    wrap, words, elapsed = wrap_t_n1
    assert wrap.D.order == 259
    assert len(set(wrap.d)) == 47
    H = subset_from_words("t", words)
    result = check_lwf_wrapping(H, wrap)
    assert result.valid, result.as_json()
    assert elapsed < 60


def test_wrap_s_n1(wrap_s_n1):
    wrap, words, elapsed = wrap_s_n1
    assert wrap.D.order == 5655
    assert len(set(wrap.d)) == 41
    H = subset_from_words("s", words)
    result = check_lwf_wrapping(H, wrap)
    assert result.valid, result.as_json()
    assert elapsed < 60


def test_build_lwf_wrapping_rejects_bad_input():
    with pytest.raises(ValueError):
        build_lwf_wrapping("q", ["a"], 1)
    with pytest.raises(ValueError):
        build_lwf_wrapping("t", [], 1)
    with pytest.raises(ValueError):
        build_lwf_wrapping("t", ["aa"], 1)  # word longer than n


def test_build_lwf_wrapping_accepts_subsets():
    words = all_words("abcdex", 1)
    H = subset_from_words("t", words)
    wrap = build_lwf_wrapping("t", H, 1)
    assert check_lwf_wrapping(H, wrap).valid
