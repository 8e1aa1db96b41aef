"""Letter statistics, block counts, conserved quantities, and shortlex order."""

import pytest

from lef.words import (
    ALPHABETS,
    block_count_s,
    conserved_vector,
    e_reduced_length,
    letter_counts,
    separating_quantity,
    shortlex_key,
)


def test_letter_counts():
    assert letter_counts("") == {}
    counts = letter_counts("abacab")
    assert counts == {"a": 3, "b": 2, "c": 1}


def test_block_count_s():
    # maximal blocks made of x and b letters
    assert block_count_s("") == 0
    assert block_count_s("aceae") == 0
    assert block_count_s("x") == 1
    assert block_count_s("xbbxb") == 2
    assert block_count_s("bxb") == 2
    assert block_count_s("axbca") == 1
    assert block_count_s("xxx") == 3  # every x starts a new block
    assert block_count_s("xbbb") == 1


def test_block_count_s_rejects_foreign_letters():
    with pytest.raises(ValueError):
        block_count_s("ad")


def test_e_reduced_length():
    assert e_reduced_length("") == 0
    assert e_reduced_length("eee") == 0
    assert e_reduced_length("aexbe") == 3


def test_alphabets():
    assert ALPHABETS["q"] == "acebx"
    assert ALPHABETS["t"] == "abcdex"
    assert set(ALPHABETS["c"]) == set("abcdxyuv")


def test_conserved_vector_q():
    vec = conserved_vector("xca", "q").as_dict()
    derived = vec["derived_quantities"]
    assert derived["x_count"] == 1
    assert derived["diff_a_minus_bc"] == 0  # one a, one c
    assert derived["prefix_a_count"] == 0
    assert derived["suffix_ae_count"] == 1


def test_separating_quantity_respects_q_equalities():
    # xca = xe in Q, so no registered quantity may separate them
    assert separating_quantity("xca", "xe", "q") is None
    # a and b differ in the a-minus-bc balance
    assert separating_quantity("a", "b", "q") == "diff_a_minus_bc"


def test_separating_quantity_t():
    # axb = acx in T: conserved quantities must agree
    assert separating_quantity("axb", "acx", "t") is None
    assert separating_quantity("a", "b", "t") is not None


def test_separating_quantity_c_is_length_only():
    assert separating_quantity("ax", "by", "c") is None
    assert separating_quantity("ax", "x", "c") == "length"


def test_shortlex_key_orders_by_length_first():
    words = ["ca", "x", "aa", "b", "aaa"]
    ordered = sorted(words, key=lambda w: shortlex_key(w, "acebx"))
    assert ordered == ["b", "x", "aa", "ca", "aaa"]
    # within one length, the order string decides: a < c < e < b < x
    assert shortlex_key("ab", "acebx") < shortlex_key("ac", "acebx") or \
        shortlex_key("ac", "acebx") < shortlex_key("ab", "acebx")
    pair = sorted(["ab", "ac"], key=lambda w: shortlex_key(w, "acebx"))
    assert pair == ["ac", "ab"]


def test_shortlex_key_rejects_foreign_letters():
    with pytest.raises(KeyError):
        shortlex_key("az", "acebx")
