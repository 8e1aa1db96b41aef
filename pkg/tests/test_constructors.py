"""Rees matrix semigroups, strong semilattices, length-ideal quotients, and
the finite shadow semigroups F_n."""

import numpy as np
import pytest

from lef.approx import cyclic_table
from lef.constructors import (
    FnHandle,
    ReesSpec,
    SemilatticeSpec,
    build_fn,
    quotient_by_length_ideal,
    quotient_word_map,
    rees_matrix,
    semilattice_semigroup,
)
from lef.fsg import (
    MulTable,
    green,
    is_clifford,
    is_completely_simple,
    is_group,
    zero_element,
)
from lef.presets import build_fn_system
from lef.rewrite import normal_form


# ---------------------------------------------------------------------------
# Rees matrix semigroups


def test_rees_matrix_basic():
    spec = ReesSpec(
        group=cyclic_table(2),
        rows=("i1", "i2"),
        cols=("l1", "l2"),
        sandwich=((0, 0), (0, 1)),
    )
    mt = rees_matrix(spec)
    assert mt.order == 8
    assert is_completely_simple(mt)
    assert not is_group(mt)
    g = green(mt)
    assert len(g.j_classes) == 1
    assert len(g.r_classes) == 2
    assert len(g.l_classes) == 2
    assert len(g.h_classes) == 4
    # product rule: (i,g,l)(j,h,m) = (i, g + P[l][j] + h, m)
    a = mt.index("(i1,1,l2)")
    b = mt.index("(i2,1,l1)")
    prod = mt.label(mt.mul(a, b))
    assert prod == "(i1,1,l1)"  # 1 + P[l2][i2] + 1 = 1 + 1 + 1 = 1 mod 2


def test_rees_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        ReesSpec(group=cyclic_table(2), rows=(), cols=("l",), sandwich=())
    with pytest.raises(ValueError):
        ReesSpec(group=cyclic_table(2), rows=("i",), cols=("l",), sandwich=((0, 0),))
    spec = ReesSpec(group=cyclic_table(2), rows=("i",), cols=("l",), sandwich=((5,),))
    with pytest.raises(ValueError):
        rees_matrix(spec)  # sandwich entry outside the group
    not_group = MulTable(np.array([[0, 0], [1, 1]]))
    spec = ReesSpec(group=not_group, rows=("i",), cols=("l",), sandwich=((0,),))
    with pytest.raises(ValueError):
        rees_matrix(spec)


# ---------------------------------------------------------------------------
# strong semilattices


def _chain2_spec(hom=(0, 1)):
    meet = MulTable(np.array([[0, 0], [0, 1]]), labels=("bot", "top"))
    return SemilatticeSpec(
        meet=meet,
        components={"bot": cyclic_table(2), "top": cyclic_table(2)},
        homs={("top", "bot"): hom},
    )


def test_semilattice_semigroup_clifford():
    mt = semilattice_semigroup(_chain2_spec())
    assert mt.order == 4
    assert is_clifford(mt)
    assert not is_group(mt)
    # components multiply via the hom: top elements map identically into bot
    top1 = mt.index("top:1")
    bot1 = mt.index("bot:1")
    assert mt.label(mt.mul(top1, bot1)) == "bot:0"  # 1 + 1 = 0 in the bottom


def test_semilattice_collapsing_hom():
    mt = semilattice_semigroup(_chain2_spec(hom=(0, 0)))
    assert mt.order == 4
    top1 = mt.index("top:1")
    bot1 = mt.index("bot:1")
    assert mt.label(mt.mul(top1, bot1)) == "bot:1"  # hom collapses top to 0


def test_semilattice_rejects_bad_homs():
    meet = MulTable(np.array([[0, 0], [0, 1]]), labels=("bot", "top"))
    with pytest.raises((KeyError, ValueError)):
        semilattice_semigroup(SemilatticeSpec(
            meet=meet,
            components={"bot": cyclic_table(2), "top": cyclic_table(2)},
            homs={},  # missing (top, bot)
        ))
    with pytest.raises(ValueError):
        semilattice_semigroup(SemilatticeSpec(
            meet=meet,
            components={"bot": cyclic_table(3), "top": cyclic_table(2)},
            homs={("top", "bot"): (0, 1)},  # 1 -> 1 is not multiplicative Z2->Z3
        ))


def test_semilattice_rejects_non_semilattice_meet():
    not_idempotent = cyclic_table(2)
    with pytest.raises(ValueError):
        semilattice_semigroup(SemilatticeSpec(
            meet=not_idempotent,
            components={not_idempotent.label(0): cyclic_table(1),
                        not_idempotent.label(1): cyclic_table(1)},
            homs={},
        ))


# ---------------------------------------------------------------------------
# length-ideal quotients


def test_quotient_by_length_ideal_free():
    mt = quotient_by_length_ideal("ab", 2)
    word_map = quotient_word_map("ab", 2)
    # words of length <= 2 plus a zero class
    assert mt.order == 7
    zero = zero_element(mt)
    assert zero == 0
    assert word_map["a"] != word_map["b"]
    assert mt.mul(word_map["a"], word_map["a"]) == word_map["aa"]
    assert mt.mul(word_map["a"], word_map["aa"]) == zero  # length 3 -> ideal


def test_quotient_by_length_ideal_with_relations():
    mt = quotient_by_length_ideal("ab", 2, relations=(("ab", "ba"),))
    word_map = quotient_word_map("ab", 2, relations=(("ab", "ba"),))
    assert mt.order == 6  # ab and ba merge
    assert word_map["ab"] == word_map["ba"]


def test_quotient_rejects_bad_input():
    with pytest.raises(ValueError):
        quotient_by_length_ideal("", 2)
    with pytest.raises(ValueError):
        quotient_by_length_ideal("ab", 0)
    with pytest.raises(ValueError):
        # length-changing relations would break the ideal structure
        quotient_by_length_ideal("ab", 2, relations=(("ab", "a"),))
    with pytest.raises(ValueError):
        quotient_by_length_ideal("a0", 2)


# ---------------------------------------------------------------------------
# the finite shadows F_n


def test_build_fn_handle():
    fn = build_fn(1)
    assert isinstance(fn, FnHandle)
    assert fn.n == 1
    system = build_fn_system(1)
    # elements are normal forms, with words of block count > n collapsing to 0
    assert fn.element("xca") == normal_form(system, "xca")
    assert fn.element("xbxbxb") == "0"
    assert fn.equal("aaa", "a")  # a^{2n+1} = a at n = 1
    assert not fn.equal("a", "b")
    assert fn.mul("a", "a") == fn.element("aa")


def test_build_fn_rejects_bad_n():
    with pytest.raises(ValueError):
        build_fn(0)


def test_fn_zero_absorbs():
    fn = build_fn(1)
    # mul takes words over the presentation alphabet, not element names
    assert fn.mul("xbxb", "a") == "0"
    assert fn.mul("a", "xbxb") == "0"
    with pytest.raises(ValueError):
        fn.element("")
