import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import Q
from reference_values import SYM_A, SYM_B, SYM_C
from hgarith.errors import DimensionMismatch, ParseError, SingularBase, UnboundSymbol
from hgarith.exact import QMatrix
from hgarith.slp import SLP, evaluate_slp, format_word, parse_word


def test_parse_word_grammar():
    assert parse_word("B^3 A^2 B^2 A B^2") == (("B", 3), ("A", 2), ("B", 2), ("A", 1), ("B", 2))
    assert parse_word("  E7^161   E8 E6^-18 ") == (("E7", 161), ("E8", 1), ("E6", -18))
    assert parse_word("1") == ()
    assert parse_word("c1^+2") == (("c1", 2),)


@pytest.mark.parametrize("text, column", [("A^", 1), ("A B^x", 3), ("", 1), ("A 2", 3), ("A^-", 1)])
def test_parse_word_errors(text, column):
    with pytest.raises(ParseError) as info:
        parse_word(text)
    assert info.value.column == column


names = st.sampled_from(["A", "B", "P", "E1", "c1", "x_2"])
words = st.lists(st.tuples(names, st.integers(-20, 20).filter(lambda e: e != 0)), max_size=8).map(tuple)


@given(words)
def test_format_parse_round_trip(word):
    assert parse_word(format_word(word)) == word


def test_slp_validation():
    slp = SLP.from_strings(("A", "B"), {"C": "A^-1 B", "D": "C C^-1"})
    assert slp.names == ["C", "D"]
    assert len(slp) == 2
    assert slp.used_base_symbols() == ["A", "B"]
    with pytest.raises(UnboundSymbol):
        SLP.from_strings(("A", "B"), [("D", "C"), ("C", "A")])
    with pytest.raises(ValueError):
        SLP.from_strings(("A", "B"), [("C", "A"), ("C", "B")])
    with pytest.raises(ValueError):
        SLP.from_strings(("A", "B"), [("A", "B")])
    with pytest.raises(KeyError):
        slp.word("Z")


def test_evaluate_matches_direct_products():
    A, B = Q(SYM_A), Q(SYM_B)
    slp = SLP.from_strings(("A", "B"), [("C", "A^-1 B"), ("G", "B^3 A^2 B^2 A B^2"), ("K", "G C G^-1"), ("I", "1")])
    values = evaluate_slp(slp, {"A": A, "B": B})
    assert values["C"] == Q(SYM_C)
    G = B ** 3 @ A ** 2 @ B ** 2 @ A @ B ** 2
    assert values["G"] == G
    assert values["K"] == G @ Q(SYM_C) @ G.inverse()
    assert values["I"] == QMatrix.identity(4)
    assert values["A"] is A


def test_empty_slp_and_unused_base():
    assert evaluate_slp(SLP(("A", "B")), {"A": Q(SYM_A)}) == {"A": Q(SYM_A)}
    slp = SLP.from_strings(("A", "B"), [("X", "A^2")])
    assert evaluate_slp(slp, {"A": Q(SYM_A)})["X"] == Q(SYM_A) ** 2


def test_evaluation_errors():
    slp = SLP.from_strings(("A", "B"), [("C", "A^-1 B")])
    with pytest.raises(UnboundSymbol):
        evaluate_slp(slp, {"A": Q(SYM_A)})
    with pytest.raises(DimensionMismatch):
        evaluate_slp(slp, {"A": Q(SYM_A), "B": QMatrix.identity(3)})
    with pytest.raises(SingularBase):
        evaluate_slp(slp, {"A": Q(SYM_A), "B": QMatrix.zero(4)})
