from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slicedepth.errors import EmptyList, NotationError, NotEven
from slicedepth.notation import PretzelParams, parse_notation, render_notation
from slicedepth.rational import EvenCF


@pytest.mark.parametrize("raw, expected", [
    ("C(4, -2)", EvenCF([4, -2])),
    ("  C( 4 ,4 ) ", EvenCF([4, 4])),
    ("17/4", Fraction(17, 4)),
    ("-7 / 2", Fraction(-7, 2)),
    ("+9/2", Fraction(9, 2)),
    ("P(5,9,11)", PretzelParams(5, 9, 11)),
    ("P(-3, 5, 7)", PretzelParams(-3, 5, 7)),
])
def test_parse(raw, expected):
    result = parse_notation(raw)
    assert result.parsed == expected
    assert result.raw == raw


@pytest.mark.parametrize("raw, column", [
    ("C()", 3),
    ("C(  )", 5),
])
def test_empty_list(raw, column):
    with pytest.raises(EmptyList) as info:
        parse_notation(raw)
    assert info.value.column == column


@pytest.mark.parametrize("raw, column", [
    ("C(4,", 5),
    ("C(4;2)", 4),
    ("C 4,2", 3),
    ("17/", 4),
    ("17/x", 4),
    ("17/0", 4),
    ("17/4 x", 6),
    ("Q(1)", 1),
    ("", 1),
    ("P(5,9)", 2),
])
def test_syntax_errors_report_column(raw, column):
    with pytest.raises(NotationError) as info:
        parse_notation(raw)
    assert info.value.column == column


def test_c_notation_requires_even_entries():
    with pytest.raises(NotEven):
        parse_notation("C(3,1)")


even = st.integers(-10**6, 10**6).filter(bool).map(lambda n: 2 * n)
canonical = st.one_of(
    st.lists(even, min_size=1, max_size=8).map(EvenCF),
    st.fractions(),
    st.tuples(st.integers(), st.integers(), st.integers()).map(lambda t: PretzelParams(*t)),
)


@given(canonical)
def test_render_parse_roundtrip(value):
    text = render_notation(value)
    assert parse_notation(text).parsed == value
    assert render_notation(parse_notation(text).parsed) == text
