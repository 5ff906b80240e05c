import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalex.errors import ParseError
from twistalex.group import LinPresentation, Presentation, Word
from twistalex.knots import BUILTIN_SOURCES, builtin
from twistalex.textio import KnotInput, emit_input, parse_input


@pytest.mark.parametrize("name", sorted(BUILTIN_SOURCES))
def test_builtin_round_trip(name):
    k = builtin(name)
    assert emit_input(k) == BUILTIN_SOURCES[name]
    assert parse_input(emit_input(k)) == k


def test_generic_presentation_and_comments():
    text = """# Wirtinger presentation
knot trefoil-w
presentation
gens: a b   # two meridians
rel: a b a b^-1 a^-1 b^-1
"""
    k = parse_input(text)
    assert not k.is_lin
    assert k.body.generators == ("a", "b")
    assert parse_input(emit_input(k)) == k


def test_rep_lines():
    k = parse_input(BUILTIN_SOURCES["figure8"] + "rep: 1 2\n")
    assert k.reps == ((1, 2),)
    assert parse_input(emit_input(k)) == k


def error_of(text):
    with pytest.raises(ParseError) as info:
        parse_input(text)
    return info.value


def test_unknown_generator_in_genus_one():
    e = error_of("knot k\nlin genus=1\npair: x1 | x3\npair: x2 | x2\n")
    assert e.line == 3
    assert e.column == 12
    assert "x3" in str(e)
    assert str(e).startswith("line 3, column 12:")


def test_mu_inside_pair():
    e = error_of("knot k\nlin genus=1\npair: x1 | x1\npair: mu x2 | x2\n")
    assert e.line == 4
    assert "mu" in str(e)


def test_wrong_pair_count():
    e = error_of("knot k\nlin genus=2\npair: x1 | x1\n")
    assert e.line == 3
    assert "4 pairs" in str(e)


def test_malformed_token_and_header():
    assert error_of("knot k\nlin genus=1\npair: x1^ | x1\npair: x2 | x2\n").line == 3
    assert error_of("knot k\nlin genus=one\n").line == 2
    assert error_of("").line == 1
    assert error_of("knot k\npresentation\ngens: a\nrel: a b\n").line == 4


def test_empty_pair_warns():
    k = parse_input("knot k\nlin genus=1\npair: |\npair: x1 | x2\n")
    assert any("line 3" in w for w in k.warnings)


names = ("x1", "x2", "mu")
x_words = st.lists(st.tuples(st.integers(0, 1), st.integers(-3, 3)), max_size=5).map(Word)
any_words = st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=6).map(Word)


@settings(max_examples=60, deadline=None)
@given(st.lists(x_words, min_size=4, max_size=4))
def test_lin_round_trip_property(ws):
    L = LinPresentation(1, ((ws[0], ws[1]), (ws[2], ws[3])))
    k = KnotInput("random", "lin", L)
    assert parse_input(emit_input(k)) == k


@settings(max_examples=60, deadline=None)
@given(st.lists(any_words, max_size=3))
def test_generic_round_trip_property(rels):
    k = KnotInput("random", "presentation", Presentation(names, tuple(rels)))
    assert parse_input(emit_input(k)) == k
