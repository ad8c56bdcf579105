import pytest
from hypothesis import given, strategies as st

from gentle_strings.errors import InvalidString
from gentle_strings.words import Letter, StringWord, concat, inverse, parse_word

names = st.sampled_from(["a", "b", "be", "al", "x0"])
letters = st.builds(Letter, names, st.booleans())
words = st.one_of(
    st.lists(letters, min_size=1, max_size=6).map(lambda xs: StringWord(tuple(xs))),
    st.builds(StringWord.trivial, st.sampled_from(["1", "2", "t3"]), st.sampled_from([1, -1])),
)


def test_parse_mixed_word():
    w = parse_word("be al- be-")
    assert w.letters == (Letter("be"), Letter("al", True), Letter("be", True))
    assert str(w) == "be al- be-"


def test_parse_trivial():
    assert parse_word("1_3") == StringWord.trivial("3", 1)
    assert parse_word("1_t2-") == StringWord.trivial("t2", -1)


@pytest.mark.parametrize("text", ["", "   ", "1_", "a - b"])
def test_parse_rejects(text):
    with pytest.raises(InvalidString):
        parse_word(text)


def test_inverse_of_trivial_flips_sign():
    assert StringWord.trivial("2", 1).inverse() == StringWord.trivial("2", -1)


def test_direct_and_inverse_flags():
    assert parse_word("a b").is_direct
    assert parse_word("a- b-").is_inverse
    w = parse_word("a b-")
    assert not w.is_direct and not w.is_inverse


def test_constructor_invariants():
    with pytest.raises(InvalidString):
        StringWord(())
    with pytest.raises(InvalidString):
        StringWord((Letter("a"),), vertex="1")
    with pytest.raises(InvalidString):
        StringWord.trivial("1", 0)
    with pytest.raises(InvalidString):
        StringWord.of([])


def test_concat_skips_trivial():
    got = concat(parse_word("a"), StringWord.trivial("2"), Letter("b", True), [Letter("c")])
    assert got == (Letter("a"), Letter("b", True), Letter("c"))


@given(words)
def test_inverse_is_an_involution(w):
    assert inverse(inverse(w)) == w
    assert len(w.inverse()) == len(w)


@given(words)
def test_literal_round_trip(w):
    assert parse_word(str(w)) == w
