import pytest
from hypothesis import given
from hypothesis import strategies as st

import corpus
from shiftbox import oracle
from shiftbox.errors import ParseError, PreconditionError
from shiftbox.nielsen import (
    GeneratingTuple,
    Invert,
    LeftMultiply,
    RightMultiply,
    Swap,
    apply_move,
    format_log,
    inverse_log,
    parse_log,
    parse_move,
    replay,
)
from shiftbox.words import Alphabet

AB = Alphabet(("a", "b"))


def tup(text):
    return GeneratingTuple.parse(text, AB)


def test_moves():
    s = tup("a,b")
    assert apply_move(s, LeftMultiply(1, 2, 1)) == tup("ba,b")
    assert apply_move(s, LeftMultiply(1, 2, -1)) == tup("Ba,b")
    assert apply_move(s, RightMultiply(2, 1, -1)) == tup("a,bA")
    assert apply_move(s, Invert(2)) == tup("a,B")
    assert apply_move(s, Swap(1, 2)) == tup("b,a")


@pytest.mark.parametrize("move", [LeftMultiply(1, 1, 1), RightMultiply(3, 1, 1), Invert(0), Swap(2, 2)])
def test_bad_moves(move):
    with pytest.raises(PreconditionError):
        apply_move(tup("a,b"), move)


def test_text_format():
    log = (LeftMultiply(1, 2, 1), RightMultiply(3, 1, -1), Invert(2), Swap(1, 3))
    text = format_log(log)
    assert text == "Lmul 1 2 +\nRmul 3 1 -\nInv 2\nSwap 1 3\n"
    assert parse_log(text) == log


@pytest.mark.parametrize("line", ["Lmul 1 2", "Lmul 1 2 x", "Inv", "Swap a b", "Foo 1"])
def test_bad_move_lines(line):
    with pytest.raises(ParseError):
        parse_move(line)


def test_tuple_parse_and_str():
    s = tup("a, bA ,e")
    assert str(s) == "(a, bA, e)"
    assert s.entry(3).is_identity


moves = st.one_of(
    st.builds(LeftMultiply, st.integers(1, 3), st.integers(1, 3), st.sampled_from([1, -1])),
    st.builds(RightMultiply, st.integers(1, 3), st.integers(1, 3), st.sampled_from([1, -1])),
    st.builds(Invert, st.integers(1, 3)),
    st.builds(Swap, st.integers(1, 3), st.integers(1, 3)),
).filter(lambda m: not (getattr(m, "target", 0) == getattr(m, "by", 1)
                        or getattr(m, "i", 0) == getattr(m, "j", 1)))
logs = st.lists(moves, max_size=15)


@given(logs)
def test_inverse_log_undoes(log):
    s = tup("a,b,ab")
    assert replay(replay(s, log), inverse_log(log)) == s


@given(logs)
def test_moves_preserve_generation(log):
    p, g = corpus.group("S3")
    s = GeneratingTuple.parse("a,b,e", p.alphabet)
    assert oracle.generates(g, list(replay(s, log)))


@given(logs)
def test_log_text_roundtrip(log):
    assert parse_log(format_log(log)) == tuple(log)
