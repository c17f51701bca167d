import numpy as np
import pytest
from hypothesis import given, strategies as st

from lufarray import Word, rank_reduce
from lufarray.core import as_word


def test_rank_reduce_text():
    assert list(rank_reduce("banana")) == [2, 1, 3, 1, 3, 1]
    assert list(rank_reduce(b"aab")) == [1, 1, 2]
    assert list(rank_reduce((10, 3, 10))) == [2, 1, 2]


def test_rank_reduce_ndarray_matches_list():
    raw = np.array([7, 7, 2, 9, 2], dtype=np.uint8)
    assert rank_reduce(raw) == rank_reduce(raw.tolist())


def test_empty_word():
    w = rank_reduce("")
    assert w.n == 0 and w.sigma == 0 and w.seq == ()


def test_word_rejects_sparse_ranks():
    with pytest.raises(ValueError):
        Word([1, 3])
    with pytest.raises(ValueError):
        Word([0, 1])


def test_word_is_immutable():
    w = rank_reduce("abc")
    with pytest.raises(ValueError):
        w.symbols[0] = 2


def test_to_text_roundtrip_and_fallback():
    assert rank_reduce("abba").to_text() == "abba"
    assert Word(range(1, 29)).to_text().endswith("z<27><28>")


def test_as_word_passthrough():
    w = rank_reduce("ab")
    assert as_word(w) is w
    assert as_word("ab") == w


@given(st.lists(st.integers(-5, 40), max_size=40))
def test_rank_reduce_idempotent_and_order_preserving(xs):
    w = rank_reduce(xs)
    assert rank_reduce(list(w)) == w
    for a, b, x, y in zip(xs, xs[1:], w, w.seq[1:]):
        assert (a < b) == (x < y) and (a == b) == (x == y)
