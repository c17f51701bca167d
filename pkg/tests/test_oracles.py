import pytest
from hypothesis import given, strategies as st

from lufarray import hook_naive, is_unbordered, luf_naive, mu, rank_reduce
from lufarray.oracles import bordered, hook_chain

from conftest import EXAMPLE, EXAMPLE_LUF


def cubic_luf(seq):
    # longest prefix of each suffix with no border, straight from the definition
    n = len(seq)
    return [max(m for m in range(1, n - i + 1) if not bordered(seq, i, i + m)) for i in range(n)]


def test_example():
    assert luf_naive(EXAMPLE) == EXAMPLE_LUF
    assert mu(EXAMPLE) == 20


def test_baabab():
    assert cubic_luf(rank_reduce("baabab").seq) == [3, 5, 2, 2, 2, 1]
    assert luf_naive("baabab") == [3, 5, 2, 2, 2, 1]
    assert mu("baabab") == 5


def test_unary():
    assert luf_naive("aaaa") == [1, 1, 1, 1]
    assert mu("aaaa") == 1
    with pytest.raises(ValueError):
        mu("")


def test_hook_naive():
    assert hook_naive(EXAMPLE, 17) + 1 == 13
    assert hook_naive(EXAMPLE, 0) == 0
    assert hook_chain(EXAMPLE, 17) == [2, 1, 2]
    with pytest.raises(IndexError):
        hook_naive(EXAMPLE, 20)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=40).map(rank_reduce))
def test_luf_naive_against_definition(w):
    luf = luf_naive(w)
    assert luf == cubic_luf(w.seq)
    for i, m in enumerate(luf):
        assert is_unbordered(w, i, i + m)
        assert i + m == w.n or bordered(w.seq, i, i + m + 1)
