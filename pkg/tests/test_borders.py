import pytest
from hypothesis import given, strategies as st

from lufarray import border_array, is_unbordered, min_period, rank_reduce, unbordered_decomposition
from lufarray.borders import split
from lufarray.oracles import bordered

from conftest import EXAMPLE

words = st.lists(st.integers(1, 3), min_size=1, max_size=64).map(rank_reduce)


def naive_borders(seq):
    return [b for b in range(1, len(seq)) if seq[:b] == seq[-b:]]


def test_border_array_examples():
    assert border_array("aabaabaa")[-1] == 5
    assert border_array("aabaabaa") == [0, 1, 0, 1, 2, 3, 4, 5]  # naive enumeration below agrees
    assert border_array("abc") == [0, 0, 0]
    assert border_array("") == []


def test_min_period():
    assert min_period("aabaabaa") == 3
    assert min_period("ab") == 2
    # "b" is a border of baabab, so its period is 5 (naive check over all p)
    assert min_period("baabab") == 5
    assert [p for p in range(1, 7) if all(a == b for a, b in zip("baabab", "baabab"[p:]))][0] == 5
    with pytest.raises(ValueError, match="empty word has no period"):
        min_period("")


def test_is_unbordered():
    assert is_unbordered(EXAMPLE, 0, 20)
    assert all(is_unbordered("baabab", i, i + 1) for i in range(6))
    assert not is_unbordered("baabab", 0, 6)
    assert not is_unbordered("baabab", 0, 5)  # baaba has border ba
    assert is_unbordered("baabab", 1, 6)  # aabab, the longest unbordered factor
    for bad in [(-1, 2), (0, 7), (3, 2)]:
        with pytest.raises(IndexError):
            is_unbordered("baabab", *bad)


def test_decomposition_example():
    w = rank_reduce("baababbabab")
    parts = split(w, unbordered_decomposition(w))
    assert ["".join("ab"[c - 1] for c in p) for p in parts] == ["baa", "ba", "b", "ba", "ba", "b"]


def test_decomposition_trivial():
    assert unbordered_decomposition("aabbb") == [5]
    assert unbordered_decomposition("") == []


@given(words)
def test_border_chain_enumerates_all_borders(w):
    b = border_array(w)
    for m in range(1, w.n + 1):
        chain, k = [], b[m - 1]
        while k:
            chain.append(k)
            k = b[k - 1]
        assert sorted(chain) == naive_borders(w.seq[:m])


@given(words)
def test_decomposition_pieces(w):
    pieces = unbordered_decomposition(w)
    assert sum(pieces) == w.n
    parts = split(w, pieces)
    head = parts[0]
    for p in parts:
        assert head[:len(p)] == p
        assert not bordered(p, 0, len(p))
    if len(pieces) > 1:
        assert parts[-1] == w.seq[:min(naive_borders(w.seq))]


@given(words)
def test_mu_at_most_min_period(w):
    from lufarray import luf_naive
    assert max(luf_naive(w)) <= min_period(w)
