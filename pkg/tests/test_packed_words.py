import pytest
from hypothesis import given, strategies as st

from wpposets import (
    FUBINI,
    CapacityError,
    InvalidWordError,
    PackedWord,
    from_quasi_order,
    is_packed,
    iter_packed_words,
    pack,
    packed_words,
    to_quasi_order,
)
from helpers import brute_packed_words

words_st = st.lists(st.integers(min_value=1, max_value=10), max_size=10)


def test_is_packed():
    assert is_packed(())
    assert is_packed((2, 1, 2, 3, 1, 2))
    assert not is_packed((2, 1, 3, 5))
    assert not is_packed((2, 2))
    assert not is_packed((0, 1))


def test_constructor_rejects_unpacked():
    with pytest.raises(InvalidWordError):
        PackedWord((1, 3))


def test_pack():
    assert pack(()) == PackedWord()
    assert pack((2, 2)) == PackedWord((1, 1))
    assert pack((5, 2, 5, 9)) == PackedWord((2, 1, 2, 3))


@given(words_st)
def test_pack_idempotent(letters):
    once = pack(letters)
    assert pack(once) == once


@given(words_st)
def test_pack_preserves_comparisons(letters):
    packed = pack(letters)
    for i in range(len(letters)):
        for j in range(len(letters)):
            assert (letters[i] < letters[j]) == (packed[i] < packed[j])
            assert (letters[i] == letters[j]) == (packed[i] == packed[j])


def test_enumerate_small():
    assert packed_words(0) == [PackedWord()]
    assert [str(w) for w in packed_words(2)] == ["11", "12", "21"]
    degree3 = {str(w) for w in packed_words(3)}
    assert degree3 == {
        "321", "221", "312", "231", "211", "212", "213",
        "111", "132", "121", "112", "123", "122",
    }


def test_enumerate_is_sorted_lexicographically():
    for n in range(6):
        words = packed_words(n)
        assert words == sorted(words, key=tuple)
        assert len(set(words)) == len(words)


def test_enumerate_matches_bruteforce():
    for n in range(7):
        assert packed_words(n) == brute_packed_words(n)
    assert len(packed_words(7)) == len(brute_packed_words(7)) == FUBINI[7]


def test_enumerate_streams():
    gen = iter_packed_words(4)
    assert str(next(gen)) == "1111"


def test_capacity_guard():
    with pytest.raises(CapacityError):
        packed_words(10)
    assert len(packed_words(3, limit=3)) == 13


def test_quasi_order_examples():
    w = PackedWord.parse("212312")
    assert to_quasi_order(w) == (
        frozenset({2, 5}),
        frozenset({1, 3, 6}),
        frozenset({4}),
    )
    assert from_quasi_order(({2, 5}, {1, 3, 6}, {4})) == w
    assert to_quasi_order(()) == ()
    assert from_quasi_order(()) == PackedWord()
    assert to_quasi_order((1, 1)) == (frozenset({1, 2}),)
    assert from_quasi_order(({1}, {2})) == PackedWord((1, 2))


def test_quasi_order_roundtrip_exhaustive():
    for n in range(7):
        for w in iter_packed_words(n):
            assert from_quasi_order(to_quasi_order(w)) == w


def test_quasi_order_blocks_from_raw_surjections():
    # ordered set partitions built straight from function fibers
    import itertools

    for n in range(5):
        for k in range(n + 1):
            for f in itertools.product(range(1, k + 1), repeat=n):
                if set(f) != set(range(1, k + 1)):
                    continue
                blocks = [
                    {i for i in range(1, n + 1) if f[i - 1] == p}
                    for p in range(1, k + 1)
                ]
                assert from_quasi_order(blocks) == PackedWord(f)


def test_from_quasi_order_validation():
    with pytest.raises(ValueError):
        from_quasi_order(({1}, {1}))  # overlap
    with pytest.raises(ValueError):
        from_quasi_order(({1}, {3}))  # gap: 2 missing, 3 out of range
    with pytest.raises(ValueError):
        from_quasi_order(({1, 2}, set()))  # empty block


def test_text_forms():
    assert PackedWord.parse("212312").text() == "212312"
    assert PackedWord.parse("2,1,2,3,1,2") == PackedWord.parse("212312")
    assert PackedWord.parse("") == PackedWord()
    big = PackedWord(range(1, 12))
    assert big.text() == "1,2,3,4,5,6,7,8,9,10,11"
    assert PackedWord.parse(big.text()) == big
    with pytest.raises(InvalidWordError):
        PackedWord.parse("2x1")
    with pytest.raises(InvalidWordError):
        PackedWord.parse("13")  # parses but is not packed


@given(words_st)
def test_parse_text_roundtrip(letters):
    w = pack(letters)
    assert PackedWord.parse(w.text()) == w
