from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unbordered.core import (
    border_array,
    check_word,
    from_text,
    is_unbordered,
    least_rotation,
    longest_unbordered_prefix,
    maximal_border_length,
    minimal_period,
    rotate,
    to_text,
)

from .conftest import all_words, naive_borders, naive_period


@pytest.mark.parametrize(
    "word, expected",
    [
        ("ababa", [0, 0, 1, 2, 3]),
        ("a", [0]),
        ("aabaab", [0, 1, 0, 1, 2, 3]),
        ("", []),
    ],
)
def test_border_array_examples(word, expected):
    assert border_array(word) == expected
    assert border_array(from_text(word)) == expected


@pytest.mark.parametrize("word, expected", [("ababa", 3), ("abc", 0), ("aaaa", 3)])
def test_maximal_border_length(word, expected):
    assert maximal_border_length(word) == expected


@pytest.mark.parametrize("word, expected", [("ababa", 2), ("abc", 3), ("aaaa", 1)])
def test_minimal_period(word, expected):
    assert minimal_period(word) == expected


@pytest.mark.parametrize("word, expected", [("aaabab", True), ("ababa", False), ("a", True)])
def test_is_unbordered(word, expected):
    assert is_unbordered(word) is expected


@pytest.mark.parametrize("word, expected", [("ababa", 2), ("abc", 3), ("aaaa", 1)])
def test_longest_unbordered_prefix(word, expected):
    assert longest_unbordered_prefix(word) == expected


@pytest.mark.parametrize("word, expected", [("ba", 1), ("aab", 0), ("abaab", 2)])
def test_least_rotation_examples(word, expected):
    assert least_rotation(word) == expected


@pytest.mark.parametrize(
    "func",
    [maximal_border_length, minimal_period, is_unbordered, longest_unbordered_prefix, least_rotation],
)
def test_empty_word_rejected(func):
    with pytest.raises(ValueError):
        func("")


@pytest.mark.parametrize("max_len, sigma", [(14, 2), (9, 3)])
def test_border_array_matches_quadratic_oracle(max_len, sigma):
    for n in range(1, max_len + 1):
        for w in product(range(sigma), repeat=n):
            b = border_array(w)
            assert b == [max(naive_borders(w[:i]), default=0) for i in range(1, n + 1)]
            assert b[0] == 0
            for i in range(1, n):
                assert b[i] < i + 1
                assert b[i] <= b[i - 1] + 1


def test_period_and_rotation_exhaustive():
    for w in all_words(10, 2):
        p = minimal_period(w)
        assert p == naive_period(w)
        assert (longest_unbordered_prefix(w) == len(w)) == is_unbordered(w)
        rots = [rotate(w, r) for r in range(len(w))]
        r = least_rotation(w)
        assert r == rots.index(min(rots))
        if p == len(w):
            assert is_unbordered(rotate(w, r))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_border_array_structure(letters):
    b = border_array(letters)
    assert b[0] == 0
    assert all(0 <= b[i] <= i for i in range(len(b)))
    assert all(b[i + 1] <= b[i] + 1 for i in range(len(b) - 1))
    assert b[-1] == max(naive_borders(letters), default=0)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=60))
def test_least_rotation_is_minimal(letters):
    w = tuple(letters)
    r = least_rotation(w)
    rots = [rotate(w, k) for k in range(len(w))]
    assert r == rots.index(min(rots))


def test_text_round_trip():
    assert from_text("abc") == (0, 1, 2)
    assert to_text((0, 1, 2)) == "abc"
    with pytest.raises(ValueError, match="'c'"):
        from_text("abc", sigma=2)
    check_word((0, 1, 1), 2)
    with pytest.raises(ValueError):
        check_word((0, 2), 2)
