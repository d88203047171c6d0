from fractions import Fraction
from itertools import product

import pytest

from unbordered.combinatorics import (
    ENUMERATION_LIMIT,
    CountTable,
    corollary2_lower_bound,
    count_unbordered,
    count_unbordered_brute,
    count_unbordered_jdiff_brute,
    enumerate_unbordered,
    expected_muf_lower_bound_coeff,
    format_rounded,
    lemma1_lower_bound,
    xi,
)
from unbordered.core import from_text

from .conftest import naive_borders


@pytest.mark.parametrize(
    "i, sigma, expected",
    # b(6,2), b(8,2), b(10,3) frozen from a slice-comparison enumeration
    [(2, 2, 2), (1, 3, 3), (1, 2, 2), (6, 2, 20), (8, 2, 74), (10, 3, 32958)],
)
def test_counts(i, sigma, expected):
    assert count_unbordered(i, sigma) == expected
    if sigma**i <= 3**10:
        assert count_unbordered_brute(i, sigma) == expected


def test_brute_uses_independent_oracle():
    for i in range(1, 9):
        naive = sum(1 for w in product(range(2), repeat=i) if not naive_borders(w))
        assert count_unbordered_brute(i, 2) == naive


@pytest.mark.parametrize("max_len, sigma", [(16, 2), (10, 3), (8, 4)])
def test_recurrence_matches_brute(max_len, sigma):
    for i in range(1, max_len + 1):
        assert count_unbordered(i, sigma) == count_unbordered_brute(i, sigma), i


def test_big_counts_are_exact():
    b = count_unbordered(200, 5)
    assert b > 2**400
    assert b >= corollary2_lower_bound(200, 5)
    assert Fraction(b, 5**200) <= Fraction(count_unbordered(199, 5), 5**199)


def test_guard():
    with pytest.raises(ValueError):
        count_unbordered_brute(27, 2)
    with pytest.raises(ValueError):
        list(enumerate_unbordered(17, 3))
    assert 2**26 == ENUMERATION_LIMIT
    with pytest.raises(ValueError):
        count_unbordered_jdiff_brute(3, 3, 2)


def test_jdiff():
    assert count_unbordered_jdiff_brute(2, 1, 2) == 2
    assert count_unbordered_jdiff_brute(6, 2, 2) == 2
    assert count_unbordered_jdiff_brute(4, 1, 2) == 2
    assert count_unbordered_jdiff_brute(7, 2, 3) == 504
    w = from_text("abcacbb")
    assert not naive_borders(w) and w[0] not in w[1:3]


def test_lemma1_and_corollary2_values():
    assert lemma1_lower_bound(4, 1, 3) == 27
    assert lemma1_lower_bound(5, 2, 3) == 45
    assert lemma1_lower_bound(6, 3, 2) < 0
    assert corollary2_lower_bound(2, 2) == 1
    assert corollary2_lower_bound(8, 2) == 64
    assert corollary2_lower_bound(4, 3) == 45


@pytest.mark.parametrize("max_len, sigma", [(16, 2), (10, 3), (8, 4)])
def test_nielsen_bounds(max_len, sigma):
    table = CountTable.build(max_len, sigma)
    for i in range(2, max_len + 1):
        assert table.ratio(i) <= table.ratio(i - 1)
        assert table.b[i] >= corollary2_lower_bound(i, sigma)
    # the limit satisfies alpha >= 1 - 1/s - 1/s^2, so every ratio does too
    assert table.ratio(max_len) >= 1 - Fraction(1, sigma) - Fraction(1, sigma**2)


@pytest.mark.parametrize("max_len, sigma", [(12, 2), (8, 3), (7, 4)])
def test_lemma1_holds(max_len, sigma):
    table = CountTable.build(max_len, sigma, with_bj=True)
    for (i, j), count in table.bj.items():
        assert count <= table.b[i]
        assert count >= max(lemma1_lower_bound(i, j, sigma), 0)


def test_xi_table():
    assert xi(2) == 8
    assert xi(3) == Fraction(36, 5)
    assert xi(4) == Fraction(24, 5)
    assert xi(5) == Fraction(200, 51)
    got = [(format_rounded(xi(s)), format_rounded(expected_muf_lower_bound_coeff(s), up=False)) for s in (2, 3, 4, 5)]
    assert got == [("8.000", "0.500"), ("7.200", "0.911"), ("4.800", "0.981"), ("3.922", "0.993")]


def test_xi_decreases_towards_two():
    values = [xi(s) for s in range(3, 60)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert abs(float(xi(10_000)) - 2) < 1e-3


def test_format_rounded():
    assert format_rounded(Fraction(1, 3)) == "0.334"
    assert format_rounded(Fraction(1, 3), up=False) == "0.333"
    assert format_rounded(Fraction(-1, 3), up=False) == "-0.334"
    assert format_rounded(Fraction(2)) == "2.000"


def test_enumerate_unbordered():
    assert list(enumerate_unbordered(2, 2)) == [(0, 1), (1, 0)]
    assert list(enumerate_unbordered(3, 2)) == [(0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 1, 0)]
    assert from_text("aaabab") in set(enumerate_unbordered(6, 2))
    for i, sigma in [(10, 2), (6, 3)]:
        words = list(enumerate_unbordered(i, sigma))
        assert words == sorted(set(words))
        assert len(words) == count_unbordered_brute(i, sigma)
