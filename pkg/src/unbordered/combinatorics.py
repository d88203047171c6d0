"""Exact counts of unbordered words and closed-form lower bounds.

Notation: ``b(i, sigma)`` is the number of unbordered words of length ``i``;
``b_j(i, sigma)`` counts those whose first letter differs from each of the
next ``j`` letters.  Counts are Python ints, bounds are ``Fraction``.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .core import is_unbordered

ENUMERATION_LIMIT = 2**26


def _guard(i: int, sigma: int) -> None:
    if i < 1:
        raise ValueError(f"length must be >= 1, got {i}")
    if sigma < 2:
        raise ValueError(f"sigma must be >= 2, got {sigma}")
    if sigma**i > ENUMERATION_LIMIT:
        raise ValueError(
            f"enumerating {sigma}^{i} words exceeds the limit of {ENUMERATION_LIMIT}"
        )


def enumerate_unbordered(i: int, sigma: int) -> Iterator[tuple[int, ...]]:
    """Yield every unbordered word of length ``i`` in lexicographic order."""
    _guard(i, sigma)
    for w in product(range(sigma), repeat=i):
        if is_unbordered(w):
            yield w


def count_unbordered_brute(i: int, sigma: int) -> int:
    return sum(1 for _ in enumerate_unbordered(i, sigma))


def count_unbordered_jdiff_brute(i: int, j: int, sigma: int) -> int:
    """Brute-force ``b_j(i, sigma)``."""
    if j < 1 or i < j + 1:
        raise ValueError(f"need j >= 1 and i >= j + 1, got i={i}, j={j}")
    _guard(i, sigma)
    total = 0
    for w in product(range(sigma), repeat=i):
        first = w[0]
        if first in w[1 : j + 1]:
            continue
        if is_unbordered(w):
            total += 1
    return total


def unbordered_counts(max_len: int, sigma: int) -> list[int]:
    """``[b(1), ..., b(max_len)]`` via the doubling recurrence.

    b(1) = s, b(2) = s^2 - s, b(2k+1) = s b(2k), b(2k) = s b(2k-1) - b(k),
    which follows from building unbordered words by middle insertion.
    """
    if sigma < 2:
        raise ValueError(f"sigma must be >= 2, got {sigma}")
    b = [0, sigma, sigma * sigma - sigma]
    for i in range(3, max_len + 1):
        if i % 2:
            b.append(sigma * b[i - 1])
        else:
            b.append(sigma * b[i - 1] - b[i // 2])
    return b[1 : max_len + 1]


def count_unbordered(i: int, sigma: int) -> int:
    if i < 1:
        raise ValueError(f"length must be >= 1, got {i}")
    return unbordered_counts(i, sigma)[-1]


def lemma1_lower_bound(i: int, j: int, sigma: int) -> int:
    """(s-1)^(j+1) s^(i-j-1) - s^(i-2); frequently negative for sigma = 2."""
    if i < j + 1:
        raise ValueError(f"need i >= j + 1, got i={i}, j={j}")
    return (sigma - 1) ** (j + 1) * sigma ** (i - j - 1) - sigma ** (i - 2)


def corollary2_lower_bound(i: int, sigma: int) -> int:
    if i < 2:
        raise ValueError(f"need i >= 2, got {i}")
    return sigma**i - sigma ** (i - 1) - sigma ** (i - 2)


def xi(sigma: int) -> Fraction:
    if sigma < 2:
        raise ValueError(f"sigma must be >= 2, got {sigma}")
    if sigma == 2:
        return Fraction(8)
    s = sigma
    return Fraction(2 * s**3 - 2 * s**2, (s - 2) * (s * s - 2 * s + 2))


def expected_muf_lower_bound_coeff(sigma: int) -> Fraction:
    """Linear coefficient ``c`` in ``E[b(S)] >= c * n + O(1)``."""
    return 1 - xi(sigma) / Fraction(sigma) ** 4


def format_rounded(x: Fraction, places: int = 3, up: bool = True) -> str:
    """Render ``x`` with ``places`` decimals, rounding toward +inf or -inf."""
    scaled = x * 10**places
    q = math.ceil(scaled) if up else math.floor(scaled)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


@dataclass
class CountTable:
    """Exact ``b(i)`` for ``i <= max_len`` and brute-force ``b_j(i)`` values."""

    sigma: int
    max_len: int
    b: list[int] = field(default_factory=list)
    bj: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def build(cls, max_len: int, sigma: int, with_bj: bool = False) -> CountTable:
        table = cls(sigma, max_len, [0] + unbordered_counts(max_len, sigma))
        if with_bj:
            for i in range(2, max_len + 1):
                for j in range(1, i):
                    table.bj[i, j] = count_unbordered_jdiff_brute(i, j, sigma)
        return table

    def ratio(self, i: int) -> Fraction:
        return Fraction(self.b[i], self.sigma**i)
