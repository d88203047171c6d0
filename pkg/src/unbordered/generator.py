"""Words with a large MUF built from unbordered seeds.

A seed ``S`` (unbordered, ``|S| = i >= ceil(n/2)``) is extended to length
``n`` by appending prefixes of itself, ``S P_1 ... P_k``; ``S`` stays an
unbordered factor, so the MUF is at least ``i``.  Restricting the last
prefix to length ``>= n - i - j``, where the first letter of ``S`` differs
from the next ``j`` letters, makes all ``2^j`` extensions distinct, and
extensions of different seeds never collide.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .combinatorics import (
    count_unbordered,
    count_unbordered_jdiff_brute,
    enumerate_unbordered,
)
from .core import is_unbordered


@dataclass(frozen=True)
class GenBatch:
    seed: tuple[int, ...]
    n: int
    j: int
    words: tuple[tuple[int, ...], ...]


def j_value(w: Sequence) -> int:
    """Largest ``j`` such that ``w[0]`` differs from ``w[1], ..., w[j]``."""
    j = 0
    for c in w[1:]:
        if c == w[0]:
            break
        j += 1
    return j


def compositions(m: int, min_last: int = 1) -> Iterator[tuple[int, ...]]:
    """Yield every composition of ``m`` whose last part is ``>= min_last``."""
    if m < 1 or not 1 <= min_last <= m:
        raise ValueError(f"need m >= 1 and 1 <= min_last <= m, got {m}, {min_last}")
    for last in range(m, min_last - 1, -1):
        rest = m - last
        if rest == 0:
            yield (last,)
        else:
            for head in _all_compositions(rest):
                yield head + (last,)


def _all_compositions(m: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for tail in _all_compositions(m - first):
            yield (first,) + tail


def _check_lengths(i: int, n: int) -> None:
    if not (n + 1) // 2 <= i <= n:
        raise ValueError(f"need ceil(n/2) <= i <= n, got i={i}, n={n}")


def generate_from_seed(seed: Sequence[int], n: int) -> GenBatch:
    seed = tuple(seed)
    i = len(seed)
    if i == 0:
        raise ValueError("seed must be nonempty")
    _check_lengths(i, n)
    if not is_unbordered(seed):
        raise ValueError(f"seed {seed} is bordered")
    if i == n:
        return GenBatch(seed, n, 0, (seed,))
    rest = n - i
    j = min(j_value(seed), rest - 1)
    words = set()
    for parts in compositions(rest, rest - j):
        w = list(seed)
        for p in parts:
            w.extend(seed[:p])
        words.add(tuple(w))
    return GenBatch(seed, n, j, tuple(sorted(words)))


def generate_batches(i: int, n: int, sigma: int) -> Iterator[GenBatch]:
    _check_lengths(i, n)
    for seed in enumerate_unbordered(i, sigma):
        yield generate_from_seed(seed, n)


def generate_all(i: int, n: int, sigma: int) -> list[tuple[int, ...]]:
    """Sorted union of :func:`generate_from_seed` over all seeds of length ``i``."""
    words: set[tuple[int, ...]] = set()
    for batch in generate_batches(i, n, sigma):
        words.update(batch.words)
    return sorted(words)


def generated_count_formula(i: int, n: int, sigma: int) -> int:
    """b(i) + sum_{j=1}^{n-i-1} 2^(j-1) b_j(i), or b(i) when i >= n - 1.

    ``b_j`` is counted by brute force.
    """
    _check_lengths(i, n)
    total = count_unbordered(i, sigma)
    for j in range(1, n - i):
        total += 2 ** (j - 1) * count_unbordered_jdiff_brute(i, j, sigma)
    return total
