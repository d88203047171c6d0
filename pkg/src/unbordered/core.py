"""Border arrays, periods and related primitives.

Words are plain sequences: a ``str``, or a tuple/list of small integers in
``[0, sigma)``.  Every function here only compares letters for equality (and
ordering, for :func:`least_rotation`), so both representations work.

Positions in returned values follow the 1-indexed convention: ``B[i]`` in the
docs below means ``border_array(w)[i - 1]``.
"""

from __future__ import annotations

import string
from collections.abc import Sequence
from typing import Any

Word = Sequence[Any]

ALPHABET = string.ascii_lowercase


def from_text(text: str, sigma: int | None = None) -> tuple[int, ...]:
    """Map ``'a', 'b', ...`` to ``0, 1, ...``.

    Raises ``ValueError`` naming the first character outside the alphabet
    (``a`` .. the ``sigma``-th letter; ``sigma`` defaults to 26).
    """
    sigma = len(ALPHABET) if sigma is None else sigma
    if not 1 <= sigma <= len(ALPHABET):
        raise ValueError(f"sigma must be in [1, {len(ALPHABET)}], got {sigma}")
    letters = []
    for ch in text:
        k = ALPHABET.find(ch)
        if k < 0 or k >= sigma:
            raise ValueError(
                f"invalid letter {ch!r}: alphabet is {ALPHABET[0]}..{ALPHABET[sigma - 1]}"
            )
        letters.append(k)
    return tuple(letters)


def to_text(word: Sequence[int]) -> str:
    return "".join(ALPHABET[c] for c in word)


def check_word(word: Sequence[int], sigma: int) -> None:
    """Raise ``ValueError`` unless every letter is an integer in ``[0, sigma)``."""
    if sigma < 1:
        raise ValueError(f"sigma must be >= 1, got {sigma}")
    for pos, c in enumerate(word, 1):
        if not 0 <= c < sigma:
            raise ValueError(f"letter {c!r} at position {pos} outside [0, {sigma})")


def _require_nonempty(w: Word) -> None:
    if len(w) == 0:
        raise ValueError("operation undefined for the empty word")


def border_array(w: Word) -> list[int]:
    """Return the border array (KMP failure function) of ``w``.

    Entry ``k`` (0-based) is the length of the longest proper border of
    ``w[:k + 1]``.  Linear time; the empty word gives ``[]``.

    >>> border_array("ababa")
    [0, 0, 1, 2, 3]
    """
    n = len(w)
    b = [0] * n
    k = 0
    for i in range(1, n):
        c = w[i]
        while k and w[k] != c:
            k = b[k - 1]
        if w[k] == c:
            k += 1
        b[i] = k
    return b


def maximal_border_length(w: Word) -> int:
    _require_nonempty(w)
    return border_array(w)[-1]


def minimal_period(w: Word) -> int:
    """Smallest ``p >= 1`` with ``w[i] == w[i + p]`` for every valid ``i``."""
    _require_nonempty(w)
    return len(w) - border_array(w)[-1]


def is_unbordered(w: Word) -> bool:
    _require_nonempty(w)
    return border_array(w)[-1] == 0


def longest_unbordered_prefix(w: Word) -> int:
    """Length of the longest unbordered prefix, i.e. the rightmost zero of ``B``."""
    _require_nonempty(w)
    b = border_array(w)
    j = len(b)
    while b[j - 1]:
        j -= 1
    return j


def least_rotation(w: Word) -> int:
    """Offset ``r`` such that ``w[r:] + w[:r]`` is the least rotation of ``w``.

    Runs Duval's Lyndon factorization over ``ww`` in linear time.  When
    several offsets give the least rotation (``w`` a proper power) the
    smallest one is returned.  For primitive ``w`` the rotation is a Lyndon
    word, hence unbordered.
    """
    _require_nonempty(w)
    n = len(w)
    s = list(w) * 2
    i = ans = 0
    while i < n:
        ans = i
        j, k = i + 1, i
        while j < 2 * n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            i += j - k
    return ans


def rotate(w: Word, r: int) -> Word:
    return w[r:] + w[:r]
