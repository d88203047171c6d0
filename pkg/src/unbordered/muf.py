"""Maximal unbordered factor (MUF) algorithms.

All functions return a :class:`MufResult` with 1-indexed inclusive
positions.  Among several longest unbordered factors the leftmost one is
reported, except by :func:`muf_fast_path` (and therefore :func:`muf`), whose
contract is on the length only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Word, _require_nonempty, least_rotation, minimal_period


@dataclass(frozen=True)
class MufResult:
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def factor(self, w: Word) -> Word:
        return w[self.start - 1 : self.end]


def _has_border(w: Word, lo: int, hi: int) -> bool:
    # direct prefix/suffix comparison on w[lo:hi]; independent of border arrays
    for k in range(1, hi - lo):
        if w[lo : lo + k] == w[hi - k : hi]:
            return True
    return False


def muf_brute(w: Word) -> MufResult:
    """Reference oracle: test every factor, longest first, leftmost first."""
    _require_nonempty(w)
    n = len(w)
    for length in range(n, 0, -1):
        for lo in range(n - length + 1):
            if not _has_border(w, lo, lo + length):
                return MufResult(lo + 1, lo + length)
    raise AssertionError("unreachable: single letters are unbordered")


def _suffix_unbordered_prefix(w: Word, i: int, buf: list[int]) -> int:
    """Build the border array of ``w[i:]`` into ``buf`` and return the
    length of its longest unbordered prefix (position of the rightmost zero)."""
    n = len(w)
    m = n - i
    buf[0] = 0
    k = 0
    last_zero = 1
    for t in range(1, m):
        c = w[i + t]
        while k and w[i + k] != c:
            k = buf[k - 1]
        if w[i + k] == c:
            k += 1
        else:
            last_zero = t + 1
        buf[t] = k
    return last_zero


def muf_basic(w: Word) -> MufResult:
    """Quadratic algorithm: border arrays of all ``n`` suffixes."""
    _require_nonempty(w)
    n = len(w)
    buf = [0] * n
    best_start, best_len = 0, 0
    for i in range(n):
        length = _suffix_unbordered_prefix(w, i, buf)
        if length > best_len:
            best_start, best_len = i, length
    return MufResult(best_start + 1, best_start + best_len)


def muf_early_stop(w: Word, stats: dict | None = None) -> MufResult:
    """Suffix scan that stops once the remaining suffixes are too short.

    Builds border arrays of ``w[i:]`` for ``i = 0, 1, ...`` and halts as soon
    as ``n - i`` does not exceed the best length found.  The expected number
    of arrays built is ``1 + E[n - b(S)]``, small for random words.

    If ``stats`` is given, ``stats["suffixes"]`` receives the number of
    border arrays built.
    """
    _require_nonempty(w)
    n = len(w)
    buf = [0] * n
    best_start, best_len = 0, 0
    i = 0
    while n - i > best_len:
        length = _suffix_unbordered_prefix(w, i, buf)
        if length > best_len:
            best_start, best_len = i, length
        i += 1
    if stats is not None:
        stats["suffixes"] = i
    return MufResult(best_start + 1, best_start + best_len)


def muf_fast_path(w: Word) -> MufResult | None:
    """Linear-time answer when the minimal period ``p`` is below ``n / 2``.

    Then the MUF length equals ``p`` and the least rotation of ``w[:p]`` is
    an unbordered factor of that length; it starts at offset ``r`` inside
    ``w[:2p]``.  Returns ``None`` when the period is too large.
    """
    _require_nonempty(w)
    p = minimal_period(w)
    if 2 * p >= len(w):
        return None
    r = least_rotation(w[:p])
    return MufResult(r + 1, r + p)


def muf(w: Word) -> MufResult:
    result = muf_fast_path(w)
    if result is None:
        result = muf_early_stop(w)
    return result


def assous_pouzet(m: int) -> tuple[int, ...]:
    """The word a^m b a^(m+1) b a^m b a^(m+2) b a^m b a^(m+1) b a^m (a=0, b=1).

    Length ``7m + 10``, MUF length ``3m + 6`` and minimal period ``4m + 7``:
    a MUF shorter than half the word that still differs from the period.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    runs = [m, m + 1, m, m + 2, m, m + 1, m]
    word: list[int] = []
    for idx, r in enumerate(runs):
        if idx:
            word.append(1)
        word.extend([0] * r)
    return tuple(word)
