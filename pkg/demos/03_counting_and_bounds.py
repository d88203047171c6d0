"""Exact counts of unbordered words against the closed-form bounds."""

from fractions import Fraction

from unbordered import (
    corollary2_lower_bound,
    count_unbordered,
    count_unbordered_brute,
    expected_muf_lower_bound_coeff,
    xi,
)
from unbordered.combinatorics import format_rounded

print(" i   b(i,2)  brute  b/2^i     lower bound")
for i in range(2, 17):
    b = count_unbordered(i, 2)
    print(f"{i:2d} {b:8d} {count_unbordered_brute(i, 2):6d}  {float(Fraction(b, 2**i)):.5f}  {corollary2_lower_bound(i, 2):8d}")

# the recurrence is exact for any length
b = count_unbordered(500, 3)
print("\nb(500, 3) has", len(str(b)), "digits; ratio", float(Fraction(b, 3**500)))

print("\nsigma   xi     1 - xi/sigma^4")
for s in range(2, 11):
    print(f"{s:5d}  {format_rounded(xi(s))}  {format_rounded(expected_muf_lower_bound_coeff(s), up=False)}")
