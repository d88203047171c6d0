"""Borders, periods and maximal unbordered factors of strings."""

from .combinatorics import (
    CountTable,
    corollary2_lower_bound,
    count_unbordered,
    count_unbordered_brute,
    count_unbordered_jdiff_brute,
    enumerate_unbordered,
    expected_muf_lower_bound_coeff,
    lemma1_lower_bound,
    xi,
)
from .core import (
    border_array,
    from_text,
    is_unbordered,
    least_rotation,
    longest_unbordered_prefix,
    maximal_border_length,
    minimal_period,
    to_text,
)
from .generator import GenBatch, compositions, generate_all, generate_from_seed, j_value
from .muf import (
    MufResult,
    assous_pouzet,
    muf,
    muf_basic,
    muf_brute,
    muf_early_stop,
    muf_fast_path,
)

__version__ = "0.1.0"
