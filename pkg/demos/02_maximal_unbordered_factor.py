"""The four MUF algorithms and the Assous-Pouzet words."""

from unbordered import (
    assous_pouzet,
    from_text,
    minimal_period,
    muf,
    muf_basic,
    muf_brute,
    muf_early_stop,
    muf_fast_path,
    to_text,
)

w = from_text("abaababaab")
for f in (muf_brute, muf_basic, muf_early_stop, muf):
    r = f(w)
    print(f"{f.__name__:15s} start={r.start} end={r.end} length={r.length} factor={to_text(r.factor(w))}")

# periodic words take the linear-time route
w = from_text("aabaabaabaab")
print("fast path on", to_text(w), "->", muf_fast_path(w), "period", minimal_period(w))

# MUF length 3m+6 stays below n/2 while the period is 4m+7
print("\n m   n  muf  period")
for m in range(1, 8):
    s = assous_pouzet(m)
    print(f"{m:2d} {len(s):3d} {muf(s).length:4d} {minimal_period(s):7d}")

# the early-stop variant builds only a handful of border arrays on random words
stats = {}
w = from_text("abbabaabbaabababbbaabababbabbbaababaabab")
muf_early_stop(w, stats)
print(f"\nearly stop built {stats['suffixes']} of {len(w)} border arrays")
