"""Words of length n with a large MUF, grown from unbordered seeds."""

from unbordered import from_text, generate_all, generate_from_seed, muf, to_text
from unbordered.generator import generated_count_formula

seed = from_text("abccb")
batch = generate_from_seed(seed, 8)
print(f"seed {to_text(seed)}, j = {batch.j}: {len(batch.words)} words")
for w in batch.words:
    print(" ", to_text(w), "muf length", muf(w).length)

# the same counting identity for every seed length
print("\n i  n  generated  formula")
for n in (8, 10):
    for i in range((n + 1) // 2, n - 1):
        print(f"{i:2d} {n:2d} {len(generate_all(i, n, 2)):9d} {generated_count_formula(i, n, 2):8d}")
