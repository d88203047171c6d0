"""Border arrays, periods and the least rotation of a word."""

from unbordered import border_array, from_text, least_rotation, minimal_period, to_text
from unbordered.core import rotate

word = from_text("ababa")
print("word:", to_text(word))
print("border array:", border_array(word))
print("minimal period:", minimal_period(word))

# a prefix is unbordered exactly where the border array is zero
for k, b in enumerate(border_array(word), 1):
    print(f"  prefix {to_text(word[:k]):6s} border {b}  {'unbordered' if b == 0 else ''}")

# the least rotation of a primitive word is a Lyndon word, hence unbordered
w = from_text("babaa")
r = least_rotation(w)
print("least rotation of", to_text(w), "is", to_text(rotate(w, r)), "at offset", r)
print("border array of the rotation:", border_array(rotate(w, r)))
