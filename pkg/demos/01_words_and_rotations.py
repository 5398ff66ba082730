"""Words, rotations and palindromicity.

The whole package works over finite words of positive integers. This
script walks through the small algebra those words support: concatenation,
reversal, left rotation, the two palindromicity notions, and half-splits.

Run: python demos/01_words_and_rotations.py
"""
from markovwords import (
    concat,
    evenly_palindromic_shift,
    half_ceil,
    half_floor,
    is_oddly_palindromic,
    is_palindrome,
    reverse,
    rotate,
)

# Concatenation is plain juxtaposition; the empty word is its identity.
a, b = (1, 1), (2, 2)
print("concat:", concat(a, b), "identity:", concat(a, ()) == a)

# Rotation is zero-based: the letter at position i comes first.
w = (1, 1, 1, 1, 2, 2)
for i in range(len(w)):
    print(f"rotate by {i}: {rotate(w, i)}  palindrome={is_palindrome(rotate(w, i))}")

# That word is not a palindrome, but its rotation by 2 is. The smallest
# such rotation amount is what evenly_palindromic_shift reports.
print("smallest palindromic shift of", w, "->", evenly_palindromic_shift(w))

# Some even-length words admit no palindromic rotation at all:
print("shift of (1,2,1,2):", evenly_palindromic_shift((1, 2, 1, 2)))

# Odd-length words get the boolean form of the same question.
print("some rotation of (1,2,2) palindromic?", is_oddly_palindromic((1, 2, 2)))
print("some rotation of (1,2,3) palindromic?", is_oddly_palindromic((1, 2, 3)))

# Half-splits cut a word into floor and ceil halves; an odd middle letter
# lands in the ceil half, and the two halves always reassemble the word.
for w in [(2, 2), (1, 2, 1), (1, 2, 2, 1)]:
    lo, hi = half_floor(w), half_ceil(w)
    print(f"{w} -> floor={lo} ceil={hi} reassembles={concat(lo, hi) == w}")

# For an even-length palindrome the halves mirror each other.
p = (1, 2, 2, 1)
print("reverse(floor) == ceil for", p, ":", reverse(half_floor(p)) == half_ceil(p))
