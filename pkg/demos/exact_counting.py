"""Exact counting against brute force: multinomials, the division by n,
and the classical Motzkin and Catalan sequences as corollaries.
"""

from lukatree import (
    DegreeTuple,
    binary_alphabet,
    enumerate_lukasiewicz,
    enumerate_valid_words,
    motzkin_alphabet,
    motzkin_tuple,
    tutte_count,
    valid_word_count,
)

motzkin = motzkin_alphabet()
binary = binary_alphabet()

t = DegreeTuple((3, 2, 2))
n = t.total
print(f"counts tuple (3,2,2): {n} nodes, of which 3 leaves, 2 unary, 2 binary")
print(f"valid words: n!/prod n_i!     = {valid_word_count(t, motzkin)}")
print(f"trees:       (n-1)!/prod n_i! = {tutte_count(t, motzkin)}")
print(f"the ratio is exactly n = {n}: the cycle lemma groups the valid words")
print("into orbits of size n, one tree each")

small = DegreeTuple((2, 1, 1))
print(f"\nsmall enough to list: tuple (2,1,1) has {tutte_count(small, motzkin)} trees")
for word in enumerate_lukasiewicz(small, motzkin):
    print(f"  {motzkin.format_word(word)}")
print(f"and {valid_word_count(small, motzkin)} valid words in total:")
print("  " + " ".join(motzkin.format_word(w) for w in enumerate_valid_words(small, motzkin)))

print("\nsumming tree counts over all tuples with n nodes gives the")
print("Motzkin numbers:")
for n in range(1, 13):
    tuples = [motzkin_tuple(n, u) for u in range(n) if (n - u) % 2 == 1]
    total = sum(tutte_count(t, motzkin) for t in tuples)
    print(f"  n = {n:2d}: {total:5d}  (from {len(tuples)} tuples)")

print("\nand the pure-binary tuples (b+1 leaves, b binary) give the Catalan")
print("numbers:")
for b in range(7):
    print(f"  b = {b}: {tutte_count(DegreeTuple((b + 1, b)), binary)}")
