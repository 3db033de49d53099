"""Lukasiewicz words, the cycle lemma, and the permutation construction.

A word w_1..w_n over a tree alphabet draws a lattice path: step i moves by
f(w_i), the degree of the letter.  Heights are the prefix sums
s_i = f(w_1) + ... + f(w_i).  The word is *valid* when s_n = -1 and a
*Lukasiewicz word* when additionally every proper prefix stays >= 0, i.e.
the path dips below zero only on its very last step.  Lukasiewicz words are
exactly the preorder letter sequences of rooted planar trees.

The cycle lemma says each valid word has exactly one cyclic rotation that is
Lukasiewicz: rotate just past the first position where the path attains its
minimum.  Together with the block construction of :func:`permutation_to_valid_word`
(every permutation of 1..n gives a valid word, and each valid word is hit by
the same number prod_i n_i! of permutations) this yields the uniform sampler:
shuffle, build the valid word, rotate.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .alphabet import CountsLike, TreeAlphabet, degree_counts, is_f_valid
from .errors import ArityMismatchError, NotAPermutationError, NotAValidWordError, TupleNotValidError

__all__ = [
    "Classification",
    "LukasiewiczWord",
    "path_heights",
    "classify",
    "rotation_index",
    "to_lukasiewicz",
    "rotations_that_are_lukasiewicz",
    "permutation_to_valid_word",
]


class Classification(enum.Enum):
    """Outcome of :func:`classify`."""

    LUKASIEWICZ = "lukasiewicz"
    VALID_NOT_LUKASIEWICZ = "valid,not-lukasiewicz"
    INVALID = "invalid"


class LukasiewiczWord(tuple):
    """A word certified to be Lukasiewicz by one of the constructors here.

    It behaves exactly like the tuple of letter indices it is; the subclass
    only records that the certificate was checked.
    """

    __slots__ = ()


def _steps(word: Sequence[int], alphabet: TreeAlphabet) -> list[int]:
    degrees = alphabet.degrees
    k = alphabet.k
    out = []
    for letter in word:
        if not 0 <= letter < k:
            raise ArityMismatchError(
                f"letter index {letter} outside alphabet of {k} letters"
            )
        out.append(degrees[letter])
    return out


def path_heights(word: Sequence[int], alphabet: TreeAlphabet) -> list[int]:
    """Prefix sums s_1..s_n of the letter degrees (the lattice path)."""
    heights = []
    s = 0
    for step in _steps(word, alphabet):
        s += step
        heights.append(s)
    return heights


def classify(word: Sequence[int], alphabet: TreeAlphabet) -> Classification:
    """Sort a word into invalid / valid / Lukasiewicz, in one pass.

    The empty word is invalid (its degree total is 0, not -1).
    """
    steps = _steps(word, alphabet)
    n = len(steps)
    s = 0
    dipped = False
    for i, step in enumerate(steps):
        s += step
        if s < 0 and i < n - 1:
            dipped = True
    if s != -1:
        return Classification.INVALID
    return Classification.VALID_NOT_LUKASIEWICZ if dipped else Classification.LUKASIEWICZ


def rotation_index(word: Sequence[int], alphabet: TreeAlphabet) -> int:
    """Smallest 1-based position where the path attains its minimum.

    For a Lukasiewicz word this is n (the minimum -1 is only reached at the
    end), so the rotation below is the identity.
    """
    steps = _steps(word, alphabet)
    if sum(steps) != -1:
        raise NotAValidWordError(
            f"degree total {sum(steps)} != -1, word is not valid"
        )
    best = None
    best_pos = 0
    s = 0
    for i, step in enumerate(steps):
        s += step
        if best is None or s < best:
            best = s
            best_pos = i + 1
    return best_pos


def to_lukasiewicz(word: Sequence[int], alphabet: TreeAlphabet) -> LukasiewiczWord:
    """The unique cyclic rotation of a valid word that is Lukasiewicz.

    With l = rotation_index(word), the result is w_{l+1} .. w_n w_1 .. w_l.
    Lukasiewicz inputs come back unchanged (l = n).
    """
    ell = rotation_index(word, alphabet)
    w = tuple(word)
    return LukasiewiczWord(w[ell:] + w[:ell])


def rotations_that_are_lukasiewicz(word: Sequence[int], alphabet: TreeAlphabet) -> int:
    """How many of the n cyclic rotations of the word are Lukasiewicz.

    Quadratic-time oracle used to check the cycle lemma (the answer is 1 for
    every valid word); it deliberately shares no code with rotation_index.
    """
    w = tuple(word)
    n = len(w)
    hits = 0
    for shift in range(n):
        rotated = w[shift:] + w[:shift]
        if classify(rotated, alphabet) is Classification.LUKASIEWICZ:
            hits += 1
    return hits


def permutation_to_valid_word(
    sigma: Sequence[int], t: CountsLike, alphabet: TreeAlphabet
) -> tuple[int, ...]:
    """Fill a word from a permutation of 1..n by letter blocks.

    The first n_1 entries of sigma name the positions (1-based) that receive
    letter 0, the next n_2 entries the positions of letter 1, and so on.  The
    output is always a valid word, and each valid word of type t is produced
    by exactly prod_i n_i! permutations, so a uniform permutation gives a
    uniform valid word.
    """
    counts = degree_counts(t)
    if not is_f_valid(counts, alphabet):
        weighted = sum(c * d for c, d in zip(counts, alphabet.degrees))
        raise TupleNotValidError(
            f"counts {counts!r} have weighted degree sum {weighted}, need -1"
        )
    n = sum(counts)
    if len(sigma) != n or set(sigma) != set(range(1, n + 1)):
        raise NotAPermutationError(
            f"expected a permutation of 1..{n}, got {tuple(sigma)!r}"
        )
    word = [0] * n
    pos = 0
    for letter, count in enumerate(counts):
        for _ in range(count):
            word[sigma[pos] - 1] = letter
            pos += 1
    return tuple(word)
