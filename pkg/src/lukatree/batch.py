"""Vectorized replicate engine behind the height-scan experiments.

The statistical experiments need 1e8+ node draws, far beyond what the
bit-by-bit scalar pipelines can deliver in CPython, so this module runs many
replicate trees of one counts tuple side by side as numpy rows:

* permutation method: each row is an independent uniform shuffle of the
  letter multiset (numpy's Fisher-Yates with unbiased bounded integers);
* dichotomic method: each position draws its letter with probability
  proportional to the remaining counts, via exact uniform integers.

Per-row word distributions are therefore *exactly* those of the scalar
pipelines; what this engine does not model is the fair-bit cost, so every
bit-counting claim in the package is measured on the scalar side.  Rotation
to the Lukasiewicz representative and the height computation are plain array
re-implementations of the scalar ones and are cross-checked against them in
the tests, word for word.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "batch_valid_words",
    "batch_rotate",
    "batch_heights",
    "sample_heights",
]


def batch_valid_words(
    rng: np.random.Generator,
    counts: tuple[int, ...],
    reps: int,
    method: str = "dichotomic",
) -> np.ndarray:
    """reps uniform valid words of the multiset `counts`, one per row (int8)."""
    k = len(counts)
    n = sum(counts)
    if n < 1 or k > 127:
        raise ValueError("need a non-empty multiset over at most 127 letters")
    if method == "permutation":
        base = np.repeat(np.arange(k, dtype=np.int8), counts)
        words = np.tile(base, (reps, 1))
        rng.permuted(words, axis=1, out=words)
        return words
    if method != "dichotomic":
        raise ValueError(f"unknown method {method!r}")
    remaining = np.tile(np.asarray(counts, dtype=np.int64), (reps, 1))
    words = np.empty((reps, n), dtype=np.int8)
    rows = np.arange(reps)
    for pos in range(n):
        total = n - pos
        v = rng.integers(0, total, size=reps)
        cum = np.cumsum(remaining, axis=1)
        # letter = number of interior cumulative boundaries <= v
        letter = (v[:, None] >= cum[:, :-1]).sum(axis=1, dtype=np.int64)
        words[:, pos] = letter
        remaining[rows, letter] -= 1
    return words


def batch_rotate(words: np.ndarray, degrees: tuple[int, ...]) -> np.ndarray:
    """Rotate each row just past the first minimum of its path (cycle lemma)."""
    reps, n = words.shape
    step_of = np.asarray(degrees, dtype=np.int32)
    heights = np.cumsum(step_of[words], axis=1, dtype=np.int32)
    ell = (np.argmin(heights, axis=1) + 1).astype(np.int32)  # first minimum
    idx = (np.arange(n, dtype=np.int32)[None, :] + ell[:, None]) % np.int32(n)
    return words[np.arange(reps)[:, None], idx]


def batch_heights(words: np.ndarray, degrees: tuple[int, ...]) -> np.ndarray:
    """Tree height of each row, the rows being Lukasiewicz words (int32).

    Vectorized version of the preorder stack walk: a node's depth is the
    stack size on arrival; internal nodes push their child count; a leaf pops
    every exhausted ancestor and then consumes one slot of the survivor.
    """
    reps, n = words.shape
    arity_of = (np.asarray(degrees, dtype=np.int16) + 1).astype(np.int8)
    if arity_of.max(initial=0) > 127:
        raise ValueError("arities above 127 not supported by the int8 stack")
    arity = arity_of[words]
    stack = np.zeros((reps, n), dtype=np.int8)
    depth = np.zeros(reps, dtype=np.int32)
    best = np.zeros(reps, dtype=np.int32)
    for pos in range(n):
        np.maximum(best, depth, out=best)
        c = arity[:, pos]
        push = c > 0
        stack[push, depth[push]] = c[push]
        depth[push] += 1
        active = np.flatnonzero(~push)
        while active.size:
            active = active[depth[active] > 0]
            if not active.size:
                break
            top = stack[active, depth[active] - 1]
            exhausted = top == 1
            poppers = active[exhausted]
            depth[poppers] -= 1
            survivors = active[~exhausted]
            stack[survivors, depth[survivors] - 1] -= 1
            active = poppers
    return best


def sample_heights(
    rng: np.random.Generator,
    counts: tuple[int, ...],
    degrees: tuple[int, ...],
    replicates: int,
    method: str = "dichotomic",
    chunk: int = 2048,
) -> np.ndarray:
    """Heights of `replicates` uniform trees of the counts tuple (int32).

    Replicates are processed in row chunks to bound memory; the generator is
    consumed sequentially, so results are deterministic given its seed.
    """
    heights = np.empty(replicates, dtype=np.int32)
    done = 0
    while done < replicates:
        m = min(chunk, replicates - done)
        words = batch_valid_words(rng, counts, m, method)
        luka = batch_rotate(words, degrees)
        heights[done : done + m] = batch_heights(luka, degrees)
        done += m
    return heights
