"""Shared test oracles.

The key device is ReplayBitSource plus exact_distribution: instead of
trusting a sampler's math, we run the real implementation over every bit
string up to a depth, weight each completed run by 2^-bits, and obtain its
output law as exact rationals up to a provable residual.  That turns
"returns i with probability w_i / n" into a checkable statement about the
code as written, independent of how the code arrives at it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import pytest


class Exhausted(Exception):
    """Raised when a ReplayBitSource runs past its scripted bits."""


class ReplayBitSource:
    """BitSource stand-in that plays back a fixed bit sequence."""

    def __init__(self, bits: tuple[int, ...]):
        self.bits = bits
        self.pos = 0
        self.bits_consumed = 0

    def next_bit(self) -> int:
        if self.pos >= len(self.bits):
            raise Exhausted
        bit = self.bits[self.pos]
        self.pos += 1
        self.bits_consumed += 1
        return bit

    def next_bits(self, count: int) -> int:
        out = 0
        for i in range(count):
            out |= self.next_bit() << i
        return out


def exact_distribution(
    run: Callable[[ReplayBitSource], object], max_depth: int
) -> tuple[dict, Fraction]:
    """Exact output law of run(source) by exhausting all bit prefixes.

    Returns (probabilities, residual): outcome -> Fraction mass of runs that
    complete within max_depth bits, plus the mass of still-unresolved paths.
    Only prefixes that raised Exhausted are extended, so a completing run has
    always consumed its whole prefix and the masses are exact.
    """
    probs: dict = {}
    residual = Fraction(0)
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        prefix = frontier.pop()
        source = ReplayBitSource(prefix)
        try:
            outcome = run(source)
        except Exhausted:
            if len(prefix) >= max_depth:
                residual += Fraction(1, 2 ** len(prefix))
            else:
                frontier.append(prefix + (0,))
                frontier.append(prefix + (1,))
            continue
        assert source.bits_consumed == len(prefix)
        probs[outcome] = probs.get(outcome, Fraction(0)) + Fraction(1, 2 ** len(prefix))
    return probs, residual


@pytest.fixture
def motzkin():
    from lukatree import motzkin_alphabet

    return motzkin_alphabet()


@pytest.fixture
def binary():
    from lukatree import binary_alphabet

    return binary_alphabet()
