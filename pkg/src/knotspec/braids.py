"""Braid words on m strands and the free cancellation used for cabling.

A letter is ``(i, sign)``: sigma_i (strand i over strand i+1) for sign +1,
its inverse for -1.  Words are only reduced in the free group; the braid
relations are never applied.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import groupby

from .errors import InvalidStrandCount, NotAKnot, ParseError, UnsupportedStrandCount
from .families import PretzelKnot

Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 1:
            raise InvalidStrandCount(f"need at least one strand, got {self.strands}")
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise InvalidStrandCount(f"generator s{i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def power(self, e: int) -> BraidWord:
        block = self if e >= 0 else self.inverse()
        return BraidWord(self.strands, block.letters * abs(e))

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(
            f"s{i}^{s * len(list(run))}" for (i, s), run in groupby(self.letters)
        )

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        """Parse ``s1^-6 s1^7``; a missing exponent means 1, ``e`` is the empty word."""
        letters: list[Letter] = []
        for tok in text.split():
            if tok == "e":
                continue
            m = re.fullmatch(r"s(\d+)(?:\^([+-]?\d+))?", tok)
            if m is None or int(m.group(1)) < 1:
                raise ParseError(f"bad braid letter {tok!r}", tok)
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) is not None else 1
            letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
        if strands is None:
            strands = max((i for i, _ in letters), default=1) + 1
        return cls(strands, tuple(letters))


def _block(m: int, indices, sign: int) -> BraidWord:
    return BraidWord(m, tuple((i, sign) for i in indices))


def torus_braid_word(m: int, n: int) -> BraidWord:
    """(s1^-1 s2^-1 ... s_{m-1}^-1)^n."""
    if m < 2:
        raise InvalidStrandCount(f"torus braid needs m >= 2, got {m}")
    if n != 0 and math.gcd(m, n) != 1:
        raise NotAKnot(f"T({m},{n}) is a link")
    return _block(m, range(1, m), -1).power(n)


def pretzel_cable_correction(m: int, p_sum: int) -> BraidWord:
    """(s_{m-1} ... s2 s1)^(p_sum * m), the twisting picked up by an m-strand cable."""
    if m < 2:
        raise InvalidStrandCount(f"correction word needs m >= 2, got {m}")
    return _block(m, range(m - 1, 0, -1), 1).power(p_sum * m)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, s in w.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    return sum(s for _, s in w.letters)


def residual_two_strand_word(p: PretzelKnot, m: int = 2, n: int = 1) -> BraidWord:
    """What survives of a T(2,n) cable of ``p`` once the correction twists cancel.

    Only two strands are supported: B_2 is infinite cyclic, so the free
    reduction is already a normal form.  The exponent sum is 2*sum(p) - n.
    """
    if m != 2:
        raise UnsupportedStrandCount(f"only m = 2 has a cancellation normal form, got m = {m}")
    return free_reduce(pretzel_cable_correction(2, p.twist_sum) + torus_braid_word(2, n))
