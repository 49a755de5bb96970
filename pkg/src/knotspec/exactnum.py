"""Exact rationals and minus-sign continued fractions.

A continued fraction ``r+[b1,...,bk]`` denotes the tower

    r + 1/(b1 - 1/(b2 - ... - 1/bk))

with every ``bi`` a nonzero integer.  Rationals are :class:`fractions.Fraction`
values, which are always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateTower, InvalidFraction, ParseError

ReducedFraction = Fraction

__all__ = [
    "ContinuedFraction",
    "ReducedFraction",
    "cf_canonical",
    "cf_enumerate_ht",
    "cf_eval",
    "format_fraction",
    "parse_fraction",
    "reduce",
]


def reduce(p: int, q: int) -> Fraction:
    """Return p/q in lowest terms with a positive denominator."""
    if q == 0:
        raise InvalidFraction(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def format_fraction(x: Fraction) -> str:
    """Print as ``p/q``, keeping the denominator even when it is 1."""
    return f"{x.numerator}/{x.denominator}"


_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?")


def parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"not a fraction: {text!r}", text)
    q = int(m.group(2)) if m.group(2) is not None else 1
    return reduce(int(m.group(1)), q)


@dataclass(frozen=True, order=True)
class ContinuedFraction:
    integer_part: int
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(b) for b in self.coefficients))
        if any(b == 0 for b in self.coefficients):
            raise InvalidFraction(f"zero coefficient in {self.coefficients}")

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return f"{self.integer_part}+[{','.join(str(b) for b in self.coefficients)}]"

    @classmethod
    def parse(cls, text: str) -> ContinuedFraction:
        """Parse ``r+[b1,...,bk]``; a bare ``[b1,...,bk]`` means r = 0."""
        m = re.fullmatch(r"\s*(?:([+-]?\d+)\s*\+\s*)?\[([^\]]*)\]\s*", text)
        if m is None:
            raise ParseError(f"not a continued fraction: {text!r}", text)
        r = int(m.group(1)) if m.group(1) else 0
        body = m.group(2).strip()
        coeffs = []
        if body:
            for tok in body.split(","):
                tok = tok.strip()
                if not re.fullmatch(r"[+-]?\d+", tok):
                    raise ParseError(f"bad coefficient {tok!r} in {text!r}", tok)
                coeffs.append(int(tok))
        return cls(r, tuple(coeffs))


def cf_eval(cf: ContinuedFraction) -> Fraction:
    """Fold the tower from the innermost coefficient outwards."""
    if not cf.coefficients:
        return Fraction(cf.integer_part)
    t = Fraction(cf.coefficients[-1])
    for b in reversed(cf.coefficients[:-1]):
        if t == 0:
            raise DegenerateTower(f"{cf} divides by zero while folding")
        t = b - 1 / t
    if t == 0:
        raise DegenerateTower(f"{cf} divides by zero while folding")
    return cf.integer_part + 1 / t


def cf_canonical(x: Fraction) -> ContinuedFraction:
    """The expansion of ``x`` with odd length and a single coefficient sign.

    Positive (resp. negative) values get all-positive (resp. all-negative)
    coefficients.  Integers are written ``(x-1)+[1]`` (``(x+1)+[-1]`` when
    negative) so that the length is still odd.
    """
    x = Fraction(x)
    if x.denominator == 1:
        n = x.numerator
        return ContinuedFraction(n + 1, (-1,)) if n < 0 else ContinuedFraction(n - 1, (1,))
    negative = x < 0
    r = math.trunc(x)
    t = 1 / (x - r)
    coeffs = []
    while True:
        b = math.floor(t) if negative else math.ceil(t)
        coeffs.append(b)
        if b == t:
            break
        t = 1 / (b - t)
    if len(coeffs) % 2 == 0:
        last = coeffs.pop()
        coeffs.extend((last - 1, -1) if negative else (last + 1, 1))
    cf = ContinuedFraction(r, tuple(coeffs))
    assert cf_eval(cf) == x, (x, cf)
    return cf


@lru_cache(maxsize=None)
def _ht_tails(t: Fraction) -> tuple[tuple[int, ...], ...]:
    # All [b1..bk] with every |bi| >= 2 whose tower equals t; needs |t| > 1.
    # A remainder t = a/c leads to c/(b*c - a), whose denominator is smaller
    # than c, so the recursion terminates.
    bound = abs(t.numerator) + t.denominator
    if t.denominator == 1:
        return ((t.numerator,),)
    out = []
    for b in (math.floor(t), math.ceil(t)):
        if abs(b) < 2 or abs(b) > bound:
            continue
        rest = 1 / (b - t)
        for tail in _ht_tails(rest):
            out.append((b,) + tail)
    return tuple(out)


def cf_enumerate_ht(x: Fraction, depth_limit: int) -> frozenset[ContinuedFraction]:
    """Every expansion of ``x`` with all ``|bi| >= 2`` and at most ``depth_limit`` terms.

    A tail with all ``|bi| >= 2`` has absolute value greater than 1, so the
    integer part of such an expansion is ``floor(x)`` or ``ceil(x)``, and an
    integer has only the empty expansion.
    """
    if depth_limit < 1:
        raise ValueError("depth_limit must be positive")
    x = Fraction(x)
    if x.denominator == 1:
        return frozenset({ContinuedFraction(x.numerator, ())})
    found = set()
    for r in (math.floor(x), math.ceil(x)):
        for coeffs in _ht_tails(1 / (x - r)):
            if len(coeffs) <= depth_limit:
                found.add(ContinuedFraction(r, coeffs))
    return frozenset(found)
