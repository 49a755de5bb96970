"""Knot families, their validation, and the classification predicates.

Text forms (also the CLI literal grammar)::

    T(m,n)  2b(p/q)  P(p1,...,pn)  M(b1/a1,...,br/ar|e)  cable(m,n; <knot>)

Generalized Montesinos knots have no literal; build them directly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from typing import Optional, Union

from .errors import InvalidFamily, InvalidFraction, NotAKnot, ParseError
from .exactnum import cf_enumerate_ht, format_fraction, reduce


def _gcd_all(values) -> int:
    return _fold(math.gcd, (abs(v) for v in values), 0)


@dataclass(frozen=True)
class TorusKnot:
    m: int
    n: int

    def __post_init__(self):
        if abs(self.m) < 1:
            raise InvalidFamily(f"torus knot needs |m| >= 1, got m={self.m}")
        if math.gcd(self.m, self.n) != 1:
            raise NotAKnot(f"T({self.m},{self.n}) is a {math.gcd(self.m, self.n)}-component link")

    @property
    def bridge_index(self) -> int:
        """min(|m|, |n|); at most 1 means the unknot."""
        return min(abs(self.m), abs(self.n))

    @property
    def is_trivial(self) -> bool:
        return self.bridge_index <= 1

    def __str__(self):
        return f"T({self.m},{self.n})"


@dataclass(frozen=True)
class TwoBridgeKnot:
    """K_{p/q} with q odd and 0 < p < q; the fraction 0/1 is the unknot."""

    fraction: Fraction

    def __post_init__(self):
        x = Fraction(self.fraction)
        object.__setattr__(self, "fraction", x)
        if x.denominator % 2 == 0:
            raise NotAKnot(f"2b({format_fraction(x)}) is a 2-component link")
        if x.denominator == 1:
            if x != 0:
                raise InvalidFraction("the unknot is encoded as 0/1")
        elif not 0 < x.numerator < x.denominator:
            raise InvalidFraction(f"need 0 < p < q, got {format_fraction(x)}")

    @property
    def p(self) -> int:
        return self.fraction.numerator

    @property
    def q(self) -> int:
        return self.fraction.denominator

    @property
    def is_unknot(self) -> bool:
        return self.q == 1

    def __str__(self):
        return f"2b({format_fraction(self.fraction)})"


def make_two_bridge(p: int, q: int) -> TwoBridgeKnot:
    """Reduce p/q and shift p into [0, q)."""
    if q < 1:
        raise InvalidFraction(f"2-bridge denominator must be >= 1, got {q}")
    if q > 1 and p % q == 0:
        raise InvalidFraction(f"{p}/{q} is an integer")
    x = reduce(p, q)
    if x.denominator % 2 == 0:
        raise NotAKnot(f"{p}/{q} has even denominator: 2-component link")
    return TwoBridgeKnot(Fraction(x.numerator % x.denominator, x.denominator))


def is_torus_two_bridge(k: TwoBridgeKnot) -> bool:
    """True iff the shortest HT-admissible expansion of p/q has at most one term."""
    if k.is_unknot:
        return True
    expansions = cf_enumerate_ht(k.fraction, k.q)
    return min(cf.k for cf in expansions) <= 1


def pretzel_is_knot(twists) -> bool:
    """One component iff all twists are odd with an odd count, or exactly one is even."""
    evens = sum(1 for p in twists if p % 2 == 0)
    return evens == 1 or (evens == 0 and len(twists) % 2 == 1)


@dataclass(frozen=True)
class PretzelKnot:
    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(p) for p in self.twists))
        if not self.twists:
            raise InvalidFamily("a pretzel knot needs at least one twist region")
        if any(p == 0 for p in self.twists):
            raise InvalidFamily(f"zero twist region in P{self.twists}")
        if not pretzel_is_knot(self.twists):
            raise NotAKnot(f"{self} is a link")

    @property
    def n(self) -> int:
        return len(self.twists)

    @property
    def twist_gcd(self) -> int:
        return _gcd_all(self.twists)

    @property
    def twist_sum(self) -> int:
        return sum(self.twists)

    def as_montesinos(self) -> MontesinosKnot:
        return MontesinosKnot(tuple(Fraction(1, p) for p in self.twists), 0)

    def __str__(self):
        return f"P({','.join(map(str, self.twists))})"


@dataclass(frozen=True)
class MontesinosKnot:
    """M(b1/a1,...,br/ar | e): rational tangles in a row plus e half-twists."""

    tangles: tuple[Fraction, ...]
    e: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tangles", tuple(Fraction(t) for t in self.tangles))
        if not self.tangles:
            raise InvalidFamily("a Montesinos knot needs at least one tangle")

    @property
    def r(self) -> int:
        return len(self.tangles)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(t.denominator for t in self.tangles)

    @property
    def alpha_gcd(self) -> int:
        return _gcd_all(self.alphas)

    @property
    def has_integer_tangle(self) -> bool:
        return any(a == 1 for a in self.alphas)

    @property
    def is_pretzel(self) -> bool:
        """Every tangle is a single twist column (numerator ±1, or integral)."""
        return all(abs(t.numerator) == 1 or t.denominator == 1 for t in self.tangles)

    def __str__(self):
        return f"M({','.join(format_fraction(t) for t in self.tangles)}|{self.e})"


@dataclass(frozen=True)
class GeneralizedMontesinosKnot:
    """Rows of rational tangles (beta, alpha) separated by doubled braids.

    The braids are opaque labels; only the gcd of the alphas and the plat
    width n (the knot is drawn as a 2n-plat) matter here.
    """

    grid: tuple[tuple[tuple[int, int], ...], ...]
    braid_labels: tuple[str, ...]
    plat_width: int

    def __post_init__(self):
        grid = tuple(tuple((int(b), int(a)) for b, a in row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "braid_labels", tuple(self.braid_labels))
        if not grid or not all(grid):
            raise InvalidFamily("empty tangle grid")
        if any(a < 1 for row in grid for _, a in row):
            raise InvalidFamily("every alpha must be >= 1")
        if len(self.braid_labels) != len(grid) - 1:
            raise InvalidFamily(
                f"{len(grid)} rows need {len(grid) - 1} braid labels, got {len(self.braid_labels)}"
            )
        if self.plat_width < 1:
            raise InvalidFamily("plat width must be >= 1")

    @property
    def alpha_gcd(self) -> int:
        return _gcd_all(a for row in self.grid for _, a in row)


@dataclass(frozen=True)
class CableKnot:
    """cable(T_{m,n}, companion), glued with the preferred framing."""

    pattern: TorusKnot
    companion: "KnotFamily"

    def __post_init__(self):
        if self.pattern.m < 2:
            raise InvalidFamily(f"cable pattern needs index m >= 2, got {self.pattern}")

    @property
    def index(self) -> int:
        return self.pattern.m

    def __str__(self):
        return f"cable({self.pattern.m},{self.pattern.n}; {self.companion})"


KnotFamily = Union[
    TorusKnot, TwoBridgeKnot, PretzelKnot, MontesinosKnot, GeneralizedMontesinosKnot, CableKnot
]


def is_unknot(k: KnotFamily) -> bool:
    """Recognise the trivial members of each family (not a general unknot test)."""
    if isinstance(k, TorusKnot):
        return k.is_trivial
    if isinstance(k, TwoBridgeKnot):
        return k.is_unknot
    if isinstance(k, PretzelKnot):
        return k.n == 1
    return False


def is_meridionally_small(k: KnotFamily) -> Optional[bool]:
    """True when proven meridionally small; None when nothing is known.

    2-bridge knots are meridionally small, and so is every cable of a
    meridionally small knot.  T(2,n) and the unknot are 2-bridge.
    """
    if isinstance(k, TwoBridgeKnot):
        return True
    if isinstance(k, TorusKnot) and k.bridge_index <= 2:
        return True
    if isinstance(k, CableKnot):
        return True if is_meridionally_small(k.companion) else None
    return None


# --- literal grammar -------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(2b|cable|T|P|M)|([+-]?\d+)|([(),;|/]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            bad = re.match(r"\s*(\S+?)(?=[\s(),;|/]|$)", text[pos:])
            token = bad.group(1) if bad else text[pos:]
            raise ParseError(f"unexpected token {token!r} in knot literal {text!r}", token)
        tokens.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of knot literal {self.text!r}", "")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r} but found {tok!r} in {self.text!r}", tok)
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise ParseError(f"expected an integer but found {tok!r} in {self.text!r}", tok)
        return int(tok)

    def fraction(self) -> Fraction:
        p = self.integer()
        q = 1
        if self.peek() == "/":
            self.take("/")
            q = self.integer()
        return reduce(p, q)

    def int_list(self) -> list[int]:
        values = [self.integer()]
        while self.peek() == ",":
            self.take(",")
            values.append(self.integer())
        return values

    def knot(self) -> KnotFamily:
        head = self.take()
        if head == "T":
            self.take("(")
            m = self.integer()
            self.take(",")
            n = self.integer()
            self.take(")")
            return TorusKnot(m, n)
        if head == "2b":
            self.take("(")
            p = self.integer()
            self.take("/")
            q = self.integer()
            self.take(")")
            return make_two_bridge(p, q)
        if head == "P":
            self.take("(")
            twists = self.int_list()
            self.take(")")
            return PretzelKnot(tuple(twists))
        if head == "M":
            self.take("(")
            tangles = [self.fraction()]
            while self.peek() == ",":
                self.take(",")
                tangles.append(self.fraction())
            e = 0
            if self.peek() == "|":
                self.take("|")
                e = self.integer()
            self.take(")")
            return MontesinosKnot(tuple(tangles), e)
        if head == "cable":
            self.take("(")
            m = self.integer()
            self.take(",")
            n = self.integer()
            self.take(";")
            companion = self.knot()
            self.take(")")
            return CableKnot(TorusKnot(m, n), companion)
        raise ParseError(f"unknown knot family {head!r} in {self.text!r}", head)


def parse_knot(text: str) -> KnotFamily:
    """Parse a knot literal such as ``cable(2,3; 2b(3/5))``."""
    parser = _Parser(text)
    k = parser.knot()
    if parser.peek() is not None:
        tok = parser.peek()
        raise ParseError(f"trailing token {tok!r} in knot literal {text!r}", tok)
    return k


def format_knot(k: KnotFamily) -> str:
    if isinstance(k, GeneralizedMontesinosKnot):
        return f"GM(width={k.plat_width}, gcd={k.alpha_gcd})"
    return str(k)
