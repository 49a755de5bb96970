"""Surfaces S_n(n_1, ..., n_{k-1}) carried by the branched surface of an expansion.

Each surface is determined by an admissible expansion (all ``|bi| >= 2``),
a sheet count ``n`` and the number of sheets ``n_i`` that enter the i-th
inner plumbing square.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import NotHTAdmissible, PreconditionViolation
from .exactnum import ContinuedFraction


def is_carried_incompressible(expansion: ContinuedFraction) -> bool:
    if expansion.k < 1:
        raise PreconditionViolation("expansion must have at least one coefficient")
    return all(abs(b) >= 2 for b in expansion.coefficients)


def _require_admissible(expansion: ContinuedFraction):
    if expansion.k < 1 or not is_carried_incompressible(expansion):
        raise NotHTAdmissible(f"{expansion} needs k >= 1 and every |b_i| >= 2")


@dataclass(frozen=True)
class HTSurface:
    expansion: ContinuedFraction
    sheets: int
    vector: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(v) for v in self.vector))
        _require_admissible(self.expansion)
        if self.sheets < 1:
            raise PreconditionViolation(f"sheet count must be >= 1, got {self.sheets}")
        if len(self.vector) != self.expansion.k - 1:
            raise PreconditionViolation(
                f"vector has length {len(self.vector)}, expected {self.expansion.k - 1}"
            )
        if not all(0 <= v <= self.sheets for v in self.vector):
            raise PreconditionViolation(f"vector entries must lie in [0, {self.sheets}]")


def euler_characteristic(s: HTSurface) -> int:
    """-n(k-1); the vector only changes how the sheets are glued."""
    return -s.sheets * (s.expansion.k - 1)


def _moves(expansion: ContinuedFraction) -> list[tuple[int, ...]]:
    """Index sets touched by the generating move of each coefficient equal to ±2.

    The move at coefficient i (1-based) adds one to n_{i-1} and n_i, dropping
    whichever of the two does not exist at the ends.
    """
    k = expansion.k
    moves = []
    for i, b in enumerate(expansion.coefficients, start=1):
        if abs(b) != 2:
            continue
        touched = tuple(j - 1 for j in (i - 1, i) if 1 <= j <= k - 1)
        if touched:
            moves.append(touched)
    return moves


def _neighbours(vector, moves, n):
    for touched in moves:
        for step in (1, -1):
            moved = list(vector)
            for j in touched:
                moved[j] += step
            if all(0 <= v <= n for v in moved):
                yield tuple(moved)


@dataclass(frozen=True)
class IsotopyReport:
    expansion: ContinuedFraction
    n: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c[0] for c in self.classes)

    def to_json(self) -> dict:
        return {
            "expansion": str(self.expansion),
            "n": self.n,
            "class_count": self.class_count,
            "representatives": [list(r) for r in self.representatives],
        }


def isotopy_classes(expansion: ContinuedFraction, n: int) -> IsotopyReport:
    """Partition {0..n}^(k-1) into isotopy classes by breadth-first closure.

    Each class is sorted, so its first element is the lexicographically least
    vector; classes are listed in order of their representatives.
    """
    _require_admissible(expansion)
    if n < 1:
        raise PreconditionViolation(f"sheet count must be >= 1, got {n}")
    moves = _moves(expansion)
    seen = set()
    classes = []
    for start in itertools.product(range(n + 1), repeat=expansion.k - 1):
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            for nxt in _neighbours(queue.popleft(), moves, n):
                if nxt not in seen:
                    seen.add(nxt)
                    members.append(nxt)
                    queue.append(nxt)
        classes.append(tuple(sorted(members)))
    return IsotopyReport(expansion, n, tuple(classes))


def canonical_vector(s: HTSurface) -> tuple[int, ...]:
    """Lexicographically least vector isotopic to ``s``."""
    moves = _moves(s.expansion)
    seen = {s.vector}
    queue = deque([s.vector])
    while queue:
        for nxt in _neighbours(queue.popleft(), moves, s.sheets):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return min(seen)


def surfaces_isotopic(s1: HTSurface, s2: HTSurface) -> bool:
    """Surfaces on distinct branched surfaces, or with different sheet counts, are never isotopic."""
    if s1.expansion != s2.expansion or s1.sheets != s2.sheets:
        return False
    return canonical_vector(s1) == canonical_vector(s2)
