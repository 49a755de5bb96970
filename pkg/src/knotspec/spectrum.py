"""Bridge spectra, tunnel numbers and the conjectural cabling formulas.

Every entry of a :class:`SpectrumResult` records how much is actually known
about it.  Dispatch never extrapolates: where no theorem determines a value
the entry is ``UNKNOWN``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import (
    HypothesisNotSatisfied,
    InvalidFamily,
    NoArcToStabilize,
    PreconditionViolation,
)
from .families import (
    CableKnot,
    GeneralizedMontesinosKnot,
    KnotFamily,
    MontesinosKnot,
    PretzelKnot,
    TorusKnot,
    TwoBridgeKnot,
    is_torus_two_bridge,
    is_unknot,
)

STANDARD = "standard"
PRIMITIVE = "primitive"
VARIANTS = (STANDARD, PRIMITIVE)


class Status(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"
    CONJECTURAL = "conjectural"
    UNKNOWN = "unknown"


# Provenance tags, named after the result each entry relies on.
UNKNOT = "unknot"
TORUS = "torus-knot-spectrum"
TWO_BRIDGE = "two-bridge-spectrum"
CABLE_TWO_BRIDGE = "cable-of-two-bridge-spectrum"
CABLE_GENUS0 = "cable-of-two-bridge-bridge-number"
MONTESINOS_BRIDGE = "montesinos-bridge-number"
RANK_EQUALS_BRIDGE = "gcd-alpha-rank-tunnel-bridge"
PRETZEL_SURFACE = "pretzel-genus-n-1-embedding"
PRIMITIVE_VS_STANDARD = "primitive-vs-standard"
TWO_BRIDGE_TUNNEL = "two-bridge-tunnel-number-one"
MONTESINOS_TUNNEL_ONE = "montesinos-tunnel-number-one"
SPLITTING_BOUND = "splitting-tunnel-bound"
CONJ_PRETZEL_CABLE = "conjecture-pretzel-cable"
CONJ_CABLE = "conjecture-cable-multiplicative"
CONJ_MONTESINOS_CABLE = "conjecture-montesinos-cable-stair-step"
NO_RESULT = "none"


@dataclass(frozen=True)
class SpectrumEntry:
    genus: int
    value: Optional[int]
    status: Status
    provenance: str

    def text(self) -> str:
        if self.status is Status.UNKNOWN or self.value is None:
            return "?"
        if self.status is Status.CONJECTURAL:
            return f"~{self.value}"
        if self.status is Status.UPPER_BOUND:
            return f"<={self.value}"
        return str(self.value)


@dataclass(frozen=True)
class SpectrumResult:
    variant: str
    entries: tuple[SpectrumEntry, ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown spectrum variant {self.variant!r}")
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def values(self) -> tuple[Optional[int], ...]:
        return tuple(e.value for e in self.entries)

    @property
    def statuses(self) -> tuple[Status, ...]:
        return tuple(e.status for e in self.entries)

    def is_exact(self) -> bool:
        return all(e.status is Status.EXACT for e in self.entries)

    def __getitem__(self, genus: int) -> SpectrumEntry:
        return self.entries[genus]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(e.text() for e in self.entries) + ")"

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "entries": [
                {"g": e.genus, "b": e.value, "status": e.status.value, "provenance": e.provenance}
                for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> SpectrumResult:
        return cls(
            data["variant"],
            tuple(
                SpectrumEntry(int(e["g"]), e["b"], Status(e["status"]), e["provenance"])
                for e in data["entries"]
            ),
        )


@dataclass(frozen=True)
class Splitting:
    """A (g, b)-splitting: genus g Heegaard surface meeting the knot in b arcs per side."""

    g: int
    b: int

    def __post_init__(self):
        if self.g < 0 or self.b < 0:
            raise PreconditionViolation(f"negative splitting ({self.g},{self.b})")


@dataclass(frozen=True)
class TunnelResult:
    """Tunnel number, or an upper bound for it when ``exact`` is false.

    ``value`` is None when not even a bound is available.
    """

    value: Optional[int]
    exact: bool
    provenance: str

    def __str__(self):
        if self.value is None:
            return "unknown"
        return f"{self.value} (exact)" if self.exact else f"<= {self.value} (bound)"

    def to_json(self) -> dict:
        return {"value": self.value, "exact": self.exact, "provenance": self.provenance}

    @classmethod
    def from_json(cls, data: dict) -> TunnelResult:
        return cls(data["value"], bool(data["exact"]), data["provenance"])


# --- elementary formulas ---------------------------------------------------


def stair_step(b0: int) -> tuple[int, ...]:
    if b0 < 1:
        raise PreconditionViolation(f"stair_step needs b0 >= 1, got {b0}")
    return tuple(range(b0, -1, -1))


def meridional_stabilize(s: Splitting) -> Splitting:
    """Tube along one trivial arc: (g, b) -> (g+1, b-1)."""
    if s.b < 1:
        raise NoArcToStabilize(f"({s.g},{s.b})-splitting has no arc to stabilize")
    return Splitting(s.g + 1, s.b - 1)


def satellite_lower_bound(index: int, companion_b0: int) -> int:
    """Lower bound index * b0(companion) for the bridge number of a satellite."""
    if index < 1 or companion_b0 < 1:
        raise PreconditionViolation("index and companion bridge number must be >= 1")
    return index * companion_b0


def tunnel_upper_bound(s: Splitting, primitive: bool = False) -> int:
    """t(K) <= g + b - 1 for b > 0, or for b = 0 when the knot is primitive."""
    if s.b == 0 and not primitive:
        raise PreconditionViolation("a (g,0)-splitting bounds tunnel number only when primitive")
    bound = s.g + s.b - 1
    if bound < 0:
        raise PreconditionViolation(f"({s.g},{s.b})-splitting gives no tunnel bound")
    return bound


# --- spectrum builders -----------------------------------------------------


def _entry(g, value, status=Status.EXACT, provenance=NO_RESULT) -> SpectrumEntry:
    return SpectrumEntry(g, value, status, provenance)


def _unknot(variant: str) -> SpectrumResult:
    return SpectrumResult(variant, (_entry(0, 0, provenance=UNKNOT),))


def _unknown(variant: str) -> SpectrumResult:
    return SpectrumResult(variant, (_entry(0, None, Status.UNKNOWN),))


def _exact(variant: str, values, provenance: str) -> SpectrumResult:
    return SpectrumResult(variant, tuple(_entry(g, b, provenance=provenance) for g, b in enumerate(values)))


def _bridge_number_only(variant: str, b0: int, provenance: str) -> SpectrumResult:
    # where the first zero falls is not determined, so nothing after the
    # unknown run is listed (b_g <= b0 - g still caps the length)
    entries = [_entry(0, b0, provenance=provenance)]
    entries += [_entry(g, None, Status.UNKNOWN) for g in range(1, b0)]
    return SpectrumResult(variant, tuple(entries))


def _stair_step_family(variant: str, n: int, pretzel: bool) -> SpectrumResult:
    """Spectrum of a knot with t(K) + 1 = b(K) = n."""
    if variant == PRIMITIVE:
        return _exact(PRIMITIVE, stair_step(n), RANK_EQUALS_BRIDGE)
    if pretzel:
        values = tuple(range(n, 1, -1)) + (0,)
        entries = [_entry(g, b, provenance=RANK_EQUALS_BRIDGE) for g, b in enumerate(values[:-1])]
        entries.append(_entry(n - 1, 0, provenance=PRETZEL_SURFACE))
        return SpectrumResult(STANDARD, tuple(entries))
    # Nonzero primitive entries >= 2 force equal standard entries; the
    # primitive 1 at genus n-1 leaves the standard entry in {0, 1}.
    entries = [_entry(g, n - g, provenance=PRIMITIVE_VS_STANDARD) for g in range(n - 1)]
    entries.append(_entry(n - 1, None, Status.UNKNOWN, PRIMITIVE_VS_STANDARD))
    return SpectrumResult(STANDARD, tuple(entries))


def _torus_spectrum(k: TorusKnot, variant: str) -> SpectrumResult:
    if k.is_trivial:
        return _unknot(variant)
    b0 = k.bridge_index
    values = (b0, 0) if variant == STANDARD else (b0, 1, 0)
    return _exact(variant, values, TORUS)


def _two_bridge_spectrum(k: TwoBridgeKnot, variant: str) -> SpectrumResult:
    if k.is_unknot:
        return _unknot(variant)
    if is_torus_two_bridge(k):
        # a torus knot of bridge number 2, i.e. T(2, q')
        values = (2, 0) if variant == STANDARD else (2, 1, 0)
        return _exact(variant, values, TORUS)
    return _exact(variant, (2, 1, 0), TWO_BRIDGE)


def _as_two_bridge_class(k: KnotFamily) -> Optional[str]:
    """'unknot', 'torus' or 'non-torus' for knots known to have bridge number <= 2."""
    if is_unknot(k):
        return "unknot"
    if isinstance(k, TwoBridgeKnot):
        return "torus" if is_torus_two_bridge(k) else "non-torus"
    if isinstance(k, TorusKnot) and k.bridge_index == 2:
        return "torus"
    return None


def _cable_spectrum(k: CableKnot, variant: str) -> SpectrumResult:
    m = k.index
    kind = _as_two_bridge_class(k.companion)
    if kind == "unknot":
        # the cable of the unknot is the pattern torus knot itself
        return _torus_spectrum(k.pattern, variant)
    if kind == "non-torus":
        if variant == STANDARD:
            return _exact(STANDARD, (2 * m, m, 0), CABLE_TWO_BRIDGE)
        return SpectrumResult(
            PRIMITIVE,
            (
                _entry(0, 2 * m, provenance=PRIMITIVE_VS_STANDARD),
                _entry(1, m, provenance=PRIMITIVE_VS_STANDARD),
                _entry(2, None, Status.UNKNOWN, PRIMITIVE_VS_STANDARD),
            ),
        )
    if kind == "torus":
        return _bridge_number_only(variant, 2 * m, CABLE_GENUS0)
    return _unknown(variant)


def _montesinos_spectrum(k: MontesinosKnot, variant: str) -> SpectrumResult:
    if k.r >= 2 and k.alpha_gcd != 1:
        return _stair_step_family(variant, k.r, pretzel=k.is_pretzel and k.e == 0 and k.r >= 3)
    if k.r >= 3 and not k.has_integer_tangle:
        return _bridge_number_only(variant, k.r, MONTESINOS_BRIDGE)
    return _unknown(variant)


def _pretzel_spectrum(k: PretzelKnot, variant: str) -> SpectrumResult:
    if k.n == 1:
        return _unknot(variant)
    if k.twist_gcd != 1:
        return _stair_step_family(variant, k.n, pretzel=k.n >= 3)
    if k.n >= 3 and all(abs(p) >= 2 for p in k.twists):
        return _bridge_number_only(variant, k.n, MONTESINOS_BRIDGE)
    return _unknown(variant)


def _generalized_montesinos_spectrum(k: GeneralizedMontesinosKnot, variant: str) -> SpectrumResult:
    if k.alpha_gcd != 1:
        return _stair_step_family(variant, k.plat_width, pretzel=False)
    return _unknown(variant)


def bridge_spectrum(k: KnotFamily, variant: str = STANDARD) -> SpectrumResult:
    """Standard or primitive bridge spectrum of ``k``, as far as it is determined."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown spectrum variant {variant!r}")
    if isinstance(k, TorusKnot):
        return _torus_spectrum(k, variant)
    if isinstance(k, TwoBridgeKnot):
        return _two_bridge_spectrum(k, variant)
    if isinstance(k, CableKnot):
        return _cable_spectrum(k, variant)
    if isinstance(k, PretzelKnot):
        return _pretzel_spectrum(k, variant)
    if isinstance(k, MontesinosKnot):
        return _montesinos_spectrum(k, variant)
    if isinstance(k, GeneralizedMontesinosKnot):
        return _generalized_montesinos_spectrum(k, variant)
    raise InvalidFamily(f"not a knot family: {k!r}")


# --- tunnel number ---------------------------------------------------------


def _frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def montesinos_tunnel_one(m: MontesinosKnot) -> bool:
    """Tunnel-number-one criterion for Montesinos knots.

    Any tangle may play the distinguished first role, so all rotations of the
    three tangles are tried; conditions are symmetric in the other two.
    """
    if m.r == 2:
        return True
    if m.r != 3:
        return False
    thirds = {_frac_part(Fraction(1, 3)), _frac_part(Fraction(-1, 3))}
    total = m.e + sum(m.tangles)
    for shift in range(3):
        t1, t2, t3 = m.tangles[shift:] + m.tangles[:shift]
        a1, a2, a3 = t1.denominator, t2.denominator, t3.denominator
        f2 = _frac_part(t2)
        if f2 == _frac_part(t3) and f2 in thirds and total in (Fraction(1, 3 * a1), Fraction(-1, 3 * a1)):
            return True
        if a1 == 2 and a2 % 2 == 1 and a3 % 2 == 1:
            return True
    return False


def best_splitting_bound(k: KnotFamily) -> Optional[int]:
    """Smallest g + b - 1 over splittings certified by the computed spectra."""
    bounds = []
    for e in bridge_spectrum(k, STANDARD).entries:
        if e.status in (Status.EXACT, Status.UPPER_BOUND) and e.value and e.value >= 1:
            bounds.append(tunnel_upper_bound(Splitting(e.genus, e.value)))
    for e in bridge_spectrum(k, PRIMITIVE).entries:
        if e.status is Status.EXACT and e.value == 0 and e.genus >= 1:
            bounds.append(tunnel_upper_bound(Splitting(e.genus, 0), primitive=True))
        elif e.status in (Status.EXACT, Status.UPPER_BOUND) and e.value and e.value >= 1:
            bounds.append(tunnel_upper_bound(Splitting(e.genus, e.value)))
    return min(bounds) if bounds else None


def tunnel_number(k: KnotFamily) -> TunnelResult:
    if is_unknot(k):
        return TunnelResult(0, True, UNKNOT)
    if isinstance(k, TwoBridgeKnot):
        return TunnelResult(1, True, TWO_BRIDGE_TUNNEL)
    if isinstance(k, GeneralizedMontesinosKnot) and k.alpha_gcd != 1:
        return TunnelResult(k.plat_width - 1, True, RANK_EQUALS_BRIDGE)
    if isinstance(k, PretzelKnot):
        if k.twist_gcd != 1:
            return TunnelResult(k.n - 1, True, RANK_EQUALS_BRIDGE)
        if montesinos_tunnel_one(k.as_montesinos()):
            return TunnelResult(1, True, MONTESINOS_TUNNEL_ONE)
    if isinstance(k, MontesinosKnot):
        if montesinos_tunnel_one(k):
            return TunnelResult(1, True, MONTESINOS_TUNNEL_ONE)
        if k.r >= 2 and k.alpha_gcd != 1:
            return TunnelResult(k.r - 1, True, RANK_EQUALS_BRIDGE)
    bound = best_splitting_bound(k)
    return TunnelResult(bound, False, SPLITTING_BOUND if bound is not None else NO_RESULT)


def pretzel_bridge_distance(p: PretzelKnot) -> Optional[int]:
    """Distance of the standard (0, n) bridge sphere; known only for n >= 4."""
    return 1 if p.n >= 4 else None


# --- conjectural evaluators -----------------------------------------------


def _check_pattern(m: int, n: int):
    if m < 2:
        raise HypothesisNotSatisfied(f"cable pattern index must be >= 2, got {m}")
    if math.gcd(m, n) != 1:
        raise HypothesisNotSatisfied(f"T({m},{n}) is not a knot")


def conjectured_pretzel_cable_spectrum(p: PretzelKnot, m: int, n: int) -> SpectrumResult:
    """Conjectured primitive spectrum of cable(T(m,n), P): a scaled stair with a degenerate last step.

    (mj, m(j-1), ..., 2m, min(m, |m*sum(p) - n|), 0), all conjectural.
    """
    if p.twist_gcd == 1 or any(abs(t) < 2 for t in p.twists) or p.n < 2:
        raise HypothesisNotSatisfied(f"{p} is not known to have stair-step primitive spectrum")
    _check_pattern(m, n)
    j = p.n
    values = [m * (j - g) for g in range(j - 1)]
    values.append(min(m, abs(m * p.twist_sum - n)))
    values.append(0)
    return SpectrumResult(
        PRIMITIVE,
        tuple(_entry(g, b, Status.CONJECTURAL, CONJ_PRETZEL_CABLE) for g, b in enumerate(values)),
    )


def conjectured_cable_spectrum(base: SpectrumResult, m: int, n: int) -> SpectrumResult:
    """Conjectured spectrum of an (m,n)-cable: m times the companion's, then one unknown step."""
    if not base.is_exact():
        raise HypothesisNotSatisfied("the companion spectrum must be fully known")
    nonzero = [e.value for e in base.entries if e.value]
    if not nonzero or base.entries[-1].value != 0:
        raise HypothesisNotSatisfied("the companion spectrum must be nontrivial and end in 0")
    _check_pattern(m, n)
    entries = [_entry(g, m * b, Status.CONJECTURAL, CONJ_CABLE) for g, b in enumerate(nonzero)]
    g = len(nonzero)
    entries.append(_entry(g, None, Status.UNKNOWN, CONJ_CABLE))
    entries.append(_entry(g + 1, 0, Status.CONJECTURAL, CONJ_CABLE))
    return SpectrumResult(base.variant, tuple(entries))


def conjectured_montesinos_cable_is_m_stair_step(k: MontesinosKnot | PretzelKnot) -> bool:
    """Conjectural: cables of a Montesinos knot are m-stair-step iff it is not a pretzel knot."""
    if isinstance(k, PretzelKnot):
        return False
    return not k.is_pretzel


def conjectured_m_stair_step(b0: int, m: int) -> tuple[int, ...]:
    """(m*b0, m*(b0-1), ..., m, 0)."""
    return tuple(m * b for b in stair_step(b0))
