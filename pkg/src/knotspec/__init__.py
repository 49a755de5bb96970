"""Exact bridge spectra, tunnel numbers and continued-fraction invariants of knot families."""

from .braids import (
    BraidWord,
    exponent_sum,
    free_reduce,
    pretzel_cable_correction,
    residual_two_strand_word,
    torus_braid_word,
)
from .exactnum import (
    ContinuedFraction,
    ReducedFraction,
    cf_canonical,
    cf_enumerate_ht,
    cf_eval,
    format_fraction,
    parse_fraction,
    reduce,
)
from .families import (
    CableKnot,
    GeneralizedMontesinosKnot,
    KnotFamily,
    MontesinosKnot,
    PretzelKnot,
    TorusKnot,
    TwoBridgeKnot,
    is_meridionally_small,
    is_torus_two_bridge,
    make_two_bridge,
    parse_knot,
    pretzel_is_knot,
)
from .render import fourplat_svg, pillowcase_svg
from .spectrum import (
    PRIMITIVE,
    STANDARD,
    SpectrumEntry,
    SpectrumResult,
    Splitting,
    Status,
    TunnelResult,
    bridge_spectrum,
    conjectured_cable_spectrum,
    conjectured_montesinos_cable_is_m_stair_step,
    conjectured_pretzel_cable_spectrum,
    meridional_stabilize,
    montesinos_tunnel_one,
    pretzel_bridge_distance,
    satellite_lower_bound,
    stair_step,
    tunnel_number,
    tunnel_upper_bound,
)
from .surfaces import (
    HTSurface,
    IsotopyReport,
    canonical_vector,
    euler_characteristic,
    is_carried_incompressible,
    isotopy_classes,
    surfaces_isotopic,
)

__version__ = "0.1.0"
