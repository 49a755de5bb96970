import json
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from knotspec.braids import exponent_sum, residual_two_strand_word
from knotspec.errors import HypothesisNotSatisfied, NoArcToStabilize, PreconditionViolation
from knotspec.families import (
    CableKnot,
    GeneralizedMontesinosKnot,
    MontesinosKnot,
    PretzelKnot,
    TorusKnot,
    make_two_bridge,
    parse_knot,
    pretzel_is_knot,
)
from knotspec.spectrum import (
    PRIMITIVE,
    STANDARD,
    SpectrumEntry,
    SpectrumResult,
    Splitting,
    Status,
    TunnelResult,
    bridge_spectrum,
    conjectured_cable_spectrum,
    conjectured_m_stair_step,
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

K35 = make_two_bridge(3, 5)
P4 = PretzelKnot((6, -9, -9, 9))


def spec(text, variant=STANDARD):
    return str(bridge_spectrum(parse_knot(text), variant))


def M(*tangles, e=0):
    return MontesinosKnot(tuple(Fraction(t) for t in tangles), e)


def exact(values, variant=STANDARD):
    return SpectrumResult(variant, tuple(SpectrumEntry(g, b, Status.EXACT, "test") for g, b in enumerate(values)))


class TestDispatch:
    def test_torus(self):
        assert spec("T(3,5)") == "(3, 0)"
        assert spec("T(3,5)", PRIMITIVE) == "(3, 1, 0)"
        assert spec("T(-5,3)") == "(3, 0)"

    def test_unknot(self):
        for text in ("T(1,5)", "2b(0/1)", "P(3)", "T(2,1)"):
            for variant in (STANDARD, PRIMITIVE):
                result = bridge_spectrum(parse_knot(text), variant)
                assert str(result) == "(0)" and result.is_exact()

    def test_two_bridge(self):
        assert spec("2b(3/5)") == "(2, 1, 0)"
        assert spec("2b(3/5)", PRIMITIVE) == "(2, 1, 0)"
        # 1/q gives T(2,q)
        assert spec("2b(1/7)") == "(2, 0)"
        assert spec("2b(1/7)", PRIMITIVE) == "(2, 1, 0)"

    def test_cable(self):
        assert spec("cable(2,3; 2b(3/5))") == "(4, 2, 0)"
        assert spec("cable(3,2; 2b(3/5))") == "(6, 3, 0)"
        assert spec("cable(2,3; 2b(3/5))", PRIMITIVE) == "(4, 2, ?)"

    def test_cable_of_unknot_is_its_pattern(self):
        assert spec("cable(3,5; 2b(0/1))") == "(3, 0)"

    def test_cable_of_torus_companion(self):
        result = bridge_spectrum(parse_knot("cable(2,3; T(2,5))"))
        assert result[0].value == 4 and result[0].status is Status.EXACT
        assert all(e.status is Status.UNKNOWN for e in result.entries[1:])

    def test_cable_of_unsupported_companion(self):
        result = bridge_spectrum(parse_knot("cable(2,3; P(3,5,7))"))
        assert result.statuses == (Status.UNKNOWN,)

    def test_pretzel_stair_step(self):
        assert spec("P(6,-9,-9,9)", PRIMITIVE) == "(4, 3, 2, 1, 0)"
        assert spec("P(6,-9,-9,9)") == "(4, 3, 2, 0)"
        assert spec("P(3,3,3)") == "(3, 2, 0)"

    def test_pretzel_gcd_one(self):
        result = bridge_spectrum(PretzelKnot((3, 5, 7)))
        assert result[0].value == 3 and result[0].status is Status.EXACT
        assert len(result) > 1
        assert all(e.status is Status.UNKNOWN for e in result.entries[1:])

    def test_pretzel_with_integer_tangle_is_unknown(self):
        result = bridge_spectrum(PretzelKnot((1, 3, 5)))
        assert result.statuses == (Status.UNKNOWN,)

    def test_montesinos(self):
        m = M("1/3", "2/3", "1/9", e=1)
        assert str(bridge_spectrum(m, PRIMITIVE)) == "(3, 2, 1, 0)"
        assert str(bridge_spectrum(m, STANDARD)) == "(3, 2, ?)"
        assert bridge_spectrum(M("1/3", "2/5", "1/7"))[0].value == 3

    def test_generalized_montesinos(self):
        g = GeneralizedMontesinosKnot((((1, 3), (1, 3)), ((2, 9),)), ("B1",), 3)
        assert str(bridge_spectrum(g, PRIMITIVE)) == "(3, 2, 1, 0)"
        g1 = GeneralizedMontesinosKnot((((1, 3), (1, 5)),), (), 2)
        assert bridge_spectrum(g1).statuses == (Status.UNKNOWN,)

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            bridge_spectrum(K35, "sideways")


class TestFormulas:
    def test_stair_step(self):
        assert stair_step(4) == (4, 3, 2, 1, 0)
        assert stair_step(1) == (1, 0)
        assert stair_step(2) == (2, 1, 0)
        with pytest.raises(PreconditionViolation):
            stair_step(0)

    def test_meridional_stabilize(self):
        assert meridional_stabilize(Splitting(0, 4)) == Splitting(1, 3)
        assert meridional_stabilize(Splitting(2, 1)) == Splitting(3, 0)
        with pytest.raises(NoArcToStabilize):
            meridional_stabilize(Splitting(1, 0))

    def test_satellite_lower_bound(self):
        assert satellite_lower_bound(2, 2) == 4
        assert satellite_lower_bound(1, 7) == 7
        assert satellite_lower_bound(3, 3) == 9

    def test_tunnel_upper_bound(self):
        assert tunnel_upper_bound(Splitting(0, 2)) == 1
        assert tunnel_upper_bound(Splitting(2, 0), primitive=True) == 1
        assert tunnel_upper_bound(Splitting(1, 3)) == 3
        with pytest.raises(PreconditionViolation):
            tunnel_upper_bound(Splitting(2, 0))


class TestTunnel:
    def test_examples(self):
        assert tunnel_number(P4) == TunnelResult(3, True, tunnel_number(P4).provenance)
        assert str(tunnel_number(P4)) == "3 (exact)"
        t = tunnel_number(M("1/3", "2/5"))
        assert (t.value, t.exact) == (1, True)
        t = tunnel_number(PretzelKnot((3, 5, 7)))
        assert (t.value, t.exact) == (2, False)

    def test_small_cases(self):
        assert (tunnel_number(K35).value, tunnel_number(K35).exact) == (1, True)
        assert tunnel_number(TorusKnot(1, 4)).value == 0
        torus = tunnel_number(TorusKnot(3, 5))
        assert (torus.value, torus.exact) == (1, False)

    def test_no_bound(self):
        t = tunnel_number(CableKnot(TorusKnot(2, 3), PretzelKnot((3, 5, 7))))
        assert t.value is None and not t.exact
        assert str(t) == "unknown"

    def test_json(self):
        t = tunnel_number(PretzelKnot((3, 5, 7)))
        assert TunnelResult.from_json(json.loads(json.dumps(t.to_json()))) == t

    def test_montesinos_tunnel_one_examples(self):
        assert montesinos_tunnel_one(M("1/4", "1/3", "1/3", e=-1))
        assert montesinos_tunnel_one(M("1/2", "1/3", "1/5"))
        assert not montesinos_tunnel_one(M("1/3", "1/5", "1/7"))
        assert montesinos_tunnel_one(M("1/3", "2/5"))
        # the distinguished tangle need not come first
        assert montesinos_tunnel_one(M("1/3", "1/2", "1/5"))
        assert montesinos_tunnel_one(M("1/3", "1/4", "1/3", e=-1))
        assert not montesinos_tunnel_one(M("1/3", "1/3", "1/3", "1/3"))

    def test_bridge_distance(self):
        assert pretzel_bridge_distance(PretzelKnot((2, -3, -3, 3))) == 1
        assert pretzel_bridge_distance(P4) == 1
        assert pretzel_bridge_distance(PretzelKnot((3, 5, 2))) is None


class TestConjectures:
    def test_pretzel_cable(self):
        r = conjectured_pretzel_cable_spectrum(P4, 2, -7)
        assert r.values == (8, 6, 4, 1, 0)
        assert set(r.statuses) == {Status.CONJECTURAL}
        assert r.variant == PRIMITIVE
        assert str(r) == "(~8, ~6, ~4, ~1, ~0)"
        assert conjectured_pretzel_cable_spectrum(P4, 2, 3).values == (8, 6, 4, 2, 0)
        five = PretzelKnot((3, 3, 3, 3, 3))
        assert conjectured_pretzel_cable_spectrum(five, 3, 2).values == (15, 12, 9, 6, 3, 0)

    def test_pretzel_cable_hypothesis(self):
        with pytest.raises(HypothesisNotSatisfied):
            conjectured_pretzel_cable_spectrum(PretzelKnot((3, 5, 7)), 2, 3)
        with pytest.raises(HypothesisNotSatisfied):
            conjectured_pretzel_cable_spectrum(P4, 2, 4)

    def test_general_cable(self):
        r = conjectured_cable_spectrum(exact((2, 1, 0)), 2, 3)
        assert str(r) == "(~4, ~2, ?, ~0)"
        assert str(conjectured_cable_spectrum(exact((1, 0)), 5, 2)) == "(~5, ?, ~0)"
        assert str(conjectured_cable_spectrum(exact((3, 2, 0)), 3, 2)) == "(~9, ~6, ?, ~0)"

    def test_general_cable_needs_exact_base(self):
        with pytest.raises(HypothesisNotSatisfied):
            conjectured_cable_spectrum(bridge_spectrum(PretzelKnot((3, 5, 7))), 2, 3)

    def test_montesinos_m_stair_step(self):
        assert conjectured_montesinos_cable_is_m_stair_step(M("1/3", "2/5", "1/7"))
        assert not conjectured_montesinos_cable_is_m_stair_step(P4)
        assert not conjectured_montesinos_cable_is_m_stair_step(M("1/3", "1/5", "-1/7"))
        assert conjectured_m_stair_step(3, 2) == (6, 4, 2, 0)


def test_spectrum_json_round_trip():
    for text in ("P(3,5,7)", "cable(2,3; 2b(3/5))", "T(3,5)"):
        for variant in (STANDARD, PRIMITIVE):
            r = bridge_spectrum(parse_knot(text), variant)
            data = json.loads(json.dumps(r.to_json()))
            assert set(data) == {"variant", "entries"}
            assert all(set(e) == {"g", "b", "status", "provenance"} for e in data["entries"])
            assert SpectrumResult.from_json(data) == r


# --- properties over generated knots ----------------------------------------

torus_st = st.tuples(st.integers(1, 9), st.integers(-12, 12)).filter(lambda t: gcd(*t) == 1).map(lambda t: TorusKnot(*t))
# q = 1 draws p = 1, which normalizes to the unknot
two_bridge_st = st.integers(0, 30).flatmap(
    lambda h: st.integers(1, 2 * h + 1).filter(lambda p: gcd(p, 2 * h + 1) == 1).map(
        lambda p: make_two_bridge(p % (2 * h + 1), 2 * h + 1)
    )
)
pretzel_st = (
    st.lists(st.integers(-9, 9).filter(bool), min_size=1, max_size=6)
    .filter(pretzel_is_knot)
    .map(lambda ts: PretzelKnot(tuple(ts)))
)
tangle_st = st.tuples(st.integers(-12, 12), st.integers(1, 12)).map(lambda t: Fraction(*t))
montesinos_st = st.builds(
    lambda ts, e: MontesinosKnot(tuple(ts), e), st.lists(tangle_st, min_size=1, max_size=4), st.integers(-3, 3)
)
pattern_st = st.tuples(st.integers(2, 5), st.integers(-9, 9)).filter(lambda t: gcd(*t) == 1).map(lambda t: TorusKnot(*t))
cable_st = st.builds(CableKnot, pattern_st, st.one_of(two_bridge_st, torus_st, pretzel_st))
knot_st = st.one_of(torus_st, two_bridge_st, pretzel_st, montesinos_st, cable_st)


@given(knot_st, st.sampled_from([STANDARD, PRIMITIVE]))
def test_exact_entries_decrease_and_respect_stair_step(k, variant):
    r = bridge_spectrum(k, variant)
    assert [e.genus for e in r.entries] == list(range(len(r)))
    exacts = [e for e in r.entries if e.status is Status.EXACT]
    for a, b in zip(exacts, exacts[1:]):
        assert b.value < a.value
    if r.entries[0].status is Status.EXACT and r.entries[0].value:
        b0 = r.entries[0].value
        for e in exacts:
            assert e.value <= b0 - e.genus
    if r.is_exact():
        assert r.entries[-1].value == 0
        assert all(e.value > 0 for e in r.entries[:-1])


@given(knot_st)
def test_primitive_and_standard_agree_off_zero(k):
    std = bridge_spectrum(k, STANDARD)
    prim = bridge_spectrum(k, PRIMITIVE)
    for s, p in zip(std.entries, prim.entries):
        if s.status is Status.EXACT and p.status is Status.EXACT:
            if s.value:
                assert p.value == s.value
            else:
                assert p.value in (0, 1)


@given(knot_st)
def test_tunnel_consistency(k):
    t = tunnel_number(k)
    assert t.value is None or t.value >= 0
    if not t.exact:
        return
    for variant in (STANDARD, PRIMITIVE):
        for e in bridge_spectrum(k, variant).entries:
            if e.status is Status.EXACT and e.value and e.value >= 1:
                assert tunnel_upper_bound(Splitting(e.genus, e.value)) >= t.value


@given(cable_st)
def test_cable_genus_zero_is_satellite_bound(k):
    r = bridge_spectrum(k)
    companion = bridge_spectrum(k.companion)
    head = r.entries[0]
    if head.status is Status.EXACT and companion.entries[0].status is Status.EXACT and companion.entries[0].value:
        assert head.value >= satellite_lower_bound(k.index, companion.entries[0].value)
        assert head.value == k.index * companion.entries[0].value


@given(
    st.lists(st.sampled_from([-9, -6, -3, 3, 6, 9]), min_size=2, max_size=6),
    st.integers(-15, 15).filter(lambda n: n % 2),
)
def test_conjectured_last_step_matches_residual_braid(twists, n):
    assume(pretzel_is_knot(twists))
    p = PretzelKnot(tuple(twists))
    r = conjectured_pretzel_cable_spectrum(p, 2, n)
    residual = exponent_sum(residual_two_strand_word(p, 2, n))
    assert r.values[-2] == min(2, abs(residual))
