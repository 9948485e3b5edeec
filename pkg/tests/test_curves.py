import math

import numpy as np
import oracles
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from swe_riemann import (
    W1,
    W1B,
    W2,
    W2B,
    DegenerateJump,
    NoIntersection,
    NonPositiveDepth,
    NoSonicPoint,
    OffCurve,
    RangeViolation,
    State,
    WrongRegion,
    check_lax,
    hugoniot_u,
    intersect_W1_W2B,
    lax_margin,
    rarefaction_u,
    reflect_state,
    shock_speed,
    sonic_point,
    wave_curve_u,
    zero_speed_point,
)
from swe_riemann.curves import (
    Direction,
    curve_u_array,
    shock_speed_divided,
    wave_curve_dudh,
)

G = 9.81
U10 = State(1.0, 0.0)
anchors = st.builds(State, st.floats(0.05, 20.0), st.floats(-10.0, 10.0), st.floats(-2.0, 2.0))
ratios = st.floats(0.02, 50.0)


def test_hugoniot_examples():
    assert hugoniot_u(1, 1.0, U10) == 0.0
    expected = -math.sqrt(G / 2.0) * math.sqrt(1.5)  # independent evaluation at h = 2
    assert hugoniot_u(1, 2.0, U10) == pytest.approx(expected, rel=1e-15)
    assert hugoniot_u(1, 2.0, U10) == pytest.approx(-2.71245, abs=1e-4)
    assert hugoniot_u(2, 2.0, U10) == pytest.approx(2.71245, abs=1e-4)


def test_shock_speed_examples():
    U = State(2.0, hugoniot_u(1, 2.0, U10))
    assert shock_speed(1, U10, U) == pytest.approx(-5.42490, abs=1e-4)
    # divided-difference form of the same speed
    assert shock_speed(1, U10, U) == pytest.approx(shock_speed_divided(U10, U), rel=1e-12)
    V = State(2.0, hugoniot_u(2, 2.0, U10))
    assert shock_speed(2, U10, V) == pytest.approx(5.42490, abs=1e-4)
    U0 = State(1.0, 4.0)
    h_t = zero_speed_point(1, U0)
    assert h_t == pytest.approx(1.37405, abs=1e-4)
    assert abs(shock_speed(1, U0, State(h_t, hugoniot_u(1, h_t, U0)))) < 1e-12


def test_shock_speed_errors():
    with pytest.raises(DegenerateJump):
        shock_speed(1, U10, U10)
    with pytest.raises(OffCurve):
        shock_speed(1, U10, State(2.0, 0.0))


def test_lax_examples():
    U = State(2.0, hugoniot_u(1, 2.0, U10))
    assert check_lax(1, U10, U)
    lam_R, s, lam_L = U.u - math.sqrt(G * 2.0), shock_speed(1, U10, U), -math.sqrt(G)
    assert lam_R == pytest.approx(-7.1419, abs=1e-4) and lam_L == pytest.approx(-3.1321, abs=1e-4)
    assert lax_margin(1, U10, U) == pytest.approx(min(s - lam_R, lam_L - s), rel=1e-12)
    assert not check_lax(1, U10, State(0.5, hugoniot_u(1, 0.5, U10)))
    assert check_lax(2, U10, State(0.5, hugoniot_u(2, 0.5, U10)))


def test_rarefaction_examples():
    assert rarefaction_u(1, 1.0, U10) == 0.0
    assert rarefaction_u(1, 0.5, U10) == pytest.approx(1.83475, abs=1e-4)
    assert rarefaction_u(2, 4.0, U10) == pytest.approx(2.0 * math.sqrt(G), rel=1e-15)
    with pytest.raises(RangeViolation):
        rarefaction_u(1, 2.0, U10)
    with pytest.raises(RangeViolation):
        rarefaction_u(1, 0.5, U10, direction=Direction.BACKWARD)


def test_wave_curve_examples():
    assert wave_curve_u(W1(U10), 2.0) == pytest.approx(-2.71245, abs=1e-4)
    assert wave_curve_u(W1(U10), 0.5) == pytest.approx(1.83475, abs=1e-4)
    # backward 2-curve through the dam-break middle state
    h_m, u_m = oracles.star_state(2.0, 0.0, 1.0, 0.0)
    assert wave_curve_u(W2B(U10), h_m) == pytest.approx(u_m, abs=1e-9)
    # the quoted value 1.3058 belongs to the unrounded depth 1.45384...
    assert wave_curve_u(W2B(U10), h_m) == pytest.approx(1.3058, abs=1e-4)
    with pytest.raises(NonPositiveDepth):
        wave_curve_u(W1(U10), 0.0)


@given(anchors)
def test_every_curve_passes_through_its_anchor(U0):
    for spec in (W1(U0), W2(U0), W1B(U0), W2B(U0)):
        assert wave_curve_u(spec, U0.h) == U0.u


@given(anchors, ratios)
def test_shock_speed_forms_agree(U0, r):
    assume(abs(r - 1.0) > 1e-3)
    for fam in (1, 2):
        U = State(U0.h * r, hugoniot_u(fam, U0.h * r, U0), U0.a)
        closed, divided = shock_speed(fam, U0, U), shock_speed_divided(U0, U)
        assert closed == pytest.approx(divided, rel=1e-9, abs=1e-9)


@given(anchors, ratios)
def test_lax_equivalent_to_depth_rule(U0, r):
    assume(abs(r - 1.0) > 1e-3)
    h = U0.h * r
    assert check_lax(1, U0, State(h, hugoniot_u(1, h, U0))) == (h > U0.h)
    assert check_lax(2, U0, State(h, hugoniot_u(2, h, U0))) == (h < U0.h)


@given(anchors, ratios)
def test_reflection_swaps_families(U0, r):
    h = U0.h * r
    R0 = reflect_state(U0)
    assert wave_curve_u(W2B(R0), h) == pytest.approx(-wave_curve_u(W1(U0), h), rel=1e-13, abs=1e-12)
    assert wave_curve_u(W1B(R0), h) == pytest.approx(-wave_curve_u(W2(U0), h), rel=1e-13, abs=1e-12)


@given(anchors, ratios)
def test_analytic_slope_matches_difference(U0, r):
    h = U0.h * r
    assume(abs(r - 1.0) > 1e-3)
    d = 1e-6 * h
    for spec in (W1(U0), W2(U0), W1B(U0), W2B(U0)):
        num = (wave_curve_u(spec, h + d) - wave_curve_u(spec, h - d)) / (2 * d)
        assert wave_curve_dudh(spec, h) == pytest.approx(num, rel=1e-6, abs=1e-6)


@given(anchors)
def test_array_curve_matches_scalar(U0):
    hs = U0.h * np.geomspace(0.05, 20.0, 17)
    for fam, direction, spec in ((1, Direction.FORWARD, W1(U0)), (2, Direction.BACKWARD, W2B(U0)),
                                 (2, Direction.FORWARD, W2(U0)), (1, Direction.BACKWARD, W1B(U0))):
        arr = curve_u_array(fam, direction, U0.h, U0.u, hs, G)
        ref = [wave_curve_u(spec, h) for h in hs]
        assert np.allclose(arr, ref, rtol=1e-14, atol=1e-13)


def test_zero_speed_point_regions():
    assert zero_speed_point(2, State(1.0, -4.0)) == pytest.approx(1.37405, abs=1e-4)
    with pytest.raises(WrongRegion):
        zero_speed_point(1, State(1.0, 1.0))
    with pytest.raises(WrongRegion):
        zero_speed_point(2, State(1.0, 4.0))


def test_sonic_point():
    U = sonic_point(U10)
    assert U.h == pytest.approx(4.0 / 9.0, rel=1e-15)
    assert U.u == pytest.approx(math.sqrt(G * 4.0 / 9.0), rel=1e-15)
    assert U.u == pytest.approx(2.08806, abs=1e-4)
    with pytest.raises(NoSonicPoint):
        sonic_point(State(1.0, -10.0))


def test_intersection_examples():
    U = intersect_W1_W2B(State(2.0, 0.0), U10)
    h_m, u_m = oracles.star_state(2.0, 0.0, 1.0, 0.0)
    assert U.h == pytest.approx(h_m, rel=1e-10) and U.u == pytest.approx(u_m, rel=1e-10)
    assert (U.h, U.u) == pytest.approx((1.45385, 1.3058), abs=1e-4)
    assert intersect_W1_W2B(U10, U10) == U10
    with pytest.raises(NoIntersection):
        intersect_W1_W2B(State(1.0, -10.0), State(1.0, 10.0))


@given(anchors, anchors)
def test_intersection_lies_on_both_curves(UL, UR):
    try:
        U = intersect_W1_W2B(UL, UR)
    except NoIntersection:
        # vacuum data: the fans separate before the curves meet
        assert UL.u + 2 * math.sqrt(G * UL.h) <= UR.u - 2 * math.sqrt(G * UR.h) + 1e-9
        return
    assert U.u == pytest.approx(wave_curve_u(W1(UL), U.h), rel=1e-10, abs=1e-10)
    assert U.u == pytest.approx(wave_curve_u(W2B(UR), U.h), rel=1e-10, abs=1e-10)
