"""Distance, crossing, and region geometry on the square and the disk."""

import math

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from geoclique import (
    AnnulusSector,
    EndpointCollision,
    EuclideanModel,
    HyperbolicModel,
    InvalidParameter,
    NoCrossing,
    NotIndependent,
    NumericalDegeneracy,
    OutOfDomain,
    angular_difference,
    cosh_distance,
    distance,
    geodesic_walk,
    in_domain,
    intersection_and_angle,
    is_independent,
    length_slack,
    make_segment,
    midpoint,
    point_density,
    region_probability,
    sector_contains,
    threshold,
)
from geoclique.geometry import (
    _euclid_line_cross,
    _hyperbolic_cross,
    direction_from,
    from_disk,
    is_long,
    to_disk,
)

EU = EuclideanModel(n=100, r=0.55)
HY = HyperbolicModel(n=10_000, gamma=2.5, C=0.0)


def hyp_pair(model, seed_tuple, theta_lo=0.25, theta_hi=math.pi - 0.25):
    """Deterministically build an independent crossing pair on the disk from
    a tuple of unit floats, or return None when the draw is inadmissible."""
    u = seed_tuple
    R = model.R
    q = (u[0] * 0.45 * R, u[1] * 2.0 * math.pi)
    psi = u[2] * 2.0 * math.pi
    theta = theta_lo + u[3] * (theta_hi - theta_lo)
    a = R + 0.05 + u[4] * 0.4
    b = R + 0.05 + u[5] * 0.4
    c1 = a / 2 + (u[6] - 0.5) * 0.2
    c2 = b / 2 + (u[7] - 0.5) * 0.2
    v1 = geodesic_walk(model, q, psi, c1)
    v2 = geodesic_walk(model, q, psi + math.pi, a - c1)
    w1 = geodesic_walk(model, q, psi + theta, c2)
    w2 = geodesic_walk(model, q, psi + theta + math.pi, b - c2)
    if not all(in_domain(model, p) for p in (v1, v2, w1, w2)):
        return None
    s = make_segment(model, v1, v2)
    t = make_segment(model, w1, w2)
    if not (is_long(model, s) and is_long(model, t)
            and is_independent(model, s, t)):
        return None
    return s, t


unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
unit8 = st.tuples(*[unit] * 8)


class TestModels:
    def test_euclidean_validation(self):
        with pytest.raises(InvalidParameter):
            EuclideanModel(n=-1, r=0.3)
        with pytest.raises(InvalidParameter):
            EuclideanModel(n=10, r=0.0)
        with pytest.raises(InvalidParameter):
            EuclideanModel(n=10, r=1.5)

    def test_hyperbolic_validation(self):
        with pytest.raises(InvalidParameter):
            HyperbolicModel(n=0, gamma=2.5)
        with pytest.raises(InvalidParameter):
            HyperbolicModel(n=100, gamma=2.0)
        with pytest.raises(InvalidParameter):
            HyperbolicModel(n=100, gamma=3.0)
        with pytest.raises(InvalidParameter):
            HyperbolicModel(n=2, gamma=2.5, C=-10.0)

    def test_derived_parameters(self):
        m = HyperbolicModel(n=10_000, gamma=2.5, C=0.0)
        assert m.alpha == 0.75
        assert abs(m.R - 2.0 * math.log(10_000)) < 1e-15
        assert threshold(m) == m.R
        assert threshold(EU) == 0.55

    def test_in_domain(self):
        assert in_domain(EU, (0.0, 1.0))
        assert not in_domain(EU, (1.0001, 0.5))
        assert in_domain(HY, (HY.R, 3.0))
        assert not in_domain(HY, (HY.R + 1e-9, 3.0))
        assert not in_domain(HY, (-0.1, 0.0))


class TestDistance:
    def test_euclid_3_4_5(self):
        assert distance(EU, (0.1, 0.1), (0.4, 0.5)) == pytest.approx(0.5, abs=1e-15)

    def test_hyperbolic_through_origin(self):
        # Points on opposite rays: distance is the sum of the radii.
        assert distance(HY, (2.0, 0.0), (3.0, math.pi)) == pytest.approx(5.0, abs=1e-12)

    def test_hyperbolic_same_point(self):
        assert distance(HY, (5.0, 1.0), (5.0, 1.0)) == 0.0

    def test_deep_nearby_points_keep_precision(self):
        # The classical cosh*cosh - sinh*sinh*cos form loses all digits here.
        big = HyperbolicModel(n=10**8, gamma=2.5, C=0.0)
        r, dphi = 18.0, 1e-9
        d = distance(big, (r, 1.0), (r, 1.0 + dphi))
        exact = 2.0 * math.asinh(math.sinh(r) * math.sin(0.5 * (1.0 + dphi - 1.0)))
        assert d == pytest.approx(exact, rel=1e-9)

    def test_tiny_distance_relative_precision(self):
        d = distance(HY, (4.0, 0.0), (4.0, 1e-13))
        exact = 2.0 * math.asinh(math.sinh(4.0) * math.sin(5e-14))
        assert d == pytest.approx(exact, rel=1e-9)

    @given(st.floats(0.0, 10.0), st.floats(0.0, TWO_PI := 2 * math.pi),
           st.floats(0.0, 10.0), st.floats(0.0, TWO_PI))
    def test_matches_naive_law_of_cosines(self, r1, p1, r2, p2):
        # Moderate radii only: past r ~ 12 the naive formula itself loses to
        # cancellation (e.g. cosh(9)^2 - sinh(9)^2 evaluates to 1 + 3.7e-9).
        model = HyperbolicModel(n=10**7, gamma=2.5, C=0.0)
        naive = (math.cosh(r1) * math.cosh(r2)
                 - math.sinh(r1) * math.sinh(r2) * math.cos(p1 - p2))
        assert cosh_distance(model, (r1, p1), (r2, p2)) == pytest.approx(
            naive, rel=1e-9, abs=1e-6)

    @given(st.floats(-100.0, 100.0), st.floats(-100.0, 100.0))
    def test_angular_difference_properties(self, a, b):
        d = angular_difference(a, b)
        assert 0.0 <= d <= math.pi + 1e-12
        assert d == pytest.approx(angular_difference(b, a), abs=0.0)
        assert angular_difference(a + 2 * math.pi, b) == pytest.approx(d, abs=1e-9)

    def test_angular_difference_wraps(self):
        assert angular_difference(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2, abs=1e-12)


class TestSegments:
    def test_make_segment_validates_domain(self):
        with pytest.raises(OutOfDomain):
            make_segment(EU, (0.0, 0.0), (1.2, 0.0))
        with pytest.raises(OutOfDomain):
            make_segment(HY, (HY.R + 1.0, 0.0), (1.0, 0.0))

    def test_adjacency_is_inclusive(self):
        # Distance exactly r is an edge, so the segment is not a non-edge.
        s = make_segment(EU, (0.1, 0.5), (0.65, 0.5))
        assert s.length == pytest.approx(0.55, abs=1e-15)
        assert not is_long(EU, s)
        assert is_long(EU, make_segment(EU, (0.1, 0.5), (0.66, 0.5)))

    def test_independent_pair(self):
        s = make_segment(EU, (0.2, 0.5), (0.8, 0.5))
        t = make_segment(EU, (0.5, 0.25), (0.5, 0.85))
        assert is_independent(EU, s, t)

    def test_scaled_half_unit_example(self):
        model = EuclideanModel(n=100, r=0.5)
        s = make_segment(model, (0.1, 0.35), (0.7, 0.35))
        t = make_segment(model, (0.4, 0.6), (0.4, 0.05))
        assert is_independent(model, s, t)

    def test_far_pair_is_not_independent(self):
        s = make_segment(EU, (0.05, 0.1), (0.05, 0.9))
        t = make_segment(EU, (0.95, 0.1), (0.95, 0.9))
        assert not is_independent(EU, s, t)

    def test_shared_endpoint_raises(self):
        s = make_segment(EU, (0.2, 0.5), (0.8, 0.5))
        t = make_segment(EU, (0.2, 0.5), (0.5, 0.95))
        with pytest.raises(EndpointCollision):
            is_independent(EU, s, t)

    def test_edge_segment_raises(self):
        s = make_segment(EU, (0.2, 0.5), (0.8, 0.5))
        short = make_segment(EU, (0.5, 0.3), (0.5, 0.6))
        with pytest.raises(InvalidParameter):
            is_independent(EU, s, short)


class TestCrossing:
    def test_euclid_perpendicular_cross(self):
        s = make_segment(EU, (0.2, 0.5), (0.8, 0.5))
        t = make_segment(EU, (0.5, 0.25), (0.5, 0.85))
        rec = intersection_and_angle(EU, s, t)
        assert rec.q == pytest.approx((0.5, 0.5), abs=1e-12)
        assert rec.theta == pytest.approx(math.pi / 2, abs=1e-12)
        assert rec.v1 == (0.2, 0.5)
        assert rec.v2 == (0.8, 0.5)
        # ccw from ray q->v1 (pointing -x), the first endpoint of t reached
        # is the one below the axis.
        assert rec.w1 == (0.5, 0.25)
        assert rec.w2 == (0.5, 0.85)
        assert rec.cut_first == pytest.approx(0.3, abs=1e-12)
        assert rec.cut_second == pytest.approx(0.25, abs=1e-12)
        assert rec.m == pytest.approx((0.5, 0.5), abs=1e-15)
        assert rec.midpoint_reach == pytest.approx(0.25, abs=1e-12)
        assert rec.midpoint_angle == pytest.approx(math.pi / 2, abs=1e-12)

    def test_not_independent_raises(self):
        s = make_segment(EU, (0.05, 0.1), (0.05, 0.9))
        t = make_segment(EU, (0.95, 0.1), (0.95, 0.9))
        with pytest.raises(NotIndependent):
            intersection_and_angle(EU, s, t)

    def test_parallel_lines_degenerate(self):
        s = make_segment(EU, (0.2, 0.5), (0.8, 0.5))
        t = make_segment(EU, (0.2, 0.6), (0.8, 0.6))
        with pytest.raises(NumericalDegeneracy):
            _euclid_line_cross(s, t)

    def test_hyperbolic_disjoint_geodesics(self):
        # Mirror-image segments on opposite sides of the origin never meet.
        s = make_segment(HY, (9.5, 1.0), (9.5, 2.0))
        t = make_segment(HY, (9.5, 1.0 + math.pi), (9.5, 2.0 + math.pi))
        with pytest.raises(NoCrossing):
            _hyperbolic_cross(HY, s, t)

    @given(unit8)
    @settings(max_examples=150, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much])
    def test_euclid_law_of_cosines(self, u):
        # Shrink a disk construction onto the square around (1/2, 1/2).
        model = EuclideanModel(n=100, r=0.3)
        q = (0.5 + (u[0] - 0.5) * 0.1, 0.5 + (u[1] - 0.5) * 0.1)
        psi = u[2] * 2 * math.pi
        theta = 0.25 + u[3] * (math.pi - 0.5)
        a = 0.31 + u[4] * 0.04
        b = 0.31 + u[5] * 0.04
        c1 = a / 2 + (u[6] - 0.5) * 0.02
        c2 = b / 2 + (u[7] - 0.5) * 0.02
        v1 = geodesic_walk(model, q, psi, c1)
        v2 = geodesic_walk(model, q, psi + math.pi, a - c1)
        w1 = geodesic_walk(model, q, psi + theta, c2)
        w2 = geodesic_walk(model, q, psi + theta + math.pi, b - c2)
        assume(all(in_domain(model, p) for p in (v1, v2, w1, w2)))
        s = make_segment(model, v1, v2)
        t = make_segment(model, w1, w2)
        assume(is_long(model, s) and is_long(model, t)
               and is_independent(model, s, t))
        rec = intersection_and_angle(model, s, t)
        ah, c, d = rec.length_first, rec.cut_first, rec.cut_second
        rhs = ((ah / 2 - c) ** 2 + d * d
               + 2 * (ah / 2 - c) * d * math.cos(rec.theta))
        assert rec.midpoint_reach ** 2 == pytest.approx(rhs, abs=1e-9)

    @given(unit8)
    @settings(max_examples=150, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much])
    def test_hyperbolic_law_of_cosines(self, u):
        pair = hyp_pair(HY, u)
        assume(pair is not None)
        rec = intersection_and_angle(HY, *pair)
        a, c, d = rec.length_first, rec.cut_first, rec.cut_second
        lhs = math.cosh(rec.midpoint_reach)
        rhs = (math.cosh(a / 2 - c) * math.cosh(d)
               + math.sinh(a / 2 - c) * math.sinh(d) * math.cos(rec.theta))
        assert abs(lhs - rhs) <= 5e-9 * max(1.0, abs(lhs))
        # Crossing lies on both segments.
        gap = (distance(HY, rec.v1, rec.q) + distance(HY, rec.q, rec.v2)
               - rec.length_first)
        assert abs(gap) < 1e-9 * rec.length_first

    @given(unit8)
    @settings(max_examples=100, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much])
    def test_role_swap_angle_sum(self, u):
        pair = hyp_pair(HY, u)
        assume(pair is not None)
        s, t = pair
        rec = intersection_and_angle(HY, s, t)
        rec2 = intersection_and_angle(HY, t, s)
        assert rec.theta + rec2.theta == pytest.approx(math.pi, abs=1e-9)
        assert 0.0 < rec.theta < math.pi
        assert rec2.v1 == min(rec.w1, rec.w2)
        assert distance(HY, rec.q, rec2.q) < 1e-9

    @given(unit8)
    @settings(max_examples=100, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much])
    def test_orientation_invariance(self, u):
        pair = hyp_pair(HY, u)
        assume(pair is not None)
        s, t = pair
        rec = intersection_and_angle(HY, s, t)
        flipped = intersection_and_angle(
            HY, make_segment(HY, s.p1, s.p0), make_segment(HY, t.p1, t.p0))
        assert flipped.theta == pytest.approx(rec.theta, abs=1e-9)
        assert flipped.v1 == rec.v1 and flipped.w1 == rec.w1


class TestWalks:
    @given(st.floats(0.1, 17.0), st.floats(0.0, 2 * math.pi),
           st.floats(0.0, 2 * math.pi), st.floats(0.01, 18.0))
    @settings(max_examples=150)
    def test_walk_distance_round_trip(self, r, phi, heading, dist):
        # An ulp of the angle coordinate at radius r is worth ~e^r * eps of
        # arc length, so short hops between deep points can't round-trip to
        # fixed relative precision.
        p = (r, phi)
        x = geodesic_walk(HY, p, heading, dist)
        noise = math.exp(max(r, x[0])) * 1e-15
        assert abs(distance(HY, p, x) - dist) <= max(1e-9 * dist, noise)
        back = direction_from(HY, p, x)
        assert angular_difference(back, heading) < 1e-6 + noise / dist

    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0),
           st.floats(0.0, 2 * math.pi), st.floats(0.001, 0.5))
    def test_euclid_walk(self, x, y, heading, dist):
        p = (x, y)
        q = geodesic_walk(EU, p, heading, dist)
        assert distance(EU, p, q) == pytest.approx(dist, rel=1e-12)

    @given(st.floats(0.05, 17.5), st.floats(0.0, 2 * math.pi),
           st.floats(0.05, 17.5), st.floats(0.0, 2 * math.pi))
    @settings(max_examples=150)
    def test_midpoint_bisects(self, r1, p1, r2, p2):
        s = make_segment(HY, (r1, p1), (r2, p2))
        assume(s.length > 1e-6)
        m = midpoint(HY, s)
        assert distance(HY, s.p0, m) == pytest.approx(s.length / 2, rel=1e-8, abs=1e-9)
        assert distance(HY, m, s.p1) == pytest.approx(s.length / 2, rel=1e-8, abs=1e-9)

    @given(st.floats(0.0, 25.0), st.floats(0.0, 2 * math.pi))
    def test_chart_round_trip(self, r, phi):
        # Radial noise of the chart grows like e^r * eps: the boundary gap
        # 1 - |z| = 2 e^{-r}(1 + o(1)) is resolved to eps absolute.
        rr, pp = from_disk(to_disk((r, phi)))
        assert abs(rr - r) <= 1e-12 + math.exp(r) * 2e-16
        if r > 1e-9:
            assert angular_difference(pp, phi) < 1e-9


class TestLengthSlack:
    def test_right_angle_is_ln_two(self):
        assert length_slack(math.pi / 2, 30.0) == pytest.approx(math.log(2.0), abs=1e-12)

    def test_zero_angle(self):
        assert length_slack(0.0, 30.0) == pytest.approx(math.exp(-60.0), abs=1e-15)

    def test_monotone_in_theta(self):
        grid = [length_slack(th, 20.0) for th in
                [0.1 * k for k in range(1, 31)]]
        assert all(a < b for a, b in zip(grid, grid[1:]))

    def test_domain(self):
        with pytest.raises(InvalidParameter):
            length_slack(math.pi, 20.0)
        with pytest.raises(InvalidParameter):
            length_slack(-0.1, 20.0)


class TestRegions:
    def test_sector_validation(self):
        with pytest.raises(InvalidParameter):
            AnnulusSector(r_lo=0.3, r_hi=0.2, phi_lo=0.0, phi_hi=1.0)
        with pytest.raises(InvalidParameter):
            AnnulusSector(r_lo=0.1, r_hi=0.2, phi_lo=1.0, phi_hi=1.0)

    def test_euclid_probability_is_area(self):
        sec = AnnulusSector(r_lo=0.1, r_hi=0.25, phi_lo=0.0, phi_hi=0.7,
                            center=(0.5, 0.5))
        assert region_probability(EU, sec) == pytest.approx(
            0.5 * (0.25 ** 2 - 0.1 ** 2) * 0.7, abs=1e-15)

    def test_euclid_sector_must_fit(self):
        sec = AnnulusSector(r_lo=0.1, r_hi=0.3, phi_lo=0.0, phi_hi=0.7,
                            center=(0.2, 0.5))
        with pytest.raises(OutOfDomain):
            region_probability(EU, sec)
        with pytest.raises(OutOfDomain):
            region_probability(EU, AnnulusSector(
                r_lo=0.0, r_hi=0.2, phi_lo=0.0, phi_hi=1.0))

    def test_disk_probability_frozen(self):
        m = HyperbolicModel(n=1000, gamma=2.5, C=0.0)
        sec = AnnulusSector(r_lo=3.0, r_hi=7.5, phi_lo=0.3, phi_hi=1.1)
        # Closed form cross-checked against numeric quadrature of the radial
        # density; values agree to 4e-19.
        assert region_probability(m, sec) == pytest.approx(
            0.0010778491444646406, rel=1e-12)

    def test_disk_probability_quadrature(self):
        quad = pytest.importorskip("scipy.integrate")
        m = HyperbolicModel(n=2000, gamma=2.7, C=-1.0)

        def radial(r):
            return (m.alpha * math.sinh(m.alpha * r)
                    / (math.cosh(m.alpha * m.R) - 1.0))

        sec = AnnulusSector(r_lo=1.0, r_hi=0.8 * m.R, phi_lo=0.0, phi_hi=2.2)
        val, _ = quad.quad(radial, sec.r_lo, sec.r_hi)
        assert region_probability(m, sec) == pytest.approx(
            val * sec.span / (2 * math.pi), rel=1e-6)

    def test_full_disk_is_one(self):
        sec = AnnulusSector(r_lo=0.0, r_hi=HY.R, phi_lo=0.0,
                            phi_hi=2 * math.pi)
        assert region_probability(HY, sec) == pytest.approx(1.0, rel=1e-12)

    def test_disk_sector_needs_origin_frame(self):
        sec = AnnulusSector(r_lo=0.0, r_hi=2.0, phi_lo=0.0, phi_hi=1.0,
                            center=(0.5, 0.5))
        with pytest.raises(OutOfDomain):
            region_probability(HY, sec)

    def test_contains_wraps_around(self):
        sec = AnnulusSector(r_lo=1.0, r_hi=4.0, phi_lo=6.0, phi_hi=6.8,
                            center=None)
        assert sector_contains(HY, sec, (2.0, 0.2))
        assert sector_contains(HY, sec, (2.0, 6.1))
        assert not sector_contains(HY, sec, (2.0, 1.0))
        assert not sector_contains(HY, sec, (0.5, 6.1))

    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_contains_matches_polar_arithmetic(self, x, y):
        sec = AnnulusSector(r_lo=0.05, r_hi=0.3, phi_lo=0.5, phi_hi=2.0,
                            center=(0.5, 0.5))
        rho = math.hypot(x - 0.5, y - 0.5)
        ang = math.atan2(y - 0.5, x - 0.5) % (2 * math.pi)
        manual = 0.05 <= rho <= 0.3 and 0.5 <= ang <= 2.0
        assert sector_contains(EU, sec, (x, y)) == manual


class TestPointDensity:
    def test_frozen_band_value(self):
        m = HyperbolicModel(n=1000, gamma=2.5, C=0.0)
        v = point_density(m, m.R / 2) * 1000 ** (1 + m.alpha)
        assert v == pytest.approx(0.23874020299860177, rel=1e-9)
        assert 1e-3 <= v <= 1e3

    def test_decreasing_in_radius(self):
        vals = [point_density(HY, r) for r in (1.0, 3.0, 6.0, 12.0, HY.R)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(OutOfDomain):
            point_density(HY, 0.0)
        with pytest.raises(OutOfDomain):
            point_density(HY, HY.R + 0.1)
