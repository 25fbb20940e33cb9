"""Pendent structure: features, decay, arc ratios, cap asymptotics."""

import math

import pytest

from lorentzdrops import (
    CapillaryParams,
    NotPendent,
    OutOfDomain,
    analyze,
    asymptotic_cap_deviation,
    default_scan_radius,
    extrema_decay_check,
    integrate_ivp,
    max_drop_bounds,
    ratio_bounds_check,
)

SQRT3 = math.sqrt(3.0)


@pytest.fixture(scope="module")
def ref_features(pendent_ref):
    return analyze(pendent_ref)


class TestAnalyze:
    def test_zero_profile_has_no_features(self, profile):
        feat = analyze(profile(-2.0, 0.0, 5.0))
        assert feat.is_empty

    def test_rejects_sessile(self, sessile_unit):
        with pytest.raises(NotPendent):
            analyze(sessile_unit)

    def test_rejects_positive_axis_height(self, profile):
        with pytest.raises(NotPendent):
            analyze(profile(-2.0, 1.0, 5.0))

    def test_scan_beyond_domain(self, pendent_ref):
        with pytest.raises(OutOfDomain):
            analyze(pendent_ref, r_max=100.0)

    def test_first_zero_floor(self, ref_features):
        assert ref_features.r_o > SQRT3

    def test_first_max_height(self, ref_features):
        r_M, u_M, _ = ref_features.max_drop
        assert 0.0 < u_M < 1.0 / math.sqrt(2.0)
        assert u_M**2 < 0.5

    def test_at_least_five_zeros(self, ref_features):
        assert ref_features.zeros.size >= 5

    def test_one_inflection_before_first_zero(self, ref_features):
        early = ref_features.inflections[ref_features.inflections < ref_features.r_o]
        assert early.size == 1

    def test_axis_is_a_minimum(self, ref_features):
        assert ref_features.minima[0] == (0.0, -1.0)

    def test_interleaving_pattern(self, ref_features):
        ext = ref_features.extrema
        kinds = [k for _, _, k in ext]
        assert kinds == ["min", "max"] * (len(kinds) // 2) + \
            (["min"] if len(kinds) % 2 else [])
        for (r_a, _, _), (r_b, _, _) in zip(ext, ext[1:]):
            inside_z = ref_features.zeros[(ref_features.zeros > r_a)
                                          & (ref_features.zeros < r_b)]
            inside_q = ref_features.inflections[(ref_features.inflections > r_a)
                                                & (ref_features.inflections < r_b)]
            assert inside_z.size == 1
            assert inside_q.size == 1
            assert inside_q[0] < inside_z[0]

    def test_extrema_magnitudes_decrease(self, ref_features):
        mags = [abs(u) for _, u, _ in ref_features.extrema]
        assert all(a > b for a, b in zip(mags, mags[1:]))

    def test_max_drop_volume(self, ref_features):
        r_M, u_M, v_M = ref_features.max_drop
        assert v_M == pytest.approx(math.pi * r_M**2 * u_M)

    def test_first_zero_ceiling(self, pendent_ref, ref_features):
        # minimized arc-length ceiling: r_o < 2 sqrt(e)/sqrt(-kappa)
        assert ref_features.r_o < 2.0 * math.sqrt(math.e) / math.sqrt(2.0)


class TestDecayCheck:
    def test_all_pairs_pass(self, ref_features):
        rep = extrema_decay_check(ref_features)
        assert len(rep) > 0
        assert rep.all_passed

    def test_trend_entry_present(self, ref_features):
        rep = extrema_decay_check(ref_features)
        entry = rep["extrema_trend_to_zero"]
        assert entry.passed

    def test_empty_features(self, profile):
        feat = analyze(profile(-2.0, 0.0, 5.0))
        assert len(extrema_decay_check(feat)) == 0


class TestRatioCheck:
    def test_all_arcs_pass(self, pendent_ref, ref_features):
        rep = ratio_bounds_check(pendent_ref, ref_features)
        assert len(rep) >= 20
        assert rep.all_passed

    def test_initial_arc_entries(self, pendent_ref, ref_features):
        rep = ratio_bounds_check(pendent_ref, ref_features)
        assert rep["arc0_latitude_lower"].passed
        assert rep["arc0_latitude_upper"].passed

    def test_ratio_vanishes_at_extrema(self, pendent_ref, ref_features):
        # sinh(psi) = 0 at every extremum radius by definition
        for r, _, _ in ref_features.extrema[1:4]:
            assert abs(pendent_ref.sinh_angle(r)) < 1e-11


class TestCapDeviation:
    def test_decreases_with_depth(self):
        shallow = asymptotic_cap_deviation(-5.0, -2.0, 2.0)
        deep = asymptotic_cap_deviation(-20.0, -2.0, 2.0)
        assert all(d < s for d, s in zip(deep, shallow))

    def test_slope_deviation_formula(self):
        # at r = R the slope gap is R/sqrt(R^2+4/(k u0)^2) - R/sqrt(R^2+R^2/sinh^2 psi)
        u0, kappa, R = -5.0, -2.0, 2.0
        prof = integrate_ivp(CapillaryParams(kappa), u0, R)
        sh = prof.sinh_angle(R)
        cap_slope = R / math.sqrt(R**2 + 4.0 / (kappa * u0) ** 2)
        prof_slope = R / math.sqrt(R**2 + R**2 / sh**2)
        gap = abs(cap_slope - prof_slope)
        _, d1, _ = asymptotic_cap_deviation(u0, kappa, R)
        assert d1 >= gap - 1e-12
        assert prof.slope(R) == pytest.approx(prof_slope, abs=1e-12)

    def test_requires_pendent(self):
        with pytest.raises(NotPendent):
            asymptotic_cap_deviation(1.0, -2.0, 2.0)


class TestMaxDropBounds:
    def test_reference_report_passes(self, pendent_ref, ref_features):
        rep = max_drop_bounds(pendent_ref, ref_features)
        assert rep.all_passed
        assert rep["first_zero_floor"].lhs == pytest.approx(SQRT3)

    def test_height_growth_entry(self, pendent_ref, ref_features):
        rep = max_drop_bounds(pendent_ref, ref_features,
                              u0_grid=(-0.5, -1.0, -2.0, -4.0))
        assert rep["height_growth_monotone"].passed

    def test_ceiling_entries_present(self, pendent_ref, ref_features):
        rep = max_drop_bounds(pendent_ref, ref_features)
        assert rep["first_zero_ceiling_a0.5"].passed
        assert rep["first_zero_ceiling_a1"].passed
        assert rep["first_zero_ceiling_opt"].passed

    def test_grid_of_profiles(self, profile):
        # margins stay positive across the standard pendent grid
        for kappa in (-1.0, -2.0, -3.0, -4.0):
            for u0 in (-0.5, -1.0, -2.0):
                prof = profile(kappa, u0, default_scan_radius(kappa))
                feat = analyze(prof)
                rep = max_drop_bounds(prof, feat)
                assert rep.all_passed, (kappa, u0, [e.name for e in rep.failures])


class TestFoliationPendent:
    def test_separation_below(self, pendent_ref):
        from lorentzdrops import check_foliation
        rep = check_foliation(-2.0, -1.0, 0.3, 10.0)
        assert rep.all_passed


class TestTrivialLimits:
    def test_cap_deviation_vanishes_with_shallow_drops(self):
        d0, d1, d2 = asymptotic_cap_deviation(-0.01, -2.0, 2.0)
        assert d0 < 0.02 and d1 < 0.02 and d2 < 0.03

    def test_shallower_is_closer_to_nothing(self):
        a = asymptotic_cap_deviation(-0.1, -2.0, 2.0)
        b = asymptotic_cap_deviation(-0.01, -2.0, 2.0)
        assert all(x < y for x, y in zip(b, a))
