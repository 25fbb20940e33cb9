"""All six boundary-value solvers: references, self-consistency, volumes."""

import math

import numpy as np
import pytest

from lorentzdrops import (
    CapillaryParams,
    InvalidConfig,
    height_zeros,
    integrate_ivp,
    pendent_volume,
    solve_pendent_by_plane,
    solve_pendent_by_radius,
    solve_pendent_by_volume,
    solve_sessile_by_plane,
    solve_sessile_by_radius,
    solve_sessile_by_volume,
)


def reintegrated_angle(result):
    """Contact angle from a fresh integration at the accepted u0."""
    prof = integrate_ivp(result.profile.params, result.u0, result.contact.R)
    return prof.angle(result.contact.R)


class TestSessileByRadius:
    def test_flat_for_zero_angle(self):
        res = solve_sessile_by_radius(1.0, 0.0, 3.0)
        assert res.u0 == 0.0
        assert np.all(res.profile.u == 0.0)

    @pytest.mark.parametrize("kappa,beta", [(1.0, 1.81411), (3.0, 3.12955)])
    def test_reference_inversion(self, kappa, beta):
        res = solve_sessile_by_radius(kappa, beta, 3.0)
        assert res.u0 == pytest.approx(1.0, abs=1e-4)

    def test_self_consistency(self):
        res = solve_sessile_by_radius(2.0, 1.2, 2.5)
        assert abs(reintegrated_angle(res) - 1.2) < 1e-9

    def test_negative_angle_mirrored(self):
        res = solve_sessile_by_radius(1.0, -1.81411, 3.0)
        assert res.u0 == pytest.approx(-1.0, abs=1e-4)
        assert res.contact.beta == pytest.approx(-1.81411, abs=1e-9)

    def test_bracket_recorded(self):
        res = solve_sessile_by_radius(1.0, 1.0, 2.0)
        lo, hi = res.bracket
        assert lo <= res.u0 <= hi
        assert res.iterations > 0

    def test_rejects_pendent_kappa(self):
        with pytest.raises(InvalidConfig):
            solve_sessile_by_radius(-1.0, 1.0, 2.0)


class TestSessileByPlane:
    def test_flat_plane_for_zero_angle(self):
        res = solve_sessile_by_plane(1.0, 0.0, 2.0)
        rs = np.linspace(0, res.profile.r_max, 21)
        assert res.profile.height(rs) == pytest.approx(np.full(21, 2.0), abs=1e-14)
        # the flat drop carries the offset that makes it stationary
        assert res.profile.params.lam == pytest.approx(-2.0)

    def test_reference_inversion(self):
        q = 1.8296945527918425
        res = solve_sessile_by_plane(1.0, 1.81411, 1.0 + q)
        assert res.u0 == pytest.approx(1.0, abs=1e-3)
        assert res.contact.R == pytest.approx(3.0, abs=1e-3)

    def test_self_consistency(self):
        res = solve_sessile_by_plane(1.0, 0.5, 1.0)
        prof = integrate_ivp(CapillaryParams(1.0), res.u0, res.contact.R)
        assert abs(prof.angle(res.contact.R) - 0.5) < 1e-9
        assert abs(prof.height(res.contact.R) - 1.0) < 1e-9

    def test_axis_height_below_plane(self):
        res = solve_sessile_by_plane(2.0, 1.0, 1.5)
        assert 0.0 < res.u0 < 1.5

    def test_unreachable_angle_raises(self):
        # drops under a plane at height c cannot steepen past the
        # height-angle window: cosh(beta) < 1 + kappa c^2/2
        from lorentzdrops import BracketFailure
        with pytest.raises(BracketFailure, match="cosh"):
            solve_sessile_by_plane(1.0, 1.0, 0.5)

    def test_feasible_when_plane_high_enough(self):
        # sufficient condition: cosh(beta) < 1 + kappa c^2/4
        for beta in (0.5, 1.5, 2.5):
            c = 2.2 * math.sqrt((math.cosh(beta) - 1.0))
            res = solve_sessile_by_plane(1.0, beta, c)
            assert abs(res.profile.angle(res.contact.R) - beta) < 1e-9


class TestPendentByRadius:
    def test_flat_for_zero_angle(self):
        res = solve_pendent_by_radius(-2.0, 0.0, 1.0)
        assert np.all(res.profile.u == 0.0)

    def test_self_consistency(self):
        res = solve_pendent_by_radius(-2.0, 0.8, 1.0)
        assert abs(reintegrated_angle(res) - 0.8) < 1e-9
        assert res.u0 < 0.0

    def test_disc_inside_first_zero(self):
        # R below 2/sqrt(-kappa): the wetted disc sits left of the first zero
        res = solve_pendent_by_radius(-2.0, 0.8, 1.0)
        prof = integrate_ivp(res.profile.params, res.u0, 4.0)
        r_o = float(height_zeros(prof)[0])
        assert r_o > math.sqrt(res.u0**2 + 2.0) > 1.0

    def test_drop_below_plane(self):
        res = solve_pendent_by_radius(-1.0, 1.2, 1.5)
        inner = res.profile.u[res.profile.r < res.contact.R]
        assert np.all(inner < res.contact.u_R)


class TestPendentByPlane:
    def test_flat_for_zero_angle(self):
        res = solve_pendent_by_plane(-2.0, 0.0)
        assert np.all(res.profile.u == 0.0)

    def test_self_consistency_and_sign(self):
        res = solve_pendent_by_plane(-2.0, 1.0)
        prof = integrate_ivp(res.profile.params, res.u0, res.contact.R)
        assert abs(prof.angle(res.contact.R) - 1.0) < 1e-9
        # strictly below the support plane before the contact circle
        rs = np.linspace(0, res.contact.R * (1 - 1e-9), 200)[1:]
        assert np.all(prof.height(rs) < 0.0)

    def test_contact_on_the_plane(self):
        res = solve_pendent_by_plane(-2.0, 0.7)
        assert abs(res.contact.u_R) < 1e-9

    def test_first_zero_exceeds_gap(self):
        res = solve_pendent_by_plane(-2.0, 1.0)
        assert res.contact.R > math.sqrt(res.u0**2 + 2.0) > math.sqrt(2.0)


class TestSessileByVolume:
    @pytest.mark.parametrize("kappa,beta,v,expected_u0",
                             [(1.0, 1.81411, 23.7166, 1.0),
                              (2.0, 2.65792, 26.9017, 1.0)])
    def test_reference_inversion(self, kappa, beta, v, expected_u0):
        res = solve_sessile_by_volume(kappa, beta, v)
        assert res.u0 == pytest.approx(expected_u0, abs=2e-3)

    def test_volume_reproduced(self):
        res = solve_sessile_by_volume(1.0, 1.0, 5.0)
        c = res.contact
        vol = math.pi * c.R**2 * c.u_R - 2 * math.pi * c.R * math.sinh(c.beta)
        assert vol == pytest.approx(5.0, rel=1e-8)

    def test_volume_decreases_with_u0(self):
        # bracketing aid: deeper axis heights give smaller drops
        def vol_at(u0):
            prof = integrate_ivp(CapillaryParams(1.0), u0, 50.0)
            from lorentzdrops.shooting import _sessile_contact_radius
            from lorentzdrops.ode import IvpConfig
            R = _sessile_contact_radius(CapillaryParams(1.0), u0, 1.81411,
                                        IvpConfig())
            return (math.pi * R**2 * prof.height(R)
                    - 2 * math.pi * R * math.sinh(1.81411))
        assert vol_at(10.0) < vol_at(1.0)

    def test_requires_nonzero_angle(self):
        with pytest.raises(InvalidConfig):
            solve_sessile_by_volume(1.0, 0.0, 1.0)


class TestPendentByVolume:
    def test_small_volume_exact(self):
        res = solve_pendent_by_volume(-2.0, 0.8, 0.1)
        prof = integrate_ivp(res.profile.params, res.u0,
                             max(res.contact.R * 1.5, 2.0))
        assert pendent_volume(prof, res.contact.R) == pytest.approx(0.1, rel=1e-8)

    def test_threshold_continuity(self):
        v_thresh = -2 * math.pi * (2.0 / math.sqrt(2.0)) * math.sinh(0.8) / -2.0
        lo = solve_pendent_by_volume(-2.0, 0.8, v_thresh * (1 - 1e-7))
        hi = solve_pendent_by_volume(-2.0, 0.8, v_thresh * (1 + 1e-7))
        assert lo.u0 == pytest.approx(hi.u0, abs=1e-5)
        assert lo.contact.R == pytest.approx(hi.contact.R, abs=1e-6)

    def test_large_volume(self):
        res = solve_pendent_by_volume(-2.0, 0.8, 5.0)
        prof = integrate_ivp(res.profile.params, res.u0,
                             max(res.contact.R * 1.5, 4.0))
        assert pendent_volume(prof, res.contact.R) == pytest.approx(5.0, rel=1e-6)
        # one-sided: below the supporting plane up to the contact circle
        rs = np.linspace(0, res.contact.R * (1 - 1e-9), 300)[1:]
        assert np.all(prof.height(rs) < res.contact.u_R)

    def test_contact_angle_met(self):
        res = solve_pendent_by_volume(-1.0, 0.5, 2.0)
        assert abs(reintegrated_angle(res) - 0.5) < 1e-9


SELF_CONSISTENCY_TOL = 1e-9


class TestSelfConsistencyGrid:
    """Re-integration reproduces the boundary target on a 3x3 grid per solver."""

    @pytest.mark.parametrize("kappa", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("beta", [0.3, 1.0, 2.2])
    def test_sessile_radius(self, kappa, beta):
        res = solve_sessile_by_radius(kappa, beta, 2.0)
        assert abs(reintegrated_angle(res) - beta) < SELF_CONSISTENCY_TOL

    @pytest.mark.parametrize("kappa", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("beta", [0.3, 1.0, 2.2])
    def test_pendent_radius(self, kappa, beta):
        res = solve_pendent_by_radius(-kappa, beta, 1.0)
        assert abs(reintegrated_angle(res) - beta) < SELF_CONSISTENCY_TOL
