"""Closed-form comparison geometry: hyperbolic caps, curvatures, volumes.

Hyperbolic caps y(r) = sqrt(r**2 + mu**2) + c are the constant-mean-curvature
comparison surfaces (H = 1/mu, future-directed); they bound computed profiles
from above and below and carry explicit volume formulas used by the estimate
verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import (
    BeyondMaxDrop,
    InvalidConfig,
    NotPendent,
    OrderingViolated,
    OutOfDomain,
    VolumeMismatch,
)
from .ode import ContactData, DropProfile, height_zeros, slope_zeros

__all__ = [
    "HyperbolicCap",
    "CurvaturePair",
    "NoGravityProfile",
    "no_gravity_profile",
    "curvatures",
    "bounding_caps",
    "pendent_envelope_cap",
    "cap_volume_F",
    "volumes",
    "pendent_volume",
]


@dataclass(frozen=True)
class HyperbolicCap:
    """Rotated hyperbola y(r) = orientation*sqrt(r^2 + mu^2) + c.

    orientation +1 is the future-directed bowl with mean curvature 1/mu;
    -1 is the mirrored branch.
    """

    mu: float
    c: float
    orientation: int = 1

    def __post_init__(self):
        if self.mu <= 0:
            raise InvalidConfig("cap parameter mu must be positive")
        if self.orientation not in (1, -1):
            raise InvalidConfig("orientation must be +1 or -1")

    @property
    def mean_curvature(self) -> float:
        return self.orientation / self.mu

    def height(self, r):
        return self.orientation * np.sqrt(np.asarray(r) ** 2 + self.mu**2) + self.c

    def slope(self, r):
        r = np.asarray(r, dtype=float)
        return self.orientation * r / np.sqrt(r**2 + self.mu**2)

    def sinh_angle(self, r):
        """v = y'/sqrt(1 - y'^2) = orientation * r / mu."""
        return self.orientation * np.asarray(r, dtype=float) / self.mu

    def curvature_rate(self, r):
        """Second derivative y''(r)."""
        r = np.asarray(r, dtype=float)
        return self.orientation * self.mu**2 / (r**2 + self.mu**2) ** 1.5

    def axis_crossing(self) -> float:
        """Radius where the cap meets y = 0, or nan if it stays one-signed."""
        if self.orientation * self.c >= -self.mu:
            return math.nan
        return math.sqrt(self.c**2 - self.mu**2)


@dataclass(frozen=True)
class CurvaturePair:
    """Principal curvatures along the meridian (k_m) and latitude (k_l)."""

    k_m: float
    k_l: float

    @property
    def total(self) -> float:
        return self.k_m + self.k_l


@dataclass(frozen=True)
class NoGravityProfile:
    """Closed-form stationary drop with no gravity (kappa = 0).

    For beta = 0 this is the flat plane u = c; otherwise a hyperbolic cap
    with u'(R) = tanh(beta) exactly and plane height c at the contact circle.
    """

    beta: float
    R: float
    c: float

    @property
    def cap(self) -> HyperbolicCap | None:
        if self.beta == 0.0:
            return None
        sgn = 1 if self.beta > 0 else -1
        mu = self.R / abs(math.sinh(self.beta))
        return HyperbolicCap(mu, self.c - self.R / math.tanh(self.beta), sgn)

    def height(self, r):
        if self.beta == 0.0:
            return np.full_like(np.asarray(r, dtype=float), self.c)
        return self.cap.height(r)

    def slope(self, r):
        if self.beta == 0.0:
            return np.zeros_like(np.asarray(r, dtype=float))
        return self.cap.slope(r)

    def sinh_angle(self, r):
        if self.beta == 0.0:
            return np.zeros_like(np.asarray(r, dtype=float))
        return self.cap.sinh_angle(r)


def no_gravity_profile(beta: float, R: float, c: float = 0.0) -> NoGravityProfile:
    """Stationary drop for kappa = 0 wetting a disc of radius R."""
    if R <= 0:
        raise InvalidConfig("wetted radius R must be positive")
    return NoGravityProfile(beta=float(beta), R=float(R), c=float(c))


def _require_lam_zero(profile: DropProfile, what: str):
    if profile.params.lam != 0.0:
        raise InvalidConfig(f"{what} assumes the reduced equation (lam = 0); "
                            "rescale the profile first")


def curvatures(profile: DropProfile, r: float) -> CurvaturePair:
    """Principal curvatures at radius r, using the profile equation.

    k_l = sinh(psi)/r and k_m is recovered from k_m + k_l = kappa*u + lam,
    which avoids differentiating the dense output.  At r = 0 both equal
    (kappa*u0 + lam)/2.
    """
    if not 0.0 <= r <= profile.r_max:
        raise OutOfDomain(f"radius outside [0, {profile.r_max}]")
    k, lam = profile.params.kappa, profile.params.lam
    if r == 0.0:
        half = 0.5 * (k * profile.u0 + lam)
        return CurvaturePair(half, half)
    k_l = profile.sinh_angle(r) / r
    return CurvaturePair(k * profile.height(r) + lam - k_l, k_l)


def bounding_caps(profile: DropProfile, contact: ContactData,
                  tol: float = 1e-12) -> tuple[HyperbolicCap, HyperbolicCap]:
    """Caps sandwiching a sessile profile: y1 < u < y2 on (0, R].

    The lower cap matches the axis mean curvature (mu1 = 2/(kappa*u0)); the
    upper cap matches the contact slope (mu2 = R/sinh(beta)).  The sandwich is
    verified on the profile nodes and OrderingViolated is raised if it fails
    beyond tol, which would indicate an integrator fault.
    """
    _require_lam_zero(profile, "bounding_caps")
    k, u0 = profile.params.kappa, profile.u0
    if k <= 0 or u0 <= 0:
        raise InvalidConfig("bounding caps require a sessile profile (kappa, u0 > 0)")
    mu1 = 2.0 / (k * u0)
    mu2 = contact.R / math.sinh(contact.beta)
    lower = HyperbolicCap(mu1, u0 - mu1)
    upper = HyperbolicCap(mu2, u0 - mu2)
    sel = (profile.r > 0) & (profile.r <= contact.R * (1 + 1e-12))
    rs, us = profile.r[sel], profile.u[sel]
    scale = 1.0 + np.max(np.abs(us), initial=0.0)
    if np.any(us - lower.height(rs) < -tol * scale):
        raise OrderingViolated("lower cap crosses above the profile")
    if np.any(upper.height(rs) - us < -tol * scale):
        raise OrderingViolated("upper cap crosses below the profile")
    return lower, upper


def pendent_envelope_cap(u0: float, kappa: float) -> HyperbolicCap:
    """Cap lying above a pendent profile, meeting the axis at u0.

    y(r) = sqrt(r^2 + (2/(kappa*u0))^2) + u0 - 2/(kappa*u0); it crosses the
    r-axis at sqrt(u0^2 - 4/kappa).
    """
    if kappa >= 0 or u0 >= 0:
        raise InvalidConfig("envelope cap requires kappa < 0 and u0 < 0")
    mu = 2.0 / (kappa * u0)
    return HyperbolicCap(mu, u0 - mu)


def cap_volume_F(u0: float, s: float, R: float) -> float:
    """F(u0; s) = (R^2/2)(u0 - s) + ((s^2+R^2)^(3/2) - s^3)/3.

    2*pi*F is the cone volume of the cap with parameter s through (0, u0);
    increasing in u0 at rate R^2/2.
    """
    if R < 0:
        raise InvalidConfig("R must be nonnegative")
    return 0.5 * R**2 * (u0 - s) + ((s**2 + R**2) ** 1.5 - s**3) / 3.0


def _cone_volume_quadrature(profile: DropProfile, R: float) -> float:
    """2*pi * int_0^R r*u dr by composite Simpson on the stored nodes."""
    inner = profile.r[profile.r < R * (1 - 1e-15)]
    rs = np.append(inner, R)
    if rs.size < 3:
        rs = np.linspace(0.0, R, 9)
    us = profile.height(rs)
    return 2.0 * math.pi * float(simpson(rs * us, x=rs))


def volumes(profile: DropProfile, contact: ContactData,
            tol: float = 1e-7) -> tuple[float, float]:
    """Cone volume V and physical volume of the drop up to the contact circle.

    V = 2*pi*int_0^R r*u dr has the closed form 2*pi*R*sinh(beta)/kappa; the
    quadrature value must agree with it to tol (relative) or VolumeMismatch
    is raised.  The physical volume enclosed with the plane x3 = u_R is
    pi*R^2*u_R - 2*pi*R*sinh(beta)/kappa.
    """
    _require_lam_zero(profile, "volumes")
    k = profile.params.kappa
    if k == 0.0:
        raise InvalidConfig("volumes requires kappa != 0")
    R = contact.R
    if R == 0.0:
        return 0.0, 0.0
    v_closed = 2.0 * math.pi * R * math.sinh(contact.beta) / k
    v_quad = _cone_volume_quadrature(profile, R)
    scale = max(abs(v_closed), abs(v_quad), 1e-12)
    if abs(v_closed - v_quad) > tol * scale:
        raise VolumeMismatch(
            f"closed form {v_closed!r} vs quadrature {v_quad!r} beyond {tol} relative")
    v_phys = math.pi * R**2 * contact.u_R - v_closed
    return v_closed, v_phys


def pendent_volume(profile: DropProfile, r: float) -> float:
    """Volume of the pendent drop truncated at radius r <= r_M.

    Below the first zero r_o the drop hangs under the zero plane and the
    volume is -2*pi*r*sinh(psi)/kappa; between r_o and the first maximum it
    is measured against the plane x3 = u(r), adding pi*r^2*u(r).  Beyond the
    first maximum the surface would re-cross its supporting plane, so
    BeyondMaxDrop is raised there.
    """
    _require_lam_zero(profile, "pendent_volume")
    k, u0 = profile.params.kappa, profile.u0
    if k >= 0 or u0 > 0:
        raise NotPendent("pendent_volume requires kappa < 0 and u0 <= 0")
    if not 0.0 <= r <= profile.r_max:
        raise OutOfDomain(f"radius outside [0, {profile.r_max}]")
    if u0 == 0.0:
        return 0.0
    zeros = height_zeros(profile)
    flux_term = -2.0 * math.pi * r * profile.sinh_angle(r) / k
    if zeros.size == 0 or r <= zeros[0]:
        return flux_term
    extrema = slope_zeros(profile)
    if extrema.size == 0 or r > extrema[0] * (1 + 1e-12):
        raise BeyondMaxDrop(
            f"r={r} lies past the first maximum of the profile")
    return math.pi * r**2 * profile.height(r) + flux_term
