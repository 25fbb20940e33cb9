"""Boundary-value solvers: shooting on u0 over the inner initial-value solver.

Every formulation (prescribed wetted radius, support plane or volume, in both
the sessile and pendent regime) reduces to a bracketed scalar root-find on the
axis height u0.  Brackets are seeded from the a-priori slope bounds of the
profile equation, so failures to straddle indicate an integrator fault rather
than a missing solution.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import BracketFailure, InvalidConfig
from .ode import (
    CapillaryParams,
    ContactData,
    DropProfile,
    IvpConfig,
    _integrate_nodes,
    _series_state,
    height_zeros,
    integrate_ivp,
)

__all__ = [
    "ContactData",
    "ShootingResult",
    "solve_sessile_by_radius",
    "solve_sessile_by_plane",
    "solve_pendent_by_radius",
    "solve_pendent_by_plane",
    "solve_sessile_by_volume",
    "solve_pendent_by_volume",
]

log = logging.getLogger(__name__)

_MAX_GROW = 64


@dataclass(frozen=True)
class ShootingResult:
    """Outcome of a shooting solve.

    profile is re-integrated at the accepted u0 so its dense output is
    independent of the root-finder's trial integrations; bracket records the
    final straddling interval on u0.
    """

    profile: DropProfile
    contact: ContactData
    u0: float
    iterations: int
    bracket: tuple[float, float]


def _mirror_profile(profile: DropProfile) -> DropProfile:
    """Odd-symmetry image u -> -u (valid when lam = 0)."""
    return DropProfile(profile.params, -profile.u0, profile.r.copy(),
                       -profile.u, -profile.v)


def _mirror_result(res: ShootingResult) -> ShootingResult:
    c = res.contact
    return ShootingResult(
        profile=_mirror_profile(res.profile),
        contact=ContactData(c.R, -c.beta, -c.u_R),
        u0=-res.u0,
        iterations=res.iterations,
        bracket=(-res.bracket[1], -res.bracket[0]),
    )


def _result_at(params: CapillaryParams, u0: float, R: float, cfg: IvpConfig,
               iterations: int, bracket: tuple[float, float]) -> ShootingResult:
    profile = integrate_ivp(params, u0, R, cfg)
    return ShootingResult(profile, profile.contact(R), u0, iterations, bracket)


def _flat_result(params: CapillaryParams, R: float, cfg: IvpConfig) -> ShootingResult:
    """The zero solution, which meets any plane at angle beta = 0."""
    profile = integrate_ivp(params, 0.0, R, cfg)
    return ShootingResult(profile, profile.contact(R), 0.0, 0, (0.0, 0.0))


def _terminal_event(fn, direction):
    fn.terminal = True
    fn.direction = direction
    return fn


def _v_at_radius(params, u0, R, cfg) -> float:
    _, _, v, _ = _integrate_nodes(params, u0, R, cfg)
    return float(v[-1])


# -- sessile ------------------------------------------------------------------

def solve_sessile_by_radius(kappa: float, beta: float, R: float,
                            cfg: IvpConfig | None = None) -> ShootingResult:
    """Sessile drop wetting a disc of radius R with contact angle beta.

    Finds the unique u0 >= 0 with u'(R; u0) = tanh(beta).  The initial-slope
    bound v(R; u0) > kappa*u0*R/2 makes u0 = 2*sinh(beta)/(kappa*R) a
    guaranteed upper bracket end.  Negative beta is solved by odd symmetry.
    """
    if kappa <= 0:
        raise InvalidConfig("sessile solvers require kappa > 0")
    if R <= 0:
        raise InvalidConfig("R must be positive")
    cfg = cfg or IvpConfig()
    params = CapillaryParams(kappa)
    if beta == 0.0:
        return _flat_result(params, R, cfg)
    if beta < 0:
        return _mirror_result(solve_sessile_by_radius(kappa, -beta, R, cfg))

    target = math.sinh(beta)
    evals = 0

    def f(u0):
        nonlocal evals
        evals += 1
        return _v_at_radius(params, u0, R, cfg) - target

    lo = 0.0  # the flat solution: v(R; 0) - target = -sinh(beta) < 0
    hi = 2.0 * target / (kappa * R)
    fhi = f(hi)
    grow = 0
    while fhi <= 0.0:
        grow += 1
        if grow > _MAX_GROW:
            raise BracketFailure("sessile radius bracket failed to straddle tanh(beta)")
        lo = hi
        hi *= 2.0
        fhi = f(hi)
    u0, info = brentq(f, lo, hi, xtol=1e-13, full_output=True)
    return _result_at(params, u0, R, cfg, evals + info.iterations, (lo, hi))


def _height_crossing(params: CapillaryParams, u0: float, c: float,
                     cfg: IvpConfig) -> tuple[float, float]:
    """First radius where u reaches c, and v there.

    The crossing exists and lies below the lower-cap estimate
    sqrt((c-u0)*(c-u0+2*mu1)); if u0 is so close to c that the crossing falls
    inside the Taylor step it is solved on the series directly.
    """
    k = params.kappa
    h0 = cfg.first_step
    w_h0, _ = _series_state(k, u0, h0)
    if float(w_h0) >= c:
        rr = brentq(lambda r: float(_series_state(k, u0, r)[0]) - c, 0.0, h0, xtol=1e-15)
        return rr, float(_series_state(k, u0, rr)[1])
    mu1 = 2.0 / (k * u0)
    r_lim = math.sqrt((c - u0) * (c - u0 + 2.0 * mu1)) * (1 + 1e-9) + h0

    event = _terminal_event(lambda r, y: y[0] - c, 1)
    r, u, v, t_events = _integrate_nodes(params, u0, r_lim, cfg, events=[event])
    if t_events[0].size == 0:
        raise BracketFailure(
            f"height {c} not reached by r={r_lim} for u0={u0}; integrator fault")
    return float(r[-1]), float(v[-1])


def solve_sessile_by_plane(kappa: float, beta: float, c: float,
                           cfg: IvpConfig | None = None) -> ShootingResult:
    """Sessile drop supported on the plane x3 = c with contact angle beta.

    Finds u0 in (0, c) such that at the radius r(u0) where the profile reaches
    height c the slope is tanh(beta).  r(u0) decreases from infinity to 0 as
    u0 runs from 0 to c, but the crossing angle does NOT grow without bound:
    the height-angle window 2(cosh(psi)-1)/kappa < u^2 - u0^2 pins
    cosh(psi) < 1 + kappa*c^2/2 at any level-c crossing, so the problem is
    solvable only for contact angles below that ceiling (it is approached,
    not attained, as u0 -> 0).  Infeasible angles raise BracketFailure.

    For beta = 0 the drop degenerates to the flat plane u = c (a stationary
    solution with mean-curvature offset lam = -kappa*c).
    """
    if kappa <= 0:
        raise InvalidConfig("sessile solvers require kappa > 0")
    if c <= 0:
        raise InvalidConfig("plane height c must be positive")
    cfg = cfg or IvpConfig()
    if beta == 0.0:
        params = CapillaryParams(kappa, lam=-kappa * c)
        r = np.array([0.0, 1.0])
        profile = DropProfile(params, c, r, np.full(2, c), np.zeros(2))
        return ShootingResult(profile, ContactData(0.0, 0.0, c), c, 0, (c, c))
    if beta < 0:
        raise InvalidConfig("a sessile drop under the plane x3 = c needs beta > 0; "
                            "solve the mirrored problem instead")
    if math.cosh(beta) >= 1.0 + 0.5 * kappa * c**2:
        raise BracketFailure(
            f"no sessile drop on a plane at height {c} reaches contact angle "
            f"{beta}: requires cosh(beta) < 1 + kappa*c^2/2 "
            f"= {1.0 + 0.5 * kappa * c**2:.6g}")

    params = CapillaryParams(kappa)
    target = math.sinh(beta)
    evals = 0

    def g(u0):
        nonlocal evals
        evals += 1
        _, v = _height_crossing(params, u0, c, cfg)
        return v - target

    # g > 0 for u0 small (crossing angle near its ceiling), g < 0 for u0 -> c
    hi, fhi = c * (1.0 - 1e-12), -target
    lo = 0.5 * c
    flo = g(lo)
    grow = 0
    while flo <= 0.0:
        grow += 1
        if grow > _MAX_GROW:
            raise BracketFailure("sessile plane bracket failed to straddle tanh(beta)")
        hi, fhi = lo, flo
        prev = flo
        lo *= 0.5
        flo = g(lo)
        if flo <= 0.0 and abs(flo - prev) < 1e-9 * (1.0 + abs(flo)):
            # crossing angle has saturated below the target: beta sits in the
            # gap between the attainable supremum and the ceiling above
            raise BracketFailure(
                f"contact angle {beta} exceeds what drops under a plane at "
                f"height {c} can attain (slope saturates at sinh(psi) = "
                f"{flo + target:.6g})")
    u0, info = brentq(g, lo, hi, xtol=1e-13 * c, full_output=True)
    r_c, _ = _height_crossing(params, u0, c, cfg)
    return _result_at(params, u0, r_c, cfg, evals + info.iterations, (lo, hi))


# -- pendent ------------------------------------------------------------------

def _pendent_radius_root(kappa: float, beta: float, R: float, cfg: IvpConfig,
                         u0_hint: float | None = None):
    """Root u0 < 0 of v(R; u0) = sinh(beta), preferring the smallest |u0|."""
    params = CapillaryParams(kappa)
    target = math.sinh(beta)
    evals = 0

    def f(u0):
        nonlocal evals
        evals += 1
        return _v_at_radius(params, u0, R, cfg) - target

    bracket = None
    if u0_hint is not None and u0_hint < 0:
        lo, hi = u0_hint * 1.25, u0_hint / 1.25
        if f(lo) > 0.0 >= f(hi):
            bracket = (lo, hi)
    if bracket is None:
        # while the wetted disc sits inside the first sign change of u the
        # slope bound v(R) < kappa*u0*R/2 keeps this endpoint below target
        hi = 2.0 * target / (kappa * R)
        fhi = f(hi)
        grow = 0
        while fhi > 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("pendent radius bracket: no negative end found")
            hi *= 0.5
            fhi = f(hi)
        lo = 2.0 * hi
        flo = f(lo)
        grow = 0
        while flo <= 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("pendent radius bracket failed to straddle tanh(beta)")
            hi, fhi = lo, flo
            lo *= 2.0
            flo = f(lo)
        bracket = (lo, hi)
    u0, info = brentq(f, bracket[0], bracket[1], xtol=1e-13, full_output=True)
    return u0, evals + info.iterations, bracket, params


def solve_pendent_by_radius(kappa: float, beta: float, R: float,
                            cfg: IvpConfig | None = None) -> ShootingResult:
    """Pendent drop wetting a disc of radius R with contact angle beta.

    Finds u0 < 0 with u'(R; u0) = tanh(beta).  For R < 2/sqrt(-kappa) the
    wetted disc always sits inside the first zero of the profile, so the drop
    hangs entirely below its supporting plane.  The bracket is grown from
    small |u0| so the root with smallest |u0| is preferred.
    """
    if kappa >= 0:
        raise InvalidConfig("pendent solvers require kappa < 0")
    if R <= 0:
        raise InvalidConfig("R must be positive")
    cfg = cfg or IvpConfig()
    if beta == 0.0:
        return _flat_result(CapillaryParams(kappa), R, cfg)
    if beta < 0:
        return _mirror_result(solve_pendent_by_radius(kappa, -beta, R, cfg))
    u0, iters, bracket, params = _pendent_radius_root(kappa, beta, R, cfg)
    return _result_at(params, u0, R, cfg, iters, bracket)


def _first_zero_limit(kappa: float, u0: float) -> float:
    """A-priori upper bound on the first zero radius of a pendent profile.

    Comes from the arc-length ceiling C(a) evaluated at a = 2/sqrt(-kappa)
    with cosh(psi(a)) bounded through the initial slope sandwich.
    """
    a = 2.0 / math.sqrt(-kappa)
    cosh_cap = math.sqrt(1.0 - kappa * u0**2)
    return a * (cosh_cap * math.sinh(0.5) + math.cosh(0.5)) * (1 + 1e-9) + 1.0


def _first_zero_crossing(params: CapillaryParams, u0: float,
                         cfg: IvpConfig) -> tuple[float, float]:
    """First zero r_o of u and v(r_o), via a terminal crossing event."""
    r_lim = _first_zero_limit(params.kappa, u0)
    event = _terminal_event(lambda r, y: y[0], 1)
    r, u, v, t_events = _integrate_nodes(params, u0, r_lim, cfg, events=[event])
    if t_events[0].size == 0:
        raise BracketFailure(
            f"first zero not found below its ceiling r={r_lim}; integrator fault")
    return float(r[-1]), float(v[-1])


def solve_pendent_by_plane(kappa: float, beta: float,
                           cfg: IvpConfig | None = None) -> ShootingResult:
    """Pendent drop hanging below the plane x3 = 0 with contact angle beta.

    Finds u0 < 0 such that the hyperbolic inclination at the first zero r_o
    equals beta; the drop lies strictly below the plane on [0, r_o).
    """
    if kappa >= 0:
        raise InvalidConfig("pendent solvers require kappa < 0")
    cfg = cfg or IvpConfig()
    params = CapillaryParams(kappa)
    if beta == 0.0:
        profile = integrate_ivp(params, 0.0, 1.0, cfg)
        return ShootingResult(profile, ContactData(0.0, 0.0, 0.0), 0.0, 0, (0.0, 0.0))
    if beta < 0:
        return _mirror_result(solve_pendent_by_plane(kappa, -beta, cfg))

    target = math.sinh(beta)
    evals = 0

    def g(u0):
        nonlocal evals
        evals += 1
        _, v = _first_zero_crossing(params, u0, cfg)
        return v - target

    # g < 0 as u0 -> 0- and g > 0 as u0 -> -inf; walk until straddled
    cur, fcur = -1.0, g(-1.0)
    grow = 0
    if fcur > 0.0:
        while fcur > 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("pendent plane bracket: no small-|u0| end found")
            prev, fprev = cur, fcur
            cur *= 0.5
            fcur = g(cur)
        bracket = (prev, cur)
    else:
        while fcur <= 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("pendent plane bracket failed to straddle tanh(beta)")
            prev, fprev = cur, fcur
            cur *= 2.0
            fcur = g(cur)
        bracket = (cur, prev)
    u0, info = brentq(g, bracket[0], bracket[1], xtol=1e-13, full_output=True)
    r_o, _ = _first_zero_crossing(params, u0, cfg)
    return _result_at(params, u0, r_o, cfg, evals + info.iterations, bracket)


# -- volume-prescribed --------------------------------------------------------

def _sessile_contact_radius(params: CapillaryParams, u0: float,
                            beta: float, cfg: IvpConfig) -> float:
    """Radius where the contact slope reaches tanh(beta) (v crossing)."""
    target = math.sinh(beta)
    r_lim = 2.0 * target / (params.kappa * u0) * (1 + 1e-9) + cfg.first_step
    event = _terminal_event(lambda r, y: y[1] - target, 1)
    r, _, _, t_events = _integrate_nodes(params, u0, r_lim, cfg, events=[event])
    if t_events[0].size == 0:
        raise BracketFailure(
            f"contact slope not reached below r={r_lim}; integrator fault")
    return float(r[-1])


def solve_sessile_by_volume(kappa: float, beta: float, V: float,
                            cfg: IvpConfig | None = None) -> ShootingResult:
    """Sessile drop of prescribed physical volume V and contact angle beta.

    Outer root-find on u0 for the enclosed volume pi*R^2*u_R -
    2*pi*R*sinh(beta)/kappa, where R(u0) is the radius at which the contact
    slope is met.  The volume decreases from infinity to 0 as u0 grows, which
    is exploited only as a bracketing aid; non-monotone samples are logged,
    not fatal.
    """
    if kappa <= 0:
        raise InvalidConfig("sessile solvers require kappa > 0")
    if V <= 0:
        raise InvalidConfig("volume must be positive")
    if beta == 0.0:
        raise InvalidConfig("beta = 0 only bounds zero volume")
    if beta < 0:
        return _mirror_result(solve_sessile_by_volume(kappa, -beta, V, cfg))
    cfg = cfg or IvpConfig()
    params = CapillaryParams(kappa)
    sinh_b = math.sinh(beta)
    evals = 0

    def vol(u0):
        nonlocal evals
        evals += 1
        R = _sessile_contact_radius(params, u0, beta, cfg)
        _, u, _, _ = _integrate_nodes(params, u0, R, cfg)
        return math.pi * R**2 * float(u[-1]) - 2.0 * math.pi * R * sinh_b / kappa

    seen = []

    def h(u0):
        val = vol(u0) - V
        seen.append((u0, val))
        return val

    lo = hi = 1.0
    fmid = h(1.0)
    grow = 0
    if fmid > 0.0:
        lo, flo = 1.0, fmid
        hi = 4.0
        while h(hi) > 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("sessile volume bracket: volume stayed above target")
            hi *= 4.0
    else:
        hi, fhi = 1.0, fmid
        lo = 0.25
        while h(lo) <= 0.0:
            grow += 1
            if grow > _MAX_GROW:
                raise BracketFailure("sessile volume bracket: volume stayed below target")
            lo *= 0.25
    ordered = sorted(seen)
    vals = [v for _, v in ordered]
    if any(b > a for a, b in zip(vals, vals[1:])):
        log.warning("enclosed volume observed non-monotone in u0 over %s", ordered)
    u0, info = brentq(h, lo, hi, xtol=1e-13, full_output=True)
    R = _sessile_contact_radius(params, u0, beta, cfg)
    return _result_at(params, u0, R, cfg, evals + info.iterations, (lo, hi))


def solve_pendent_by_volume(kappa: float, beta: float, V: float,
                            cfg: IvpConfig | None = None) -> ShootingResult:
    """Pendent drop of prescribed volume V and contact angle beta.

    For V up to the threshold -2*pi*R_o*sinh(beta)/kappa with
    R_o = 2/sqrt(-kappa), the wetted radius R = -kappa*V/(2*pi*sinh(beta))
    sits below the first zero and the flux volume formula makes the match
    exact.  Larger volumes are reached by continuation: the contact radius r
    is grown past R_o and root-found so the drop volume (now including the
    pi*r^2*u(r) term once r passes the first zero) meets V.
    """
    if kappa >= 0:
        raise InvalidConfig("pendent solvers require kappa < 0")
    if V <= 0:
        raise InvalidConfig("volume must be positive")
    if beta == 0.0:
        raise InvalidConfig("beta = 0 only bounds zero volume")
    if beta < 0:
        return _mirror_result(solve_pendent_by_volume(kappa, -beta, V, cfg))
    cfg = cfg or IvpConfig()
    sinh_b = math.sinh(beta)
    R_o = 2.0 / math.sqrt(-kappa)
    v_threshold = -2.0 * math.pi * R_o * sinh_b / kappa

    if V <= v_threshold:
        R = -kappa * V / (2.0 * math.pi * sinh_b)
        return solve_pendent_by_radius(kappa, beta, R, cfg)

    evals = 0
    hint = None

    def drop_volume(r):
        nonlocal evals, hint
        u0, iters, _, params = _pendent_radius_root(kappa, beta, r, cfg, u0_hint=hint)
        hint = u0
        evals += iters
        flux = -2.0 * math.pi * r * sinh_b / kappa
        profile = integrate_ivp(params, u0, r, cfg)
        if height_zeros(profile).size == 0:
            return flux  # contact circle still below the first zero
        return math.pi * r**2 * profile.height(r) + flux

    lo, flo = R_o, v_threshold - V
    hi, fhi = R_o, flo
    grow = 0
    while fhi <= 0.0:
        grow += 1
        if grow > _MAX_GROW:
            raise BracketFailure("pendent volume bracket failed to reach target volume")
        lo, flo = hi, fhi
        hi *= 1.5
        fhi = drop_volume(hi) - V
    r_star, info = brentq(lambda r: drop_volume(r) - V, lo, hi,
                          xtol=1e-10 * max(1.0, hi), full_output=True)
    u0, iters, bracket, params = _pendent_radius_root(kappa, beta, r_star, cfg, u0_hint=hint)
    return _result_at(params, u0, r_star, cfg, evals + iters + info.iterations, bracket)
