"""Structural analysis of pendent profiles (kappa < 0, u0 < 0).

Pendent profiles oscillate about the axis with strictly shrinking extrema:
between consecutive extrema there is exactly one zero and exactly one
inflection, the inflection always falling between an extremum and the zero
that follows it.  This module locates those features, checks the decay and
arc-ratio estimates on them, and quantifies how large drops approach their
enveloping hyperbolic cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPendent, OrderingViolated, OutOfDomain
from .geometry import pendent_envelope_cap
from .ode import (
    CapillaryParams,
    DropProfile,
    IvpConfig,
    bending_zeros,
    height_zeros,
    integrate_ivp,
    slope_zeros,
)
from .report import BoundsReport

__all__ = [
    "PendentFeatures",
    "analyze",
    "extrema_decay_check",
    "ratio_bounds_check",
    "asymptotic_cap_deviation",
    "max_drop_bounds",
    "default_scan_radius",
]


def default_scan_radius(kappa: float) -> float:
    """Feature-scan horizon 25/sqrt(-kappa), enough for at least five zeros."""
    if kappa >= 0:
        raise NotPendent("scan radius is defined for kappa < 0")
    return 25.0 / math.sqrt(-kappa)


@dataclass(frozen=True)
class PendentFeatures:
    """Zeros, extrema and inflections of a pendent profile in r-order.

    minima includes the axis point (0, u0), which is a strict local minimum
    for u0 < 0.  max_drop is (r_M, u_M, V_M) at the first maximum, with
    V_M = pi*r_M^2*u_M the volume of the largest physically realizable drop.
    """

    zeros: np.ndarray
    maxima: tuple[tuple[float, float], ...]
    minima: tuple[tuple[float, float], ...]
    inflections: np.ndarray

    @property
    def r_o(self) -> float:
        """First zero radius."""
        if self.zeros.size == 0:
            raise OutOfDomain("profile has no zero in the scanned range")
        return float(self.zeros[0])

    @property
    def extrema(self) -> list[tuple[float, float, str]]:
        """All extrema as (r, u, kind) sorted by radius."""
        merged = [(r, u, "max") for r, u in self.maxima]
        merged += [(r, u, "min") for r, u in self.minima]
        return sorted(merged)

    @property
    def max_drop(self) -> tuple[float, float, float] | None:
        if not self.maxima:
            return None
        r_M, u_M = self.maxima[0]
        return r_M, u_M, math.pi * r_M**2 * u_M

    @property
    def is_empty(self) -> bool:
        return self.zeros.size == 0 and not self.maxima and not self.minima


def _validate_interleaving(feat: PendentFeatures):
    """Raise OrderingViolated unless zeros/extrema/inflections interleave.

    Expected pattern per extremum gap: extremum, one inflection, one zero,
    next extremum; the inflection precedes the zero.
    """
    ext = feat.extrema
    zeros = feat.zeros
    infl = feat.inflections
    for (r_a, u_a, kind_a), (r_b, u_b, kind_b) in zip(ext, ext[1:]):
        if kind_a == kind_b:
            raise OrderingViolated(f"extrema at r={r_a} and r={r_b} do not alternate")
        if abs(u_b) >= abs(u_a):
            raise OrderingViolated(f"extremum magnitudes not decreasing at r={r_b}")
        z = zeros[(zeros > r_a) & (zeros < r_b)]
        q = infl[(infl > r_a) & (infl < r_b)]
        if z.size != 1:
            raise OrderingViolated(f"{z.size} zeros between extrema at r={r_a}, {r_b}")
        if q.size != 1:
            raise OrderingViolated(f"{q.size} inflections between extrema at r={r_a}, {r_b}")
        if not r_a < q[0] < z[0]:
            raise OrderingViolated(
                f"inflection at r={q[0]} not between the extremum and the next zero")


def analyze(profile: DropProfile, r_max: float | None = None) -> PendentFeatures:
    """Locate zeros, extrema and inflections of a pendent profile on [0, r_max].

    Roots are found by sign scanning of the dense output (u for zeros, v for
    extrema, v' = kappa*u - v/r for inflections) with bracketed refinement
    and a Newton polish from the equation; the feature pattern is validated
    against the oscillation structure before returning.
    """
    k = profile.params.kappa
    if k >= 0 or profile.u0 > 0:
        raise NotPendent("analyze requires kappa < 0 and u0 <= 0")
    hi = profile.r_max if r_max is None else float(r_max)
    if hi > profile.r_max * (1 + 1e-12):
        raise OutOfDomain(f"scan radius {hi} exceeds profile range {profile.r_max}")
    if profile.u0 == 0.0:
        return PendentFeatures(np.array([]), (), (), np.array([]))

    zeros = height_zeros(profile, hi)
    ext_r = slope_zeros(profile, hi)
    infl = bending_zeros(profile, hi)
    maxima: list[tuple[float, float]] = []
    minima: list[tuple[float, float]] = [(0.0, profile.u0)]
    for r in ext_r:
        u = profile.height(r)
        if profile.curvature_rate(r) < 0:
            maxima.append((float(r), float(u)))
        else:
            minima.append((float(r), float(u)))
    feat = PendentFeatures(zeros=zeros, maxima=tuple(maxima),
                           minima=tuple(minima), inflections=infl)
    _validate_interleaving(feat)
    return feat


def extrema_decay_check(features: PendentFeatures) -> BoundsReport:
    """Decay of the oscillation: paired extremum estimates and monotone drop.

    For consecutive extrema separated by the zero at r_z the squared values
    satisfy u_next^2 < (r_z^2 + r_prev^2)/(2 r_z^2) * u_prev^2; extremum
    magnitudes also decrease monotonically and trend to zero.
    """
    rep = BoundsReport(meta={"check": "extrema_decay"})
    ext = features.extrema
    if len(ext) < 2:
        return rep
    zeros = features.zeros
    for i, ((r_a, u_a, _), (r_b, u_b, _)) in enumerate(zip(ext, ext[1:])):
        z = zeros[(zeros > r_a) & (zeros < r_b)]
        if z.size != 1:
            continue
        factor = (z[0]**2 + r_a**2) / (2.0 * z[0]**2)
        rep.add(f"extrema_decay_pair_{i}",
                "u_next^2 < (r_z^2 + r_prev^2)/(2 r_z^2) * u_prev^2",
                u_b**2, factor * u_a**2)
        rep.add(f"extrema_shrink_{i}", "|u_next| < |u_prev|", abs(u_b), abs(u_a))
    post = [abs(u) for _, u, _ in ext[1:]]
    if len(post) >= 3:
        rep.add("extrema_trend_to_zero", "|u_last| < 0.9 |u_first|",
                post[-1], 0.9 * post[0])
    return rep


def _interior_grid(a: float, b: float, n: int) -> np.ndarray:
    return a + (b - a) * np.arange(1, n + 1) / (n + 1.0)


def ratio_bounds_check(profile: DropProfile, features: PendentFeatures,
                       n_pts: int = 20) -> BoundsReport:
    """Arc-ratio sandwich on every monotone arc of the oscillation.

    On the initial arc the latitude ratio sinh(psi)/r lies strictly between
    kappa*u/2 and kappa*u0/2; on later arcs the same integration argument
    anchored at the extremum radius r_e gives, with the factor
    w = r/(|r^2 - r_e^2|), bounds by kappa*u/2 and kappa*u_e/2 (ordered by
    which endpoint the arc leaves).  Reported margins are the worst over
    n_pts interior sample points per arc.
    """
    rep = BoundsReport(meta={"check": "arc_ratios"})
    k = profile.params.kappa
    if features.is_empty:
        return rep

    def emit(tag, rs, wfun, low, high):
        lo_margin, hi_margin = np.inf, np.inf
        lo_pair = hi_pair = (0.0, 0.0)
        for r in rs:
            w = wfun(r) * profile.sinh_angle(r)
            lo_val, hi_val = low(r), high(r)
            if w - lo_val < lo_margin:
                lo_margin, lo_pair = w - lo_val, (lo_val, w)
            if hi_val - w < hi_margin:
                hi_margin, hi_pair = hi_val - w, (w, hi_val)
        rep.add(f"{tag}_lower", "lower < ratio", lo_pair[0], lo_pair[1])
        rep.add(f"{tag}_upper", "ratio < upper", hi_pair[0], hi_pair[1])

    # initial arc (0, r_o): kappa*u/2 < sinh(psi)/r < kappa*u0/2
    r_o = features.r_o
    rs = _interior_grid(0.0, r_o, n_pts)
    emit("arc0_latitude", rs, lambda r: 1.0 / r,
         lambda r: 0.5 * k * profile.height(r), lambda r: 0.5 * k * profile.u0)

    ext = features.extrema
    zeros = features.zeros
    for i, (r_e, u_e, kind) in enumerate(ext):
        if i == 0:
            continue  # axis arc already handled
        # extremum -> following zero
        z_after = zeros[zeros > r_e]
        if z_after.size:
            rs = _interior_grid(r_e, z_after[0], n_pts)
            wfun = lambda r, r_e=r_e: r / (r**2 - r_e**2)
            if kind == "min":
                emit(f"arc{i}_after_min", rs, wfun,
                     lambda r: 0.5 * k * profile.height(r), lambda r, u_e=u_e: 0.5 * k * u_e)
            else:
                emit(f"arc{i}_after_max", rs, wfun,
                     lambda r, u_e=u_e: 0.5 * k * u_e, lambda r: 0.5 * k * profile.height(r))
        # preceding zero -> extremum
        z_before = zeros[zeros < r_e]
        if z_before.size:
            rs = _interior_grid(z_before[-1], r_e, n_pts)
            wfun = lambda r, r_e=r_e: r / (r_e**2 - r**2)
            if kind == "min":
                emit(f"arc{i}_into_min", rs, wfun,
                     lambda r, u_e=u_e: -0.5 * k * u_e, lambda r: -0.5 * k * profile.height(r))
            else:
                emit(f"arc{i}_into_max", rs, wfun,
                     lambda r: -0.5 * k * profile.height(r), lambda r, u_e=u_e: -0.5 * k * u_e)
    return rep


def asymptotic_cap_deviation(u0: float, kappa: float, R: float,
                             cfg: IvpConfig | None = None,
                             n_pts: int = 400) -> tuple[float, float, float]:
    """Sup-norm deviations (d0, d1, d2) between the profile and its envelope cap.

    Measures sup over [0, R] of |y4 - u|, |y4' - u'| and |y4'' - u''|; all
    three shrink as |u0| grows, quantifying convergence of deep drops to the
    hyperbolic cap.
    """
    if kappa >= 0 or u0 >= 0:
        raise NotPendent("cap deviation requires kappa < 0 and u0 < 0")
    profile = integrate_ivp(CapillaryParams(kappa), u0, R, cfg)
    cap = pendent_envelope_cap(u0, kappa)
    rs = np.linspace(0.0, R, n_pts)
    d0 = float(np.max(np.abs(cap.height(rs) - profile.height(rs))))
    d1 = float(np.max(np.abs(cap.slope(rs) - profile.slope(rs))))
    d2 = float(np.max(np.abs(cap.curvature_rate(rs) - profile.curvature_rate(rs))))
    return d0, d1, d2


def _first_zero_ceiling(profile: DropProfile, a: float, kappa: float) -> float:
    """C(a) = a*(cosh(psi(a))*sinh(-2/(kappa a^2)) + cosh(-2/(kappa a^2)))."""
    arg = -2.0 / (kappa * a**2)
    psi_a = profile.angle(a)
    return a * (math.cosh(psi_a) * math.sinh(arg) + math.cosh(arg))


def max_drop_bounds(profile: DropProfile, features: PendentFeatures,
                    u0_grid: tuple[float, ...] | None = None,
                    cfg: IvpConfig | None = None) -> BoundsReport:
    """First-arch estimates: zero/maximum locations, volumes and envelope.

    Checks the first-zero radius window (envelope floor and arc-length
    ceiling), the first-maximum height bound through the crossing angle, the
    volume floors for the maximum drop and the below-axis volume, and the
    radius floors they imply.  When u0_grid is given, also integrates those
    axis heights and checks that the drop height q = u_M - u0 grows as u0
    decreases.
    """
    k, u0 = profile.params.kappa, profile.u0
    if k >= 0 or u0 >= 0:
        raise NotPendent("max_drop_bounds requires kappa < 0 and u0 < 0")
    rep = BoundsReport(meta={"check": "max_drop", "kappa": k, "u0": u0})
    r_o = features.r_o
    psi_o = profile.angle(r_o)

    floor = math.sqrt(u0**2 - 4.0 / k)
    rep.add("first_zero_floor", "sqrt(u0^2 - 4/kappa) < r_o", floor, r_o)
    rep.add("first_zero_floor_gap", "2/sqrt(-kappa) < sqrt(u0^2 - 4/kappa)",
            2.0 / math.sqrt(-k), floor)
    for a in (0.5, 1.0):
        if a < r_o:
            rep.add(f"first_zero_ceiling_a{a:g}", "r_o < C(a)",
                    r_o, _first_zero_ceiling(profile, a, k))
    a_opt = 2.0 / math.sqrt(-k)
    if a_opt < r_o:
        # the optimized constant ignores cosh(psi(a)) > 1, so it can only hold
        # for shallow drops: the envelope floor outgrows it as |u0| increases
        rep.add("first_zero_ceiling_opt", "r_o < 2*sqrt(e)/sqrt(-kappa)",
                r_o, 2.0 * math.sqrt(math.e) / math.sqrt(-k),
                low_confidence=True)

    crossing = (2.0 / -k) * (math.cosh(psi_o) - 1.0)
    rep.add("crossing_angle_bound", "(2/-kappa)(cosh(psi_o)-1) < u0^2/2",
            crossing, 0.5 * u0**2)

    if features.max_drop is not None:
        r_M, u_M, v_M = features.max_drop
        q = u_M - u0
        rep.add("first_max_bound", "u_M^2 < (2/-kappa)(cosh(psi_o)-1)",
                u_M**2, crossing)
        rep.add("max_volume_floor",
                "pi/(3 kappa u0) q^2 (6 + kappa u0 q) < V_M",
                math.pi / (3.0 * k * u0) * q**2 * (6.0 + k * u0 * q), v_M)
        v_o = -2.0 * math.pi * r_o * profile.sinh_angle(r_o) / k
        rep.add("axis_volume_floor",
                "pi u0/(3 kappa) (6 - kappa u0^2) < V_o",
                math.pi * u0 / (3.0 * k) * (6.0 - k * u0**2), v_o)
        rep.add("first_zero_radius_floor",
                "-u0 (6 - kappa u0^2) / (6 sinh(beta0)) < r_o",
                -u0 * (6.0 - k * u0**2) / (6.0 * math.sinh(psi_o)), r_o)
        rep.add("first_max_radius_floor",
                "sqrt(q^2 (6 + kappa u0 q) / (3 kappa u0 u_M)) < r_M",
                math.sqrt(q**2 * (6.0 + k * u0 * q) / (3.0 * k * u0 * u_M)), r_M)
        cap = pendent_envelope_cap(u0, k)
        sel = (profile.r > 0) & (profile.r <= r_M)
        gap = cap.height(profile.r[sel]) - profile.u[sel]
        idx = int(np.argmin(gap))
        rep.add("envelope_above", "u < y4 up to r_M",
                profile.u[sel][idx], float(cap.height(profile.r[sel][idx])))

    if u0_grid:
        heights = []
        for u0_i in sorted(u0_grid, reverse=True):  # toward -inf
            prof_i = integrate_ivp(CapillaryParams(k), u0_i,
                                   default_scan_radius(k), cfg)
            ext = slope_zeros(prof_i)
            heights.append(float(prof_i.height(ext[0])) - u0_i)
        worst = min(b - a for a, b in zip(heights, heights[1:]))
        rep.add("height_growth_monotone",
                "q = u_M - u0 increases as u0 decreases", 0.0, worst)
    return rep
