"""Singular axisymmetric capillary profile ODE: integration and oracles.

The profile height u(r) of a rotationally symmetric spacelike drop obeys

    (r u' / sqrt(1 - u'**2))' = r * (kappa * u + lam),  u(0) = u0, u'(0) = 0,

which is integrated in the variables (u, v) with v = sinh(psi) =
u'/sqrt(1 - u'**2).  The system

    v' = kappa*u + lam - v/r,    u' = v / sqrt(1 + v**2)

is regular for r > 0 and keeps the slope spacelike (|u'| < 1) structurally,
since u' = v/sqrt(1 + v**2) for any finite v.  The r = 0 singularity is left
with a single Taylor step; an independent Picard iteration of the equivalent
integral equations is provided as a cross-check oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import cumulative_simpson, solve_ivp
from scipy.interpolate import BPoly
from scipy.optimize import brentq

from .errors import (
    FeatureTooClose,
    InvalidConfig,
    NoConvergence,
    NonFiniteState,
    OutOfDomain,
)

__all__ = [
    "CapillaryParams",
    "IvpConfig",
    "ProfileSample",
    "ContactData",
    "DropProfile",
    "series_start",
    "integrate_ivp",
    "picard_oracle",
    "residual",
    "rescale",
    "height_zeros",
    "slope_zeros",
    "bending_zeros",
]


@dataclass(frozen=True)
class CapillaryParams:
    """Physical parameters of the capillary equation.

    kappa couples mean curvature to height (sessile for kappa > 0, pendent
    for kappa < 0); lam is the constant mean-curvature offset coming from the
    volume constraint.  kappa = 0 is allowed only on the gravity-free
    closed-form path.
    """

    kappa: float
    lam: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and math.isfinite(self.lam)):
            raise InvalidConfig("kappa and lam must be finite")

    @property
    def eps(self) -> int:
        """Sign of kappa (+1 sessile, -1 pendent, 0 only for no gravity)."""
        if self.kappa > 0:
            return 1
        if self.kappa < 0:
            return -1
        return 0

    @property
    def shift(self) -> float:
        """Vertical translation lam/kappa that removes the lam term."""
        if self.kappa == 0.0:
            raise InvalidConfig("lam cannot be absorbed when kappa = 0")
        return self.lam / self.kappa


@dataclass(frozen=True)
class IvpConfig:
    """Integrator controls.

    h_init = None selects min(1e-3, rel_tol**0.25) for the Taylor step.
    max_step caps the accepted step so the piecewise-quintic dense output
    stays accurate enough for residual checks; r_max is the default horizon
    when the caller does not pass one.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    h_init: float | None = None
    r_max: float = 10.0
    max_step: float = 0.05
    max_samples: int = 500_000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise InvalidConfig("tolerances must be positive")
        if self.h_init is not None and self.h_init <= 0:
            raise InvalidConfig("h_init must be positive")
        if self.max_step <= 0 or self.r_max <= 0 or self.max_samples < 16:
            raise InvalidConfig("max_step, r_max and max_samples must be positive")
        if self.r_max <= self.first_step:
            raise InvalidConfig("r_max must exceed the Taylor step h_init")

    @property
    def first_step(self) -> float:
        return self.h_init if self.h_init is not None else min(1e-3, self.rel_tol**0.25)


@dataclass(frozen=True)
class ProfileSample:
    """One accepted integration node (r, u, v) with the derived slope."""

    r: float
    u: float
    v: float

    @property
    def du(self) -> float:
        return self.v / math.hypot(1.0, self.v)


@dataclass(frozen=True)
class ContactData:
    """Boundary triple: wetted radius, hyperbolic contact angle, height there.

    On a solved profile u'(R) = tanh(beta), equivalently v(R) = sinh(beta).
    """

    R: float
    beta: float
    u_R: float


def _taylor_coeffs(kappa: float, w0: float):
    """Series coefficients of w (even) and v (odd) about r = 0.

    w = w0 + w2 r^2 + w4 r^4 + w6 r^6, v = a1 r + a3 r^3 + a5 r^5, obtained by
    substituting into v' + v/r = kappa*w and w' = v/sqrt(1+v^2).
    """
    a1 = 0.5 * kappa * w0
    w2 = 0.5 * a1
    a3 = 0.25 * kappa * w2
    w4 = 0.25 * (a3 - 0.5 * a1**3)
    a5 = kappa * w4 / 6.0
    w6 = (a5 - 1.5 * a1**2 * a3 + 0.375 * a1**5) / 6.0
    return (w2, w4, w6), (a1, a3, a5)


def _series_state(kappa: float, w0: float, r):
    """Evaluate the Taylor start (w, v) at radius r (scalar or array)."""
    (w2, w4, w6), (a1, a3, a5) = _taylor_coeffs(kappa, w0)
    r2 = np.asarray(r) ** 2
    w = w0 + r2 * (w2 + r2 * (w4 + r2 * w6))
    v = np.asarray(r) * (a1 + r2 * (a3 + r2 * a5))
    return w, v


def series_start(u0: float, eps: int, r: float) -> tuple[float, float]:
    """Taylor start of the normalized problem (|kappa| = 1, lam = 0).

    Returns (u, v) at small r, with v = (eps*u0/2) r + (u0/16) r^3 + O(r^5)
    and u = u0 + (eps*u0/4) r^2 + O(r^4); local error O(r^7) in v.
    """
    if eps not in (1, -1):
        raise InvalidConfig("eps must be +1 or -1")
    w, v = _series_state(float(eps), u0, r)
    return float(w), float(v)


class DropProfile:
    """A computed profile u(r; u0) with dense output on [0, r_max].

    Stores the accepted nodes (r, u, v) and piecewise-quintic interpolants
    built from the node values together with first and second derivatives
    evaluated exactly from the ODE.  Immutable after construction; safe to
    share across threads.
    """

    def __init__(self, params: CapillaryParams, u0: float,
                 r: np.ndarray, u: np.ndarray, v: np.ndarray):
        r = np.asarray(r, dtype=float)
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        if r[0] != 0.0 or v[0] != 0.0:
            raise InvalidConfig("profile nodes must start at (r=0, v=0)")
        if np.any(np.diff(r) <= 0):
            raise InvalidConfig("profile radii must be strictly increasing")
        for a in (r, u, v):
            a.flags.writeable = False
        self.params = params
        self.u0 = float(u0)
        self.r = r
        self.u = u
        self.v = v

    # -- construction ------------------------------------------------------

    @cached_property
    def _interp(self) -> tuple[BPoly, BPoly]:
        k, lam = self.params.kappa, self.params.lam
        r, u, v = self.r, self.u, self.v
        s = np.sqrt(1.0 + v**2)
        du = v / s
        with np.errstate(divide="ignore", invalid="ignore"):
            vp = k * u + lam - v / r
            vpp = k * du - vp / r + v / r**2
        vp[0] = 0.5 * (k * self.u0 + lam)
        vpp[0] = 0.0
        ddu = vp / s**3
        pu = BPoly.from_derivatives(r, np.column_stack([u, du, ddu]))
        pv = BPoly.from_derivatives(r, np.column_stack([v, vp, vpp]))
        return pu, pv

    @cached_property
    def _pv_deriv(self) -> BPoly:
        return self._interp[1].derivative()

    # -- evaluation --------------------------------------------------------

    @property
    def r_max(self) -> float:
        return float(self.r[-1])

    def _check_domain(self, r):
        rr = np.asarray(r, dtype=float)
        if np.any(rr < -1e-12) or np.any(rr > self.r_max * (1 + 1e-12) + 1e-12):
            raise OutOfDomain(f"radius outside [0, {self.r_max}]")
        return np.clip(rr, 0.0, self.r_max)

    def _shape(self, r, out):
        return float(out) if np.ndim(r) == 0 else out

    def height(self, r):
        """u(r) from the dense output."""
        return self._shape(r, self._interp[0](self._check_domain(r)))

    def sinh_angle(self, r):
        """v(r) = sinh(psi(r))."""
        return self._shape(r, self._interp[1](self._check_domain(r)))

    def angle(self, r):
        """Hyperbolic inclination psi(r) = arsinh(v)."""
        return self._shape(r, np.arcsinh(self._interp[1](self._check_domain(r))))

    def slope(self, r):
        """u'(r) = v/sqrt(1+v^2); always inside (-1, 1)."""
        v = self._interp[1](self._check_domain(r))
        return self._shape(r, v / np.sqrt(1.0 + v**2))

    def sinh_angle_rate(self, r):
        """v'(r) evaluated from the ODE, v' = kappa*u + lam - v/r."""
        rr = self._check_domain(r)
        k, lam = self.params.kappa, self.params.lam
        u = self._interp[0](rr)
        v = self._interp[1](rr)
        with np.errstate(divide="ignore", invalid="ignore"):
            vp = np.where(rr > 1e-12, k * u + lam - v / np.where(rr > 1e-12, rr, 1.0),
                          0.5 * (k * self.u0 + lam))
        return self._shape(r, vp)

    def curvature_rate(self, r):
        """u''(r) via the ODE identity u'' = v' (1+v^2)^(-3/2)."""
        rr = self._check_domain(r)
        v = self._interp[1](rr)
        return self._shape(r, self.sinh_angle_rate(rr) / (1.0 + v**2) ** 1.5)

    @property
    def du(self) -> np.ndarray:
        """Slopes at the stored nodes."""
        return self.v / np.sqrt(1.0 + self.v**2)

    @property
    def samples(self) -> list[ProfileSample]:
        return [ProfileSample(float(a), float(b), float(c))
                for a, b, c in zip(self.r, self.u, self.v)]

    def contact(self, R: float) -> ContactData:
        """Boundary data (R, beta, u_R) read off the dense output."""
        return ContactData(R=float(R), beta=float(self.angle(R)), u_R=float(self.height(R)))

    def restrict(self, r_end: float) -> "DropProfile":
        """Profile truncated to [0, r_end] (r_end becomes the final node)."""
        r_end = float(r_end)
        if not 0.0 < r_end <= self.r_max * (1 + 1e-12):
            raise OutOfDomain(f"r_end outside (0, {self.r_max}]")
        keep = self.r < r_end * (1 - 1e-15)
        r = np.append(self.r[keep], r_end)
        u = np.append(self.u[keep], self.height(r_end))
        v = np.append(self.v[keep], self.sinh_angle(r_end))
        return DropProfile(self.params, self.u0, r, u, v)


def _finite_or_raise(arrs, context: str):
    for a in arrs:
        if not np.all(np.isfinite(a)):
            raise NonFiniteState(f"non-finite state while {context}")


def _integrate_nodes(params: CapillaryParams, u0: float, r_end: float,
                     cfg: IvpConfig, events: Sequence[Callable] = ()):
    """Integrate to r_end, returning node arrays in u and the event radii.

    Event callables follow the solve_ivp convention and see the state
    y = (w, v) with w = u + lam/kappa (identical to u when lam = 0).
    """
    k = params.kappa
    if k == 0.0:
        raise InvalidConfig("integrate_ivp requires kappa != 0; "
                            "use the gravity-free closed form instead")
    if not r_end > 0:
        raise InvalidConfig("r_max must be positive")
    shift = params.shift
    w0 = u0 + shift
    h0 = cfg.first_step

    if r_end <= h0:
        # horizon inside the Taylor step: pure series
        r = np.array([0.0, r_end])
        w, v = _series_state(k, w0, r)
        return r, w - shift, v, [np.array([]) for _ in events]

    ws, vs = _series_state(k, w0, h0)

    def rhs(r, y):
        w, v = y
        return (v / math.hypot(1.0, v), k * w - v / r)

    sol = solve_ivp(rhs, (h0, r_end), (float(ws), float(vs)), method="RK45",
                    rtol=cfg.rel_tol, atol=cfg.abs_tol, max_step=cfg.max_step,
                    events=list(events) or None)
    if sol.status < 0 or not np.all(np.isfinite(sol.y)):
        raise NonFiniteState(f"integration failed before r={r_end}: {sol.message}")
    if sol.t.size + 1 > cfg.max_samples:
        raise InvalidConfig(f"integration produced more than max_samples={cfg.max_samples} nodes")

    r = np.concatenate(([0.0], sol.t))
    w = np.concatenate(([w0], sol.y[0]))
    v = np.concatenate(([0.0], sol.y[1]))
    _finite_or_raise((w, v), f"integrating to r={r_end}")
    t_events = sol.t_events if events else []
    return r, w - shift, v, t_events


def integrate_ivp(params: CapillaryParams, u0: float, r_max: float | None = None,
                  cfg: IvpConfig | None = None) -> DropProfile:
    """Solve the capillary initial value problem from the axis outward.

    One Taylor step leaves the r = 0 singularity, then an adaptive embedded
    Runge-Kutta pair integrates the regular (u, v) system.  The returned
    profile carries dense output on [0, r_max].
    """
    cfg = cfg or IvpConfig()
    r_end = float(r_max) if r_max is not None else cfg.r_max
    r, u, v, _ = _integrate_nodes(params, u0, r_end, cfg)
    return DropProfile(params, u0, r, u, v)


def residual(profile: DropProfile, r: float) -> float:
    """|d/dr(r v) - r (kappa u + lam)| with v' taken from the dense output.

    Differentiates the interpolant (not the ODE, which would be circular),
    so this measures how well the dense output satisfies the equation.
    """
    if not 0.0 < r < profile.r_max:
        raise OutOfDomain(f"residual requires 0 < r < {profile.r_max}")
    k, lam = profile.params.kappa, profile.params.lam
    u = profile.height(r)
    v = profile.sinh_angle(r)
    vp = float(profile._pv_deriv(r))
    return abs(v + r * vp - r * (k * u + lam))


def rescale(params: CapillaryParams, profile: DropProfile) -> DropProfile:
    """Re-express a profile as the solution for a different kappa (same sign).

    Uses the scaling u -> sqrt(|k1|/|k2|) * u(r * sqrt(|k2|/|k1|)), under
    which v is invariant, plus the vertical shift absorbing lam.  With
    params = (eps, 0) this is the reduction to the normalized equation;
    applying the original parameters inverts it.
    """
    src = profile.params
    if src.kappa == 0.0 or params.kappa == 0.0:
        raise InvalidConfig("rescale requires nonzero kappa on both sides")
    if src.eps != params.eps:
        raise InvalidConfig("rescale cannot change the sign of kappa")
    scale = math.sqrt(abs(src.kappa) / abs(params.kappa))
    w = profile.u + src.shift
    r2 = profile.r * scale
    u2 = w * scale - params.shift
    return DropProfile(params, float(u2[0]), r2, u2, profile.v.copy())


# -- Picard oracle ----------------------------------------------------------

def picard_oracle(params: CapillaryParams, u0: float, r_max: float,
                  n_grid: int | None = None, n_iter: int = 60) -> DropProfile:
    """Independent reference solution by fixed-point iteration.

    Iterates the integral equations u(r) = u(a) + int_a^r v/sqrt(1+v^2) dt and
    r v(r) = a v(a) + kappa int_a^r t u dt on a uniform grid with cumulative
    Simpson quadrature, chaining windows short enough for the iteration to
    contract (windows are halved on non-convergence).  Shares no integration
    machinery with integrate_ivp; used as a cross-check oracle.
    """
    if params.kappa == 0.0:
        raise InvalidConfig("picard_oracle requires kappa != 0")
    if n_grid is None:
        n_grid = max(1000, int(math.ceil(1500 * r_max)))
    if n_grid < 1000:
        raise InvalidConfig("n_grid must be at least 1000")
    if n_iter < 20:
        raise InvalidConfig("n_iter must be at least 20")

    k = params.kappa
    shift = params.shift
    w_axis = u0 + shift
    r = np.linspace(0.0, float(r_max), n_grid + 1)
    h = r[1]
    w = np.full(n_grid + 1, w_axis)
    v = np.zeros(n_grid + 1)

    # contraction constant scales like |kappa| * window^2
    win = max(4, min(n_grid, int(round(min(1.0, 2.0 / math.sqrt(abs(k))) / h))))
    tol = 1e-13 * (1.0 + abs(w_axis))

    i0 = 0
    while i0 < n_grid:
        i1 = min(i0 + win, n_grid)
        t = r[i0:i1 + 1]
        w_loc = np.full(t.size, w[i0])
        v_loc = np.full(t.size, v[i0])
        anchor = r[i0] * v[i0]
        converged = False
        for _ in range(n_iter):
            du = v_loc / np.sqrt(1.0 + v_loc**2)
            w_new = w[i0] + cumulative_simpson(du, x=t, initial=0.0)
            flux = anchor + k * cumulative_simpson(t * w_new, x=t, initial=0.0)
            with np.errstate(divide="ignore", invalid="ignore"):
                v_new = flux / t
            if i0 == 0:
                v_new[0] = 0.0
            delta = max(np.max(np.abs(w_new - w_loc)), np.max(np.abs(v_new - v_loc)))
            w_loc, v_loc = w_new, v_new
            if delta < tol:
                converged = True
                break
        if not converged:
            if win <= 4:
                raise NoConvergence(
                    f"picard iteration failed to contract near r={r[i0]:.3g}; "
                    "reduce r_max or refine the grid")
            win //= 2
            continue
        w[i0:i1 + 1] = w_loc
        v[i0:i1 + 1] = v_loc
        i0 = i1

    _finite_or_raise((w, v), "running the picard oracle")
    return DropProfile(params, u0, r, w - shift, v)


# -- dense-output root location ---------------------------------------------

def _polish(g, gp, x, lo, hi):
    """One Newton step on top of a bracketed root, kept inside [lo, hi]."""
    d = gp(x)
    if d != 0.0 and math.isfinite(d):
        x1 = x - g(x) / d
        if lo < x1 < hi and abs(g(x1)) <= abs(g(x)):
            return x1
    return x


def _scan_roots(profile: DropProfile, g, gp, r_lo: float, r_hi: float) -> np.ndarray:
    """All transversal zeros of g on (r_lo, r_hi], refined to ~1e-12 in r."""
    nodes = profile.r[(profile.r >= r_lo) & (profile.r <= r_hi)]
    grid = np.unique(np.concatenate([[r_lo], nodes, [r_hi]]))
    # midpoints guard against a sign change inside a single step
    grid = np.sort(np.concatenate([grid, 0.5 * (grid[:-1] + grid[1:])]))
    vals = g(grid)
    roots = []
    sign = np.sign(vals)
    for i in np.nonzero(sign[:-1] * sign[1:] < 0)[0]:
        x = brentq(g, grid[i], grid[i + 1], xtol=1e-13)
        roots.append(_polish(g, gp, x, grid[i], grid[i + 1]))
    # exact zeros landed on by the grid (rare; excludes the r = 0 node)
    for i in np.nonzero(sign == 0)[0]:
        if grid[i] > r_lo and (not roots or abs(grid[i] - roots[-1]) > 1e-9):
            roots.append(grid[i])
    roots = sorted(roots)
    for a, b in zip(roots, roots[1:]):
        if b - a < 1e-9 * (1.0 + b):
            raise FeatureTooClose(f"roots at r={a} and r={b} are unresolved")
    return np.array(roots)


def height_zeros(profile: DropProfile, r_max: float | None = None) -> np.ndarray:
    """Radii where u = 0, in increasing order."""
    hi = profile.r_max if r_max is None else float(r_max)
    return _scan_roots(profile, lambda r: profile.height(r), lambda r: profile.slope(r),
                       0.0, hi)


def slope_zeros(profile: DropProfile, r_max: float | None = None) -> np.ndarray:
    """Radii r > 0 where u' = 0 (extrema), skipping the axis node."""
    hi = profile.r_max if r_max is None else float(r_max)
    return _scan_roots(profile, lambda r: profile.sinh_angle(r),
                       lambda r: profile.sinh_angle_rate(r), 1e-9, hi)


def bending_zeros(profile: DropProfile, r_max: float | None = None) -> np.ndarray:
    """Radii where u'' = 0 (inflections), via the sign of v' = ku + lam - v/r."""
    hi = profile.r_max if r_max is None else float(r_max)
    k, lam = profile.params.kappa, profile.params.lam

    def g(r):
        return profile.sinh_angle_rate(r)

    def gp(r):
        r = np.asarray(r, dtype=float)
        return (k * profile.slope(r) - profile.sinh_angle_rate(r) / r
                + profile.sinh_angle(r) / r**2)

    return _scan_roots(profile, g, gp, 1e-9, hi)
