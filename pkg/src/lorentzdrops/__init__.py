"""Stationary spacelike capillary drops in Lorentz-Minkowski 3-space.

Solves the singular axisymmetric profile equation for drops resting on (or
hanging from) a spacelike plane, in every boundary formulation that admits a
solution: prescribed wetted radius, prescribed support plane, or prescribed
volume, for both sessile (kappa > 0) and pendent (kappa < 0) drops.  Computed
profiles are checked against the full catalogue of closed-form height, volume
and slope estimates they satisfy.
"""

from .bounds import (
    AuxiliaryQuantities,
    Table,
    TableRow,
    bracket_table,
    check_curvature_identity,
    check_flux_identity,
    check_foliation,
    check_kappa_monotonicity,
    check_laplace_bounds,
    check_lipschitz,
    check_psi_estimates,
    check_sessile_core,
    check_volume_bounds,
    height_volume_table,
)
from .errors import (
    BeyondMaxDrop,
    BracketFailure,
    CapillaryError,
    FeatureTooClose,
    InvalidConfig,
    NoConvergence,
    NonFiniteState,
    NotPendent,
    OrderingViolated,
    OutOfDomain,
    VolumeMismatch,
)
from .geometry import (
    CurvaturePair,
    HyperbolicCap,
    NoGravityProfile,
    bounding_caps,
    cap_volume_F,
    curvatures,
    no_gravity_profile,
    pendent_envelope_cap,
    pendent_volume,
    volumes,
)
from .ode import (
    CapillaryParams,
    ContactData,
    DropProfile,
    IvpConfig,
    ProfileSample,
    bending_zeros,
    height_zeros,
    integrate_ivp,
    picard_oracle,
    rescale,
    residual,
    series_start,
    slope_zeros,
)
from .pendent import (
    PendentFeatures,
    analyze,
    asymptotic_cap_deviation,
    default_scan_radius,
    extrema_decay_check,
    max_drop_bounds,
    ratio_bounds_check,
)
from .report import BoundsEntry, BoundsReport
from .shooting import (
    ShootingResult,
    solve_pendent_by_plane,
    solve_pendent_by_radius,
    solve_pendent_by_volume,
    solve_sessile_by_plane,
    solve_sessile_by_radius,
    solve_sessile_by_volume,
)

__version__ = "0.1.0"
