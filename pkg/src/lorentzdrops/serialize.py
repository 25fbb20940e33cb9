"""CSV/JSON serialization of profiles, feature sets, reports and tables.

Numbers are written with 17 significant digits (full double round-trip) in
CSV and with Python's shortest round-trip representation in JSON, so
identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .bounds import Table
from .errors import InvalidConfig
from .geometry import NoGravityProfile, curvatures
from .ode import CapillaryParams, DropProfile
from .pendent import PendentFeatures
from .report import BoundsReport
from .shooting import ShootingResult

__all__ = [
    "fmt",
    "profile_csv",
    "profile_json_dict",
    "no_gravity_csv",
    "features_csv",
    "report_json_dict",
    "table_csv",
    "table_text",
    "profile_from_json_dict",
    "read_profile_json",
    "dump_json",
]

PROFILE_COLUMNS = ("r", "u", "du", "v", "k_m", "k_l")


def fmt(x: float) -> str:
    """17-significant-digit decimal form of a double."""
    return format(float(x), ".17g")


def _csv_lines(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def profile_csv(profile: DropProfile) -> str:
    """Sample table with slopes and principal curvatures at the nodes."""
    rows = []
    for r, u, v in zip(profile.r, profile.u, profile.v):
        pair = curvatures(profile, float(r))
        du = v / math.hypot(1.0, v)
        rows.append((r, u, du, v, pair.k_m, pair.k_l))
    return _csv_lines(PROFILE_COLUMNS, rows)


def no_gravity_csv(sol: NoGravityProfile, n: int = 201) -> str:
    """Closed-form profile sampled on a uniform grid over [0, R]."""
    rs = np.linspace(0.0, sol.R, n)
    us = np.broadcast_to(sol.height(rs), rs.shape)
    dus = np.broadcast_to(sol.slope(rs), rs.shape)
    vs = np.broadcast_to(sol.sinh_angle(rs), rs.shape)
    if sol.beta == 0.0:
        k_m = k_l = np.zeros_like(rs)
    else:
        k_l = np.empty_like(rs)
        k_l[0] = sol.cap.mean_curvature  # latitude limit at the axis
        k_l[1:] = vs[1:] / rs[1:]
        k_m = 2.0 * sol.cap.mean_curvature - k_l
    rows = zip(rs, us, dus, vs, k_m, k_l)
    return _csv_lines(PROFILE_COLUMNS, rows)


def profile_json_dict(profile: DropProfile, contact=None, features=None,
                      report: BoundsReport | None = None,
                      solver: ShootingResult | None = None) -> dict:
    """Full profile record; samples alone reconstruct the dense output."""
    out = {
        "params": {"kappa": profile.params.kappa, "lam": profile.params.lam},
        "u0": profile.u0,
        "samples": {
            "r": [float(x) for x in profile.r],
            "u": [float(x) for x in profile.u],
            "v": [float(x) for x in profile.v],
            "du": [float(x) for x in profile.du],
        },
    }
    if contact is not None:
        out["contact"] = {"R": contact.R, "beta": contact.beta, "u_R": contact.u_R}
    if solver is not None:
        out["solver"] = {"u0": solver.u0, "iterations": solver.iterations,
                         "bracket": list(solver.bracket)}
    if features is not None:
        out["features"] = features_dict(features)
    if report is not None:
        out["bounds"] = report.to_records()
    return out


def features_dict(features: PendentFeatures) -> dict:
    out = {
        "zeros": [float(x) for x in features.zeros],
        "maxima": [[float(r), float(u)] for r, u in features.maxima],
        "minima": [[float(r), float(u)] for r, u in features.minima],
        "inflections": [float(x) for x in features.inflections],
    }
    if features.zeros.size:
        out["r_o"] = float(features.r_o)
    if features.max_drop is not None:
        r_M, u_M, v_M = features.max_drop
        out["max_drop"] = {"r_M": r_M, "u_M": u_M, "V_M": v_M}
    return out


def features_csv(features: PendentFeatures) -> str:
    """One row per located feature: kind, r, u."""
    rows = [("zero", r, 0.0) for r in features.zeros]
    rows += [("max", r, u) for r, u in features.maxima]
    rows += [("min", r, u) for r, u in features.minima]
    rows += [("inflection", r, float("nan")) for r in features.inflections]
    rows.sort(key=lambda t: t[1])
    lines = ["kind,r,u"]
    lines += [f"{kind},{fmt(r)},{fmt(u)}" for kind, r, u in rows]
    return "\n".join(lines) + "\n"


def report_json_dict(report: BoundsReport) -> dict:
    return {"meta": {k: str(v) for k, v in report.meta.items()},
            "entries": report.to_records(),
            "failures": len(report.failures)}


def table_csv(table: Table) -> str:
    rows = [(row.kappa, row.u0, *row.values) for row in table.rows]
    return _csv_lines(table.columns, rows)


def table_text(table: Table, tol: float) -> str:
    """Aligned text table with the per-cell reference comparison."""
    widths = [6, 6] + [max(13, len(c) + 2) for c in table.columns[2:]]
    head = "".join(c.rjust(w) for c, w in zip(table.columns, widths))
    lines = [head]
    for row in table.rows:
        cells = [f"{row.kappa:g}".rjust(6), f"{row.u0:g}".rjust(6)]
        cells += [f"{v:.6g}".rjust(w) for v, w in zip(row.values, widths[2:])]
        lines.append("".join(cells))
    lines.append("")
    lines.append(f"max relative deviation from reference: {table.max_rel_error:.3e}")
    lines.append(f"all cells within {tol:g}: {'yes' if table.all_within(tol) else 'NO'}")
    for kappa, u0, col, err in table.mismatched_cells(tol):
        lines.append(f"  mismatch kappa={kappa:g} u0={u0:g} {col}: {err:.3e}")
    return "\n".join(lines) + "\n"


def dump_json(obj, path: Path):
    path.write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def profile_from_json_dict(data: dict) -> DropProfile:
    """Rebuild a profile (including dense output) from its JSON record."""
    try:
        params = CapillaryParams(float(data["params"]["kappa"]),
                                 float(data["params"]["lam"]))
        s = data["samples"]
        r = np.asarray(s["r"], dtype=float)
        u = np.asarray(s["u"], dtype=float)
        v = np.asarray(s["v"], dtype=float)
        u0 = float(data["u0"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidConfig(f"not a profile record: {exc}") from exc
    return DropProfile(params, u0, r, u, v)


def read_profile_json(path: Path) -> tuple[DropProfile, dict]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return profile_from_json_dict(data), data
