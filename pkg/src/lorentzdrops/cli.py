"""Command-line interface: solve, analyze, verify, table, foliate, export.

Every command writes deterministic delimited output (CSV and/or JSON) and,
unless --no-figures is given, renders the matching PNG next to it.  Exit
codes: 0 success, 2 bad usage or parameters, 3 shooting bracket failure,
4 verification failures present (report still written).
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click
import numpy as np

from . import bounds as bounds_mod
from . import pendent as pendent_mod
from . import plots, serialize
from .errors import BracketFailure, CapillaryError
from .geometry import bounding_caps, no_gravity_profile, pendent_envelope_cap
from .ode import CapillaryParams, IvpConfig, integrate_ivp
from .report import BoundsReport
from .shooting import (
    solve_pendent_by_plane,
    solve_pendent_by_radius,
    solve_pendent_by_volume,
    solve_sessile_by_plane,
    solve_sessile_by_radius,
    solve_sessile_by_volume,
)

__all__ = ["main"]


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BracketFailure as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except CapillaryError as exc:
            raise click.UsageError(str(exc))
    return wrapper


def _out_dir(out: str) -> Path:
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write(path: Path, text: str):
    path.write_text(text, encoding="utf-8", newline="\n")
    click.echo(f"wrote {path}")


def _cfg(rel_tol, abs_tol) -> IvpConfig:
    kw = {}
    if rel_tol is not None:
        kw["rel_tol"] = rel_tol
    if abs_tol is not None:
        kw["abs_tol"] = abs_tol
    return IvpConfig(**kw)


_common = [
    click.option("--out", "-o", default=".", show_default=True,
                 help="Output directory."),
    click.option("--format", "fmt", type=click.Choice(["csv", "json", "both"]),
                 default="both", show_default=True),
    click.option("--figures/--no-figures", default=True, show_default=True,
                 help="Render PNG figures next to the delimited output."),
    click.option("--rel-tol", type=float, default=None,
                 help="Integrator relative tolerance override."),
    click.option("--abs-tol", type=float, default=None,
                 help="Integrator absolute tolerance override."),
]


def _with_common(fn):
    for opt in reversed(_common):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Spacelike capillary drops on a plane: solvers, analysis, verification."""


@main.command()
@click.option("--kappa", type=float, required=True,
              help="Capillarity constant (0 selects the gravity-free closed form).")
@click.option("--beta", type=float, default=None, help="Hyperbolic contact angle.")
@click.option("--radius", type=float, default=None, help="Prescribed wetted radius.")
@click.option("--plane", type=float, default=None,
              help="Prescribed support-plane height (0 for pendent drops).")
@click.option("--volume", type=float, default=None, help="Prescribed drop volume.")
@click.option("--u0", type=float, default=None,
              help="Integrate directly from this axis height (no shooting).")
@click.option("--r-max", type=float, default=None, help="Horizon for --u0 mode.")
@click.option("--lam", type=float, default=0.0, show_default=True,
              help="Mean-curvature offset (only for --u0 mode).")
@click.option("--plane-height", type=float, default=0.0, show_default=True,
              help="Support height c for the kappa = 0 closed form.")
@click.option("--stem", default="profile", show_default=True)
@_with_common
@_guard
def solve(kappa, beta, radius, plane, volume, u0, r_max, lam, plane_height,
          stem, out, fmt, figures, rel_tol, abs_tol):
    """Solve one drop: by wetted radius, support plane, volume, or direct u0."""
    out_path = _out_dir(out)
    cfg = _cfg(rel_tol, abs_tol)

    if kappa == 0.0:
        if beta is None or radius is None:
            raise click.UsageError("kappa = 0 requires --beta and --radius")
        sol = no_gravity_profile(beta, radius, plane_height)
        if fmt in ("csv", "both"):
            _write(out_path / f"{stem}.csv", serialize.no_gravity_csv(sol))
        if fmt in ("json", "both"):
            record = {"no_gravity": {"beta": sol.beta, "R": sol.R, "c": sol.c},
                      "contact": {"R": sol.R, "beta": sol.beta,
                                  "u_R": float(sol.height(sol.R))}}
            serialize.dump_json(record, out_path / f"{stem}.json")
            click.echo(f"wrote {out_path / (stem + '.json')}")
        if figures:
            plots.no_gravity_figure(sol, out_path / f"{stem}.png")
            click.echo(f"wrote {out_path / (stem + '.png')}")
        return

    if u0 is not None:
        if r_max is None:
            raise click.UsageError("--u0 mode requires --r-max")
        profile = integrate_ivp(CapillaryParams(kappa, lam), u0, r_max, cfg)
        contact = profile.contact(profile.r_max)
        result = None
    else:
        if beta is None:
            raise click.UsageError("shooting modes require --beta")
        chosen = [v is not None for v in (radius, plane, volume)]
        if sum(chosen) != 1:
            raise click.UsageError("choose exactly one of --radius, --plane, --volume")
        if kappa > 0:
            if radius is not None:
                result = solve_sessile_by_radius(kappa, beta, radius, cfg)
            elif plane is not None:
                result = solve_sessile_by_plane(kappa, beta, plane, cfg)
            else:
                result = solve_sessile_by_volume(kappa, beta, volume, cfg)
        else:
            if radius is not None:
                result = solve_pendent_by_radius(kappa, beta, radius, cfg)
            elif plane is not None:
                if plane != 0.0:
                    raise click.UsageError(
                        "pendent support planes pass through height 0; use --plane 0")
                result = solve_pendent_by_plane(kappa, beta, cfg)
            else:
                result = solve_pendent_by_volume(kappa, beta, volume, cfg)
        profile, contact = result.profile, result.contact
        click.echo(f"u0 = {serialize.fmt(result.u0)}  "
                   f"(iterations {result.iterations})")

    if fmt in ("csv", "both"):
        _write(out_path / f"{stem}.csv", serialize.profile_csv(profile))
    if fmt in ("json", "both"):
        record = serialize.profile_json_dict(profile, contact=contact, solver=result)
        serialize.dump_json(record, out_path / f"{stem}.json")
        click.echo(f"wrote {out_path / (stem + '.json')}")
    if figures:
        caps = {}
        if kappa > 0 and profile.u0 > 0 and contact.beta > 0:
            lower, upper = bounding_caps(profile, contact)
            caps = {"lower cap": lower, "upper cap": upper}
        elif kappa < 0 and profile.u0 < 0:
            caps = {"envelope cap": pendent_envelope_cap(profile.u0, kappa)}
        plots.profile_figure(profile, out_path / f"{stem}.png",
                             contact=contact, caps=caps)
        click.echo(f"wrote {out_path / (stem + '.png')}")


@main.command()
@click.option("--kappa", type=float, required=True)
@click.option("--u0", type=float, required=True)
@click.option("--r-max", type=float, default=None,
              help="Scan horizon (default 25/sqrt(-kappa)).")
@click.option("--stem", default="pendent", show_default=True)
@_with_common
@_guard
def analyze(kappa, u0, r_max, stem, out, fmt, figures, rel_tol, abs_tol):
    """Locate zeros, extrema and inflections of a pendent profile."""
    out_path = _out_dir(out)
    cfg = _cfg(rel_tol, abs_tol)
    horizon = r_max if r_max is not None else pendent_mod.default_scan_radius(kappa)
    profile = integrate_ivp(CapillaryParams(kappa), u0, horizon, cfg)
    features = pendent_mod.analyze(profile)
    click.echo(f"{features.zeros.size} zeros, {len(features.extrema)} extrema, "
               f"{features.inflections.size} inflections on [0, {horizon:g}]")
    if fmt in ("csv", "both"):
        _write(out_path / f"{stem}.csv", serialize.profile_csv(profile))
        _write(out_path / f"{stem}_features.csv", serialize.features_csv(features))
    if fmt in ("json", "both"):
        record = serialize.profile_json_dict(profile, features=features)
        serialize.dump_json(record, out_path / f"{stem}.json")
        click.echo(f"wrote {out_path / (stem + '.json')}")
    if figures:
        plots.features_figure(profile, features, out_path / f"{stem}.png")
        click.echo(f"wrote {out_path / (stem + '.png')}")


@main.command()
@click.option("--kappa", type=float, required=True)
@click.option("--u0", type=float, required=True)
@click.option("--radius", type=float, default=3.0, show_default=True,
              help="Contact radius for the sessile estimate battery.")
@click.option("--r-max", type=float, default=None,
              help="Scan horizon for the pendent battery.")
@click.option("--stem", default="report", show_default=True)
@_with_common
@_guard
def verify(kappa, u0, radius, r_max, stem, out, fmt, figures, rel_tol, abs_tol):
    """Run the estimate battery on one profile and write the margin report."""
    out_path = _out_dir(out)
    cfg = _cfg(rel_tol, abs_tol)
    rep = BoundsReport(meta={"kappa": kappa, "u0": u0})
    if kappa > 0 and u0 > 0:
        profile = integrate_ivp(CapillaryParams(kappa), u0, radius, cfg)
        contact = profile.contact(radius)
        rep.extend(bounds_mod.check_sessile_core(profile, contact))
        rep.extend(bounds_mod.check_laplace_bounds(profile, contact))
        rep.extend(bounds_mod.check_volume_bounds(profile, contact))
        rep.extend(bounds_mod.check_psi_estimates(profile))
        rep.extend(bounds_mod.check_flux_identity(profile))
        rep.extend(bounds_mod.check_curvature_identity(profile))
    elif kappa < 0 and u0 < 0:
        horizon = r_max if r_max is not None else pendent_mod.default_scan_radius(kappa)
        profile = integrate_ivp(CapillaryParams(kappa), u0, horizon, cfg)
        features = pendent_mod.analyze(profile)
        rep.extend(pendent_mod.extrema_decay_check(features))
        rep.extend(pendent_mod.ratio_bounds_check(profile, features))
        rep.extend(pendent_mod.max_drop_bounds(profile, features))
        rep.extend(bounds_mod.check_flux_identity(profile))
        rep.extend(bounds_mod.check_curvature_identity(profile))
    else:
        raise click.UsageError("verify needs kappa and u0 of the same sign "
                               "(sessile: both > 0, pendent: both < 0)")
    _write(out_path / f"{stem}.txt", rep.to_text())
    if fmt in ("json", "both"):
        serialize.dump_json(serialize.report_json_dict(rep),
                            out_path / f"{stem}.json")
        click.echo(f"wrote {out_path / (stem + '.json')}")
    if figures:
        plots.margins_figure(rep, out_path / f"{stem}.png")
        click.echo(f"wrote {out_path / (stem + '.png')}")
    n_fail = len(rep.failures)
    click.echo(f"{len(rep)} checks, {n_fail} failures")
    if n_fail:
        sys.exit(4)


@main.command()
@click.option("--which", type=click.Choice(["1", "2"]), required=True,
              help="1: height/volume estimates at R; 2: profile brackets at r.")
@click.option("--radius", type=float, default=None,
              help="Contact radius (default 3 for table 1, 4 for table 2).")
@click.option("--check", is_flag=True,
              help="Exit 4 if any cell drifts beyond tolerance from reference.")
@click.option("--tol", type=float, default=bounds_mod.TABLE_TOLERANCE,
              show_default=True, help="Relative tolerance for --check.")
@_with_common
@_guard
def table(which, radius, check, tol, out, fmt, figures, rel_tol, abs_tol):
    """Emit a reference diagnostic table over the kappa x u0 grid."""
    out_path = _out_dir(out)
    cfg = _cfg(rel_tol, abs_tol)
    if which == "1":
        tab = bounds_mod.height_volume_table(radius if radius is not None else 3.0, cfg)
    else:
        tab = bounds_mod.bracket_table(radius if radius is not None else 4.0, cfg)
    stem = f"table{which}"
    if fmt in ("csv", "both"):
        _write(out_path / f"{stem}.csv", serialize.table_csv(tab))
    _write(out_path / f"{stem}.txt", serialize.table_text(tab, tol))
    if figures:
        plots.table_figure(tab, out_path / f"{stem}.png")
        click.echo(f"wrote {out_path / (stem + '.png')}")
    click.echo(f"max relative deviation from reference: {tab.max_rel_error:.3e}")
    if check and not tab.all_within(tol):
        click.echo("reference mismatch beyond tolerance", err=True)
        sys.exit(4)


@main.command()
@click.option("--kappa", type=float, required=True)
@click.option("--u0-min", type=float, required=True)
@click.option("--u0-max", type=float, required=True)
@click.option("--count", type=int, default=9, show_default=True)
@click.option("--r-max", type=float, default=5.0, show_default=True)
@click.option("--points", type=int, default=201, show_default=True,
              help="Radial samples per leaf.")
@click.option("--stem", default="foliation", show_default=True)
@_with_common
@_guard
def foliate(kappa, u0_min, u0_max, count, r_max, points, stem, out, fmt,
            figures, rel_tol, abs_tol):
    """Emit a family of profiles u(r; u0) over a grid of axis heights."""
    if count < 2 or u0_max <= u0_min:
        raise click.UsageError("need u0_min < u0_max and count >= 2")
    out_path = _out_dir(out)
    cfg = _cfg(rel_tol, abs_tol)
    params = CapillaryParams(kappa)
    rs = np.linspace(0.0, r_max, points)
    leaves = []
    lines = ["u0,r,u,du,v"]
    for u0 in np.linspace(u0_min, u0_max, count):
        profile = integrate_ivp(params, float(u0), r_max, cfg)
        leaves.append((float(u0), profile))
        us, dus, vs = profile.height(rs), profile.slope(rs), profile.sinh_angle(rs)
        f = serialize.fmt
        lines += [f"{f(u0)},{f(r)},{f(u)},{f(du)},{f(v)}"
                  for r, u, du, v in zip(rs, us, dus, vs)]
    if fmt in ("csv", "both"):
        _write(out_path / f"{stem}.csv", "\n".join(lines) + "\n")
    if figures:
        plots.family_figure(leaves, out_path / f"{stem}.png")
        click.echo(f"wrote {out_path / (stem + '.png')}")


@main.command()
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Profile JSON written by solve/analyze.")
@click.option("--to", "target", type=click.Choice(["csv", "json"]), required=True)
@click.option("--out-file", type=click.Path(dir_okay=False), required=True)
@_guard
def export(input_path, target, out_file):
    """Re-serialize a stored profile record (JSON -> CSV or canonical JSON)."""
    profile, record = serialize.read_profile_json(Path(input_path))
    out = Path(out_file)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    if target == "csv":
        _write(out, serialize.profile_csv(profile))
    else:
        serialize.dump_json(record, out)
        click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
