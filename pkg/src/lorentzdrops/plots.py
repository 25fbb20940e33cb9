"""Figure rendering for the CLI report paths (PNG, via the Agg backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bounds import Table
from .geometry import HyperbolicCap, NoGravityProfile
from .ode import DropProfile
from .pendent import PendentFeatures
from .report import BoundsReport

__all__ = [
    "profile_figure",
    "no_gravity_figure",
    "features_figure",
    "family_figure",
    "margins_figure",
    "table_figure",
]

_DPI = 150


def _save(fig, path: Path):
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def profile_figure(profile: DropProfile, path: Path, contact=None,
                   caps: dict[str, HyperbolicCap] | None = None):
    """Profile curve with optional comparison caps and contact marker."""
    fig, ax = plt.subplots(figsize=(6, 4))
    rs = np.linspace(0.0, profile.r_max, 400)
    ax.plot(rs, profile.height(rs), "k-", lw=1.5, label="u(r)")
    for label, cap in (caps or {}).items():
        ax.plot(rs, cap.height(rs), "--", lw=1.0, label=label)
    if contact is not None:
        ax.plot([contact.R], [contact.u_R], "ro", ms=5)
        ax.axhline(contact.u_R, color="0.6", lw=0.7)
    ax.axhline(0.0, color="0.85", lw=0.6)
    ax.set_xlabel("r")
    ax.set_ylabel("height")
    ax.set_title(f"kappa={profile.params.kappa:g}, u0={profile.u0:g}")
    ax.legend(loc="best", fontsize=8)
    _save(fig, path)


def no_gravity_figure(sol: NoGravityProfile, path: Path):
    fig, ax = plt.subplots(figsize=(6, 4))
    rs = np.linspace(0.0, sol.R, 400)
    ax.plot(rs, np.broadcast_to(sol.height(rs), rs.shape), "k-", lw=1.5)
    ax.axhline(sol.c, color="0.6", lw=0.7)
    ax.set_xlabel("r")
    ax.set_ylabel("height")
    ax.set_title(f"no gravity: beta={sol.beta:g}, R={sol.R:g}")
    _save(fig, path)


def features_figure(profile: DropProfile, features: PendentFeatures, path: Path):
    """Oscillating pendent profile with zeros, extrema and inflections marked."""
    fig, ax = plt.subplots(figsize=(7, 4))
    rs = np.linspace(0.0, profile.r_max, 800)
    ax.plot(rs, profile.height(rs), "k-", lw=1.2, label="u(r)")
    ax.axhline(0.0, color="0.8", lw=0.7)
    if features.zeros.size:
        ax.plot(features.zeros, np.zeros_like(features.zeros), "bo", ms=4, label="zeros")
    ext = features.extrema
    if ext:
        ax.plot([r for r, _, _ in ext], [u for _, u, _ in ext], "rs", ms=4,
                label="extrema")
    if features.inflections.size:
        ax.plot(features.inflections, profile.height(features.inflections), "g^",
                ms=4, label="inflections")
    if features.max_drop is not None:
        r_M, u_M, _ = features.max_drop
        sel = rs <= r_M
        ax.fill_between(rs[sel], profile.height(rs[sel]), u_M, alpha=0.15,
                        color="tab:blue", label="maximum drop")
    ax.set_xlabel("r")
    ax.set_ylabel("height")
    ax.set_title(f"pendent features: kappa={profile.params.kappa:g}, "
                 f"u0={profile.u0:g}")
    ax.legend(loc="best", fontsize=8)
    _save(fig, path)


def family_figure(profiles: list[tuple[float, DropProfile]], path: Path):
    """Foliation picture: one curve per axis height."""
    fig, ax = plt.subplots(figsize=(6, 5))
    for u0, profile in profiles:
        rs = np.linspace(0.0, profile.r_max, 300)
        ax.plot(rs, profile.height(rs), lw=1.0)
    ax.set_xlabel("r")
    ax.set_ylabel("height")
    ax.set_title(f"profile family ({len(profiles)} leaves)")
    _save(fig, path)


def margins_figure(report: BoundsReport, path: Path):
    """Signed margins of every checked relation, log-compressed."""
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.22 * len(report.entries))))
    names = [e.name for e in report.entries]
    margins = np.array([e.margin for e in report.entries])
    comp = np.sign(margins) * np.log10(1.0 + np.abs(margins) * 1e12)
    colors = ["tab:green" if e.passed else ("tab:orange" if e.low_confidence
                                            else "tab:red")
              for e in report.entries]
    y = np.arange(len(names))
    ax.barh(y, comp, color=colors, height=0.7)
    ax.set_yticks(y, names, fontsize=7)
    ax.invert_yaxis()
    ax.axvline(0.0, color="k", lw=0.8)
    ax.set_xlabel("sign(margin) * log10(1 + |margin|/1e-12)")
    _save(fig, path)


def table_figure(table: Table, path: Path):
    """Computed columns against their bounds, one marker set per kappa."""
    value_cols = table.columns[2:]
    fig, axes = plt.subplots(1, len(value_cols), figsize=(3 * len(value_cols), 3.2),
                             sharex=True)
    axes = np.atleast_1d(axes)
    kappas = sorted({row.kappa for row in table.rows})
    for j, col in enumerate(value_cols):
        ax = axes[j]
        for k in kappas:
            rows = [r for r in table.rows if r.kappa == k]
            ax.plot([r.u0 for r in rows], [r.values[j] for r in rows],
                    "o-", ms=3, lw=0.8, label=f"kappa={k:g}")
            ax.plot([r.u0 for r in rows], [r.reference[j] for r in rows],
                    "kx", ms=4, mew=0.8)
        ax.set_title(col, fontsize=9)
        ax.set_xlabel("u0", fontsize=8)
        ax.tick_params(labelsize=7)
    axes[0].legend(fontsize=6)
    _save(fig, path)
