"""2-D probability-density rasters and 1-D traces with reproducible metadata.

The raster value at a lattice point is the plane density |Ψ(ρ,φ)|² with two
grid-motivated conventions, both recorded in the output metadata:

* window size: the default half-width is max(4/λ0, 1.05 × the radius
  containing all but 1e-4 of the state's radial probability mass), so the
  Riemann sum of the raster always captures the state regardless of how
  slowly the a < 0 tails decay;
* origin regularization: states whose density behaves like ρ^{2s} with
  2s+2 < 4 near the axis (and is not an even polynomial there) are sampled
  as equal-area disc averages (disc radius h/√π) on the lattice points
  with ρ < 24h — a pointwise lattice sum over such a density converges
  only at order h^{2s+2} and misses the integrable origin peak.  The disc
  average depends on ρ and the state only, so rotational invariance of
  canonical rasters is preserved exactly.

Lattice radii are computed as h·√(i²+j²) from integer offsets, so every
geometric ring shares one floating-point radius (and hence one value in
the canonical branch: ring spread is exactly zero).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import canonical as can
from . import noncanonical as nc
from .canonical import radial_eval, radial_profile
from .model import ModelParams
from .specialfn import gauss_legendre, laguerre

__all__ = ["DensityField", "build_density_field", "riemann_mass", "radial_trace",
           "angular_trace", "potential_trace"]

TWO_PI = 2.0 * math.pi

#: raster defaults
GRID_DEFAULT = 201
MASS_TAIL_DEFAULT = 1e-4
ORIGIN_CUT_CELLS = 24


@dataclass(frozen=True)
class DensityField:
    """A sampled |Ψ|² raster on a centered square (x, y) window."""

    nx: int
    ny: int
    x_range: tuple
    y_range: tuple
    values: np.ndarray          # shape (ny, nx), row-major
    metadata: dict = field(default_factory=dict)


def riemann_mass(fld: DensityField) -> float:
    """Σ values · ΔA — the plain Riemann estimate of the total probability."""
    hx = (fld.x_range[1] - fld.x_range[0]) / (fld.nx - 1)
    hy = (fld.y_range[1] - fld.y_range[0]) / (fld.ny - 1)
    return float(np.sum(fld.values) * hx * hy)


# ---------------------------------------------------------------------------
# radial mass quantile (in the Laguerre-weight variable t)

def _laguerre_cumulative(n: int, alpha_l: float, t_hi: float, rule) -> float:
    """∫₀^{t_hi} t^α e^-t L_n(t)² dt / Γ-normalization, by graded panels."""
    total = 0.0
    hi = t_hi
    for _ in range(80):
        lo = 0.5 * hi
        t = 0.5 * (hi - lo) * rule.nodes + 0.5 * (hi + lo)
        w = 0.5 * (hi - lo) * rule.weights
        lag = laguerre(n, alpha_l, t)
        total += float(np.sum(w * np.power(t, alpha_l) * np.exp(-t) * lag * lag))
        hi = lo
        if hi ** (alpha_l + 1.0) < 1e-18 * max(t_hi, 1.0):
            break
    return total


def _mass_quantile_t(n: int, alpha_l: float, frac: float) -> float:
    """Smallest T with normalized radial mass ∫₀^T ≥ frac (bisection)."""
    from .specialfn import log_gamma
    rule = gauss_legendre(32)
    norm = math.exp(log_gamma(n + 1.0) - log_gamma(n + alpha_l + 1.0))
    lo, hi = 1e-6, 10.0
    while norm * _laguerre_cumulative(n, alpha_l, hi, rule) < frac:
        hi *= 2.0
        if hi > 1e6:
            raise RuntimeError("mass quantile bracket failed to close")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if norm * _laguerre_cumulative(n, alpha_l, mid, rule) >= frac:
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# origin-region disc averages

def _analytic_at_origin(a: float, s: float) -> bool:
    """True when ρ^{2s} g((λ0 ρ)^{2(a+1)}) is an even polynomial series in
    (x, y) near the axis — the lattice sum then converges spectrally and no
    regularization is needed."""
    two_s = 2.0 * s
    two_ap1 = 2.0 * (a + 1.0)
    return (two_s >= 0.0
            and float(two_s).is_integer() and float(two_ap1).is_integer()
            and int(round(two_s)) % 2 == 0 and int(round(two_ap1)) % 2 == 0)


def _origin_disc_average(radial_sq, s: float, rc: float) -> float:
    """Disc average of the density over the axis-centered disc of radius rc.

    The angular factor integrates to 1/(2π)·2π = 1 over a full turn in both
    branches, so the average is ∫₀^{rc} P² ρ dρ / (π rc²).  The power
    substitution ρ = rc v^{1/(2s+2)} removes the ρ^{2s} singularity exactly;
    radial_sq is the squared radial factor P².
    """
    e2 = 2.0 * s + 2.0
    rule = gauss_legendre(32)
    v = 0.5 * (rule.nodes + 1.0)
    w = 0.5 * rule.weights
    rho = rc * np.power(v, 1.0 / e2)
    g = radial_sq(rho) / np.power(rho, 2.0 * s)
    integral = rc ** e2 / e2 * float(np.sum(w * g))       # ∫₀^{rc} P² ρ dρ
    return integral / (math.pi * rc * rc)


def _offcenter_disc_averages(dens2d, centers_x, centers_y, rc: float,
                             nr: int = 24, ntheta: int = 64) -> np.ndarray:
    """Disc averages of a plane density about off-axis centers.

    dens2d(x, y) must accept arrays; the quadrature is Gauss–Legendre in
    the squared radius (uniform in area) × periodic trapezoid in angle.
    """
    rule = gauss_legendre(nr)
    v = 0.5 * (rule.nodes + 1.0)
    wv = 0.5 * rule.weights
    r = rc * np.sqrt(v)
    th = (np.arange(ntheta) + 0.5) * (TWO_PI / ntheta)
    ux = np.outer(r, np.cos(th))                    # (nr, ntheta)
    uy = np.outer(r, np.sin(th))
    cx = np.asarray(centers_x, dtype=float)[:, None, None]
    cy = np.asarray(centers_y, dtype=float)[:, None, None]
    dens = dens2d(cx + ux[None, :, :], cy + uy[None, :, :])
    return np.einsum("krt,r->k", dens, wv) / ntheta


# ---------------------------------------------------------------------------
# raster construction

def _branch_radicand(p: ModelParams, m: int, parity: str) -> float:
    if parity == "none":
        return m * m + 0.25 * p.a * p.a
    return nc._radicand_nc(p, parity, m)


def build_density_field(p: ModelParams, n: int, m: int, parity: str = "none",
                        ngrid: int = GRID_DEFAULT, half_width: float = None,
                        mass_tail: float = MASS_TAIL_DEFAULT) -> DensityField:
    """Sample |Ψ(ρ,φ)|² on a centered (2L)×(2L) square of ngrid² points.

    parity "none" selects the canonical branch (signed m); "even"/"odd" the
    non-canonical branches (m ≥ 0, even requires γ > 1/2).  half_width
    overrides the automatic mass-quantile window; both the window and the
    origin-regularization convention land in the metadata.
    """
    if ngrid < 2:
        raise ValueError("ngrid must be at least 2")
    if parity == "even" and not p.gamma > 0.5:
        raise ValueError("even branch requires gamma > 1/2")
    radicand = _branch_radicand(p, m, parity)
    if parity != "none" and m < 0:
        raise ValueError("non-canonical branches use a non-negative index m")
    nu, s, alpha_l, log_norm = radial_profile(p, n, radicand)

    if half_width is None:
        t_q = _mass_quantile_t(n, alpha_l, 1.0 - mass_tail)
        zeta_q = ((p.a + 1.0) * t_q) ** (1.0 / (2.0 * (p.a + 1.0)))
        half_width = max(4.0 / p.lambda0, 1.05 * zeta_q / p.lambda0)
        window_rule = "mass_quantile"
    else:
        window_rule = "explicit"
    half_width = float(half_width)

    h = 2.0 * half_width / (ngrid - 1)
    # doubled integer offsets: exact for odd and even ngrid alike
    dd = 2 * np.arange(ngrid, dtype=np.int64) - (ngrid - 1)
    dx, dy = np.meshgrid(dd, dd)            # dy varies along rows (y), dx along columns
    ksq = dx * dx + dy * dy
    rho = 0.5 * h * np.sqrt(ksq.astype(float))

    def radial_sq(r):
        val = radial_eval(p, n, s, alpha_l, log_norm, r)
        return np.square(val)

    needs_avg = (2.0 * s + 2.0 < 4.0) and not _analytic_at_origin(p.a, s)
    rc = h / math.sqrt(math.pi)
    cut_ksq = 4 * ORIGIN_CUT_CELLS * ORIGIN_CUT_CELLS   # ρ < 24 h in doubled-offset units

    if parity == "none":
        ku, inverse = np.unique(ksq, return_inverse=True)
        rho_u = 0.5 * h * np.sqrt(ku.astype(float))
        with np.errstate(invalid="ignore"):
            vals_u = radial_sq(rho_u) / TWO_PI
        if needs_avg:
            sel = ku < cut_ksq
            centers = rho_u[sel]
            avg = np.empty(centers.size)
            on_axis = centers == 0.0
            if np.any(on_axis):
                avg[on_axis] = _origin_disc_average(radial_sq, s, rc)
            off = ~on_axis
            if np.any(off):
                avg[off] = _offcenter_disc_averages(
                    lambda x, y: radial_sq(np.hypot(x, y)) / TWO_PI,
                    centers[off], np.zeros(int(np.count_nonzero(off))), rc)
            vals_u[sel] = avg
        values = vals_u[inverse].reshape(ngrid, ngrid)
    else:
        phi = np.arctan2(dy.astype(float), dx.astype(float)) % TWO_PI
        ang = nc._angular(p, parity, m, phi, strict=False)
        with np.errstate(invalid="ignore"):
            dr = radial_sq(rho)
            values = dr * np.square(ang)
        if needs_avg:
            mask = ksq < cut_ksq
            cx = (0.5 * h) * dx[mask].astype(float)
            cy = (0.5 * h) * dy[mask].astype(float)

            def dens2d(x, y):
                ph = np.arctan2(y, x) % TWO_PI
                return radial_sq(np.hypot(x, y)) * np.square(nc._angular(p, parity, m, ph, strict=False))

            avg = np.empty(cx.size)
            origin = (cx == 0.0) & (cy == 0.0)
            if np.any(origin):
                avg[origin] = _origin_disc_average(radial_sq, s, rc)
            off = ~origin
            if np.any(off):
                avg[off] = _offcenter_disc_averages(dens2d, cx[off], cy[off], rc)
            values[mask] = avg

    metadata = {
        "branch": "canonical" if parity == "none" else "noncanonical",
        "a": p.a, "gamma": p.gamma, "n": n, "m": m, "parity": parity,
        "units": "natural" if (p.m0, p.omega, p.hbar) == (1.0, 1.0, 1.0) else "custom",
        "m0": p.m0, "omega": p.omega, "hbar": p.hbar, "lambda0": p.lambda0,
        "ngrid": ngrid, "half_width": half_width, "spacing": h,
        "window_rule": window_rule, "mass_tail": mass_tail,
        "origin_regularization": "disc_average" if needs_avg else "none",
        "origin_cut_cells": ORIGIN_CUT_CELLS if needs_avg else 0,
        "disc_radius": rc if needs_avg else 0.0,
        "rho_exponent": s, "alpha_L": alpha_l,
    }
    if parity != "none":
        metadata["m_eff"] = nc.m_eff(parity, p.gamma, m)
        metadata["degenerate_contact"] = bool(radicand == 0.0)
    return DensityField(nx=ngrid, ny=ngrid,
                        x_range=(-half_width, half_width),
                        y_range=(-half_width, half_width),
                        values=values, metadata=metadata)


# ---------------------------------------------------------------------------
# 1-D traces

def potential_trace(p: ModelParams, rho_max: float = None, npoints: int = 401):
    """(ρ, V(ρ)) on a uniform grid; default window 4/λ0."""
    from .model import potential_at
    if rho_max is None:
        rho_max = 4.0 / p.lambda0
    rho = np.linspace(0.0, rho_max, npoints)
    return rho, potential_at(p, rho)


def radial_trace(p: ModelParams, n: int, m: int, parity: str = "none",
                 rho_max: float = None, npoints: int = 801):
    """(ρ, P(ρ)) for the requested branch on a uniform grid."""
    radicand = _branch_radicand(p, m, parity)
    nu, s, alpha_l, log_norm = radial_profile(p, n, radicand)
    if rho_max is None:
        t_q = _mass_quantile_t(n, alpha_l, 1.0 - MASS_TAIL_DEFAULT)
        zeta_q = ((p.a + 1.0) * t_q) ** (1.0 / (2.0 * (p.a + 1.0)))
        rho_max = max(4.0 / p.lambda0, 1.05 * zeta_q / p.lambda0)
    rho = np.linspace(0.0, rho_max, npoints)
    return rho, radial_eval(p, n, s, alpha_l, log_norm, rho)


def angular_trace(p: ModelParams, m: int, parity: str = "none", npoints: int = 720):
    """(φ, Φ(φ)) on a cell-centered grid that avoids the singular angles.

    Canonical traces are complex (a pure phase); non-canonical are real.
    """
    phi = (np.arange(npoints) + 0.5) * (TWO_PI / npoints)
    if parity == "none":
        return phi, can.angular(m, phi)
    return phi, nc._angular(p, parity, m, phi, strict=True)
