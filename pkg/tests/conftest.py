"""Shared fixtures and quadrature helpers for the test suite."""

import math

import numpy as np
import pytest

from pdmwire import make_params
from pdmwire.specialfn import gauss_legendre


@pytest.fixture
def natural():
    """Natural-unit canonical parameters (m0 = omega = hbar = 1, a = 0)."""
    return make_params()


def params_for(a=0.0, gamma=0.5, m0=1.0, omega=1.0, hbar=1.0):
    return make_params(m0=m0, omega=omega, hbar=hbar, a=a, gamma=gamma)


def ring_relative_spread(fld):
    """Max relative value spread over raster rings of equal lattice radius."""
    n = fld.nx
    dd = 2 * np.arange(n, dtype=np.int64) - (n - 1)
    ksq = (dd[:, None] ** 2 + dd[None, :] ** 2).ravel()
    vals = fld.values.ravel()
    order = np.argsort(ksq, kind="stable")
    worst = 0.0
    for key in np.split(order, np.flatnonzero(np.diff(ksq[order])) + 1):
        ring = vals[key]
        hi, lo = float(ring.max()), float(ring.min())
        if hi > 0.0:
            worst = max(worst, (hi - lo) / hi)
    return worst


def gl_integrate(f, lo, hi, npoints=512):
    """Gauss-Legendre integral of a smooth function on [lo, hi]."""
    rule = gauss_legendre(npoints)
    nodes = np.asarray(rule.nodes)
    weights = np.asarray(rule.weights)
    half = 0.5 * (hi - lo)
    x = lo + half * (nodes + 1.0)
    return half * float(np.sum(weights * f(x)))


def laguerre_weight_integral(f, d, t_max=120.0, npoints=512):
    """Integrate f(t)*exp(-t)*t**d over [0, t_max].

    The substitution t = u**k with d*k an integer removes the algebraic
    endpoint singularity of t**d at the origin, so plain Gauss-Legendre
    converges spectrally.
    """
    if float(d) == int(d):
        k = 1
    else:
        k = 2
        while (d * k) != int(d * k):
            k += 2
            if k > 64:
                raise ValueError(f"no short substitution exponent for d={d}")

    def g(u):
        t = u ** k
        return f(t) * np.exp(-t) * t ** d * k * u ** (k - 1)

    return gl_integrate(g, 0.0, t_max ** (1.0 / k), npoints)


def gegenbauer_weight_integral(f, lam, npoints=512):
    """Integrate f(x)*(1-x*x)**(lam-1/2) over [-1, 1].

    Substituting x = cos(theta) and then theta = v**2 (mirrored about
    theta = pi/2) yields an analytic integrand for half-integer lam.
    """

    def g(v, sign):
        theta = v * v
        x = sign * np.cos(theta)
        return f(x) * np.sin(theta) ** (2.0 * lam) * 2.0 * v

    v_hi = math.sqrt(0.5 * math.pi)
    left = gl_integrate(lambda v: g(v, 1.0), 0.0, v_hi, npoints)
    right = gl_integrate(lambda v: g(v, -1.0), 0.0, v_hi, npoints)
    return left + right
