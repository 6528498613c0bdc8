"""Independent numeric oracles shared by the test modules.

Everything here deliberately avoids the package's own evaluation paths:
moments come from high-precision mpmath arithmetic, convolutions from a
geometric quadrature over the sphere, special-function references from
mpmath.  Agreement between these and the package is the point of the tests.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy.special import roots_jacobi


def field_alpha_beta(delta: int, m: int) -> tuple[float, float]:
    return (delta * (m - 1) - 2) / 2.0, (delta - 2) / 2.0


def monomial_moment(alpha: float, beta: float, j: int) -> float:
    """integral of t^j (1-t)^alpha (1+t)^beta over (-1,1), 60-digit arithmetic."""
    with mpmath.workdps(60):
        total = mpmath.mpf(0)
        for i in range(j + 1):
            total += (
                mpmath.binomial(j, i)
                * mpmath.mpf(2) ** i
                * (-1) ** (j - i)
                * mpmath.beta(beta + 1 + i, alpha + 1)
            )
        return float(mpmath.mpf(2) ** (alpha + beta + 1) * total)


def quad_tail(alpha: float, beta: float, xi: float, f, order: int = 96) -> float:
    """integral of f(t) (1-t)^alpha (1+t)^beta over [xi, 1] by mapped Gauss-Jacobi."""
    u, w = roots_jacobi(order, alpha, 0.0)
    t = 0.5 * ((1.0 + xi) + (1.0 - xi) * u)
    scale = (0.5 * (1.0 - xi)) ** (alpha + 1.0)
    return scale * float(np.dot(w * (1.0 + t) ** beta, f(t)))


def conv_oracle(delta: int, m: int, g, h, t: float, ns: int = 48, nc: int = 48, nz: int = 48):
    """(g*h)(t) for zonal g, h on the projective space over a delta-dim field.

    Geometric route: the cosine s of a uniform point against a fixed node has
    the normalized Jacobi weight as density; conditionally on s, the cosine
    against a second fixed node at projective cosine t is
        2*(r^2 rho^2 + (1-r^2)(1-rho^2) c + 2 r rho sqrt((1-r^2)(1-rho^2) c) z) - 1
    with r^2=(1+s)/2, rho^2=(1+t)/2, c ~ Beta(delta/2, delta(m-2)/2) and z a
    projected-phase cosine with density prop. to (1-z^2)^((delta-3)/2).
    Exact (up to roundoff) for polynomial g, h once the rules are large enough.
    """
    alpha, beta = field_alpha_beta(delta, m)
    s, ws = roots_jacobi(ns, alpha, beta)
    ws = ws / ws.sum()
    rho2 = (1.0 + t) / 2.0

    if m == 2:
        c_nodes, wc = np.array([1.0]), np.array([1.0])
    else:
        u, wu = roots_jacobi(nc, delta * (m - 2) / 2.0 - 1.0, delta / 2.0 - 1.0)
        c_nodes, wc = (1.0 + u) / 2.0, wu / wu.sum()
    if delta == 1:
        z, wz = np.array([-1.0, 1.0]), np.array([0.5, 0.5])
    else:
        z, wz = roots_jacobi(nz, (delta - 3) / 2.0, (delta - 3) / 2.0)
        wz = wz / wz.sum()

    acc = 0.0
    for s_i, ws_i in zip(s, ws):
        gv = g(s_i)
        if gv == 0.0:
            continue
        r2 = (1.0 + s_i) / 2.0
        inner = 0.0
        for c_i, wc_i in zip(c_nodes, wc):
            base = r2 * rho2 + (1.0 - r2) * (1.0 - rho2) * c_i
            cross = 2.0 * math.sqrt(max(r2 * rho2 * (1.0 - r2) * (1.0 - rho2) * c_i, 0.0))
            uy = 2.0 * (base + cross * z) - 1.0
            inner += wc_i * float(np.dot(wz, h(uy)))
        acc += ws_i * gv * inner
    return acc


def real_m3_testfn_oracle(r: int, xi: float, t: float, jacobi_scalar) -> float:
    """(g*h)(t) for the real m=3 test function, by direct sphere integration.

    g(s) = P_r(s) - P_r(xi) above xi (0 below), h the indicator of [xi, 1].
    The azimuthal average of the indicator has an arcsine closed form, so
    only a 1-D adaptive integral over the cosine s remains.
    `jacobi_scalar(r, s)` must evaluate the degree-r polynomial for the
    (alpha, beta) = (0, -1/2) family.
    """
    from scipy.integrate import quad

    rho = math.sqrt((1.0 + t) / 2.0)
    rho_xi = math.sqrt((1.0 + xi) / 2.0)
    p_r_xi = jacobi_scalar(r, xi)
    tau_val = 2.0 * math.sqrt(2.0)  # integral of (1+t)^(-1/2) over (-1,1)

    def upper_measure(a: float) -> float:
        # arcsine-density mass of {w >= a} on [-1, 1]
        if a <= -1.0:
            return 1.0
        if a >= 1.0:
            return 0.0
        return 0.5 - math.asin(a) / math.pi

    def integrand(s: float) -> float:
        r_cos = math.sqrt((1.0 + s) / 2.0)
        c = math.sqrt(max((1.0 - r_cos**2) * (1.0 - rho**2), 0.0))
        if c == 0.0:
            mass = 1.0 if abs(r_cos * rho) >= rho_xi else 0.0
        else:
            hi = (rho_xi - r_cos * rho) / c
            lo = (-rho_xi - r_cos * rho) / c
            mass = upper_measure(hi) + (1.0 - upper_measure(lo))
        return (1.0 + s) ** (-0.5) * (jacobi_scalar(r, s) - p_r_xi) * mass

    val, err = quad(integrand, xi, 1.0, limit=400, epsabs=1e-12, epsrel=1e-12)
    if err > 1e-9:
        raise RuntimeError(f"oracle quadrature error too large: {err}")
    return val / tau_val


def mp_besselj(nu: float, x: float) -> float:
    with mpmath.workdps(40):
        return float(mpmath.besselj(nu, x))


def mp_bessel_first_zero(nu: float) -> float:
    with mpmath.workdps(40):
        return float(mpmath.besseljzero(nu, 1))


def mp_hyp2f1(a: float, b: float, c: float, z: float) -> float:
    with mpmath.workdps(40):
        return float(mpmath.hyp2f1(a, b, c, z))
