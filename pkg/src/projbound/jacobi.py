"""Jacobi polynomials for the weight (1-t)^alpha (1+t)^beta on (-1, 1).

Everything downstream (test functions, closed-form bounds, the design
verifier) is built on this family, normalized so that P_k(1) = C(alpha+k, k).
Gauss-Jacobi quadrature doubles as the independent oracle for all the
weight integrals, so it is kept deliberately separate from the recurrence
evaluation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, roots_jacobi


class NumericalError(RuntimeError):
    """An iterative numeric routine failed to converge."""


@dataclass(frozen=True)
class JacobiParams:
    """Weight exponents alpha, beta; both must exceed -1 for integrability."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ValueError(
                f"Jacobi parameters must be > -1, got alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def lam(self) -> float:
        """lambda = alpha + beta + 1, the recurring exponent sum."""
        return self.alpha + self.beta + 1.0

    def raised(self) -> "JacobiParams":
        """Parameters (alpha+1, beta+1) of the derivative family."""
        return JacobiParams(self.alpha + 1.0, self.beta + 1.0)

    def weight(self, t):
        return (1.0 - t) ** self.alpha * (1.0 + t) ** self.beta


def jacobi_eval(params: JacobiParams, k: int, t):
    """Evaluate P_k at t (scalar or ndarray) by the forward three-term recurrence.

    Degree-k polynomial with P_k(1) = C(alpha+k, k).  Evaluation outside
    [-1, 1] is permitted (used for root bracketing).
    """
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    a, b = params.alpha, params.beta
    scalar = np.isscalar(t)
    t = np.asarray(t, dtype=float)
    pk = np.ones_like(t)
    if k >= 1:
        p_prev = pk
        pk = 0.5 * ((a + b + 2.0) * t + (a - b))
        for n in range(2, k + 1):
            c1 = 2.0 * n * (n + a + b) * (2.0 * n + a + b - 2.0)
            c2 = (2.0 * n + a + b - 1.0) * (a * a - b * b)
            c3 = (2.0 * n + a + b - 2.0) * (2.0 * n + a + b - 1.0) * (2.0 * n + a + b)
            c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + a + b)
            pk, p_prev = ((c2 + c3 * t) * pk - c4 * p_prev) / c1, pk
    return float(pk) if scalar else pk


def jacobi_eval_all(params: JacobiParams, k_max: int, t) -> np.ndarray:
    """All values P_0(t), ..., P_{k_max}(t) in one recurrence pass.

    Returns an array of shape (k_max+1,) + shape(t).
    """
    a, b = params.alpha, params.beta
    t = np.asarray(t, dtype=float)
    out = np.empty((k_max + 1,) + t.shape, dtype=float)
    out[0] = 1.0
    if k_max >= 1:
        out[1] = 0.5 * ((a + b + 2.0) * t + (a - b))
    for n in range(2, k_max + 1):
        c1 = 2.0 * n * (n + a + b) * (2.0 * n + a + b - 2.0)
        c2 = (2.0 * n + a + b - 1.0) * (a * a - b * b)
        c3 = (2.0 * n + a + b - 2.0) * (2.0 * n + a + b - 1.0) * (2.0 * n + a + b)
        c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + a + b)
        out[n] = ((c2 + c3 * t) * out[n - 1] - c4 * out[n - 2]) / c1
    return out


def jacobi_deriv(params: JacobiParams, k: int, t):
    """d/dt P_k(t), via the degree-shift identity to the (alpha+1, beta+1) family."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if k == 0:
        return 0.0 if np.isscalar(t) else np.zeros_like(np.asarray(t, dtype=float))
    return 0.5 * (k + params.lam) * jacobi_eval(params.raised(), k - 1, t)


def jacobi_value_at_one(params: JacobiParams, k: int) -> float:
    """P_k(1) = C(alpha+k, k), computed through log-Gamma."""
    a = params.alpha
    return math.exp(gammaln(a + k + 1.0) - gammaln(a + 1.0) - gammaln(k + 1.0))


def tau(params: JacobiParams) -> float:
    """Total weight mass: integral of (1-t)^alpha (1+t)^beta over (-1, 1)."""
    a, b = params.alpha, params.beta
    return math.exp(
        (a + b + 1.0) * math.log(2.0) + gammaln(a + 1.0) + gammaln(b + 1.0) - gammaln(a + b + 2.0)
    )


def jacobi_norm_nu(params: JacobiParams, k: int) -> float:
    """nu_k = 1 / ||P_k||^2 in the weighted L2 space."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if k == 0:
        return 1.0 / tau(params)
    a, b = params.alpha, params.beta
    log_sq_norm = (
        (a + b + 1.0) * math.log(2.0)
        - math.log(2.0 * k + a + b + 1.0)
        + gammaln(k + a + 1.0)
        + gammaln(k + b + 1.0)
        - gammaln(k + a + b + 1.0)
        - gammaln(k + 1.0)
    )
    return math.exp(-log_sq_norm)


def jacobi_norm_nu_all(params: JacobiParams, k_max: int) -> np.ndarray:
    """nu_0, ..., nu_{k_max} in one vectorized pass."""
    a, b = params.alpha, params.beta
    out = np.empty(k_max + 1)
    out[0] = 1.0 / tau(params)  # the generic formula is 0/0 at k=0 when lam=0
    if k_max >= 1:
        k = np.arange(1, k_max + 1, dtype=float)
        log_sq_norm = (
            (a + b + 1.0) * math.log(2.0)
            - np.log(2.0 * k + a + b + 1.0)
            + gammaln(k + a + 1.0)
            + gammaln(k + b + 1.0)
            - gammaln(k + a + b + 1.0)
            - gammaln(k + 1.0)
        )
        out[1:] = np.exp(-log_sq_norm)
    return out


def jacobi_value_at_one_all(params: JacobiParams, k_max: int) -> np.ndarray:
    """P_0(1), ..., P_{k_max}(1) in one vectorized pass."""
    a = params.alpha
    k = np.arange(k_max + 1, dtype=float)
    return np.exp(gammaln(a + k + 1.0) - gammaln(a + 1.0) - gammaln(k + 1.0))


def largest_root(params: JacobiParams, k: int) -> float:
    """Largest root of P_k, located in (-1, 1).

    All roots are simple and interior, so a sign-change scan on a Chebyshev
    angle grid brackets the largest one; a bisection-safeguarded Newton
    iteration then polishes it to near machine precision.
    """
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    n_grid = 8 * k
    t_hi = 1.0
    v_hi = jacobi_eval(params, k, 1.0)  # P_k(1) > 0 always
    lo = hi = None
    for i in range(1, n_grid + 1):
        t = math.cos(math.pi * i / n_grid)
        v = jacobi_eval(params, k, t)
        if v == 0.0:
            return t
        if (v_hi > 0.0) != (v > 0.0):
            lo, hi = t, t_hi
            break
        t_hi, v_hi = t, v
    if lo is None:
        raise NumericalError(f"largest_root: no sign change found for k={k}, {params}")

    # invariant: P_k(hi) > 0 > P_k(lo)
    x = 0.5 * (lo + hi)
    for _ in range(200):
        f = jacobi_eval(params, k, x)
        if f == 0.0:
            return x
        if f > 0.0:
            hi = x
        else:
            lo = x
        df = jacobi_deriv(params, k, x)
        x_new = x - f / df if df != 0.0 else math.nan
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 4e-16 * max(1.0, abs(x)) or (hi - lo) <= 4e-16:
            return x_new
        x = x_new
    raise NumericalError(
        f"largest_root: Newton/bisection did not converge for k={k}, {params}; "
        f"bracket=({lo}, {hi})"
    )


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Jacobi rule: exact for polynomials of degree <= 2*order - 1."""

    nodes: np.ndarray
    weights: np.ndarray
    params: JacobiParams
    order: int

    def integrate(self, f) -> float:
        """Integral of f(t) * (1-t)^alpha (1+t)^beta over (-1, 1)."""
        return float(np.dot(self.weights, f(self.nodes)))


@lru_cache(maxsize=256)
def _roots_jacobi_cached(order: int, alpha: float, beta: float):
    x, w = roots_jacobi(order, alpha, beta)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_jacobi(params: JacobiParams, order: int) -> QuadratureRule:
    """Gauss-Jacobi quadrature rule with `order` nodes for this weight."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    nodes, weights = _roots_jacobi_cached(order, params.alpha, params.beta)
    if not (np.all(np.diff(nodes) > 0) and np.all(weights > 0)):
        raise NumericalError(f"gauss_jacobi: invalid rule for order={order}, {params}")
    mass = tau(params)
    if abs(weights.sum() - mass) > 1e-12 * mass:
        raise NumericalError(
            f"gauss_jacobi: weight sum {weights.sum()!r} deviates from {mass!r} "
            f"(order={order}, {params})"
        )
    return QuadratureRule(nodes, weights, params, order)


def tail_rule(params: JacobiParams, xi: float, order: int = 64):
    """Nodes t and effective weights for integrals of f(t)*weight(t) over [xi, 1].

    The endpoint factor (1-t)^alpha is absorbed into a Gauss-Jacobi rule with
    parameters (alpha, 0) mapped affinely onto [xi, 1]; the remaining factor
    (1+t)^beta is smooth there and is folded into the weights.
    """
    if not (-1.0 < xi < 1.0):
        raise ValueError(f"xi must lie in (-1, 1), got {xi}")
    u, w = _roots_jacobi_cached(order, params.alpha, 0.0)
    t = 0.5 * ((1.0 + xi) + (1.0 - xi) * u)
    scale = (0.5 * (1.0 - xi)) ** (params.alpha + 1.0)
    return t, scale * w * (1.0 + t) ** params.beta


def incomplete_weight_integral(params: JacobiParams, xi: float, order: int = 64) -> float:
    """Integral of (1-t)^alpha (1+t)^beta over [xi, 1], xi in (-1, 1)."""
    _, w = tail_rule(params, xi, order)
    return float(w.sum())
