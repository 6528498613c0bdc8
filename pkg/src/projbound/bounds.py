"""Closed-form cardinality bounds and their comparisons.

Two lower bounds for the node count of an index-p projective cubature
formula (equivalently, for the target dimension of an isometric embedding of
l_2^m into l_p^n over the same field):

* the classical linear programming bound Lambda(m, q), q = p/2, an explicit
  binomial expression, exact in integer arithmetic;
* the Yudin-type bound obtained from the convolution test function, whose
  closed form involves the largest Jacobi root xi, eps = (1-xi)/2 and a
  terminating-or-not Gauss hypergeometric value.

The module also provides the large-p and large-m comparisons: the quotient
kappa of the two asymptotic constants, its exponential decay, and the
difference tables delta_C / delta_H with their oscillation report.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .fields import Field, field_params
from .jacobi import (
    JacobiParams,
    NumericalError,
    incomplete_weight_integral,
    largest_root,
    tau,
)
from .specials import bessel_first_zero, hypergeom_F, log_gamma

#: relative slack for the internal agreement checks between equivalent forms
_CONSISTENCY_RTOL = 1e-9


def ceil_snap(z: float, rel: float = 1e-9) -> int:
    """Smallest integer >= z, snapping to an integer within relative slack.

    The snap keeps values that are exact integers in exact arithmetic (the
    real rank-one case lands on integers) from being inflated by the last
    few ulps of floating-point noise.
    """
    nearest = round(z)
    if abs(z - nearest) <= rel * max(1.0, abs(z)):
        return int(nearest)
    return math.ceil(z)


def lp_bound(field: Field, m: int, q: int) -> int:
    """Classical LP bound Lambda(m, q) on nodes of an index-2q cubature formula.

    Exact integer arithmetic throughout.  The quaternionic case divides by
    2m-1; if that division were ever inexact the ceiling is returned and a
    warning emitted.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if field is Field.R:
        return math.comb(m + q - 1, m - 1)
    if field is Field.C:
        return math.comb(m + q // 2 - 1, m - 1) * math.comb(m + (q + 1) // 2 - 1, m - 1)
    value = Fraction(
        math.comb(2 * m + q // 2 - 2, 2 * m - 2) * math.comb(2 * m + (q + 1) // 2 - 1, 2 * m - 2),
        2 * m - 1,
    )
    if value.denominator != 1:
        warnings.warn(
            f"quaternionic LP bound at m={m}, q={q} is the non-integer rational {value}; "
            f"returning its ceiling",
            stacklevel=2,
        )
        return -(-value.numerator // value.denominator)
    return int(value)


def lp_bound_h_alt(p: int) -> int:
    """Variant quaternionic m=2 bound with q replaced by p in the floor arguments.

    Disagrees with lp_bound(H, 2, p//2) (e.g. gives 10 instead of 2 at p=2);
    kept only for side-by-side comparison in verbose table output.
    """
    return math.comb(p // 2 + 2, 2) * math.comb((p + 2) // 2 + 3, 2) // 3


@dataclass(frozen=True)
class BoundReport:
    """Both lower bounds for one (field, m, p), with the root data behind them."""

    field: Field
    m: int
    p: int
    lp_bound: int
    yudin_raw: float
    yudin_bound: int
    epsilon: float
    xi: float

    def to_dict(self) -> dict:
        return {
            "field": self.field.name,
            "m": self.m,
            "p": self.p,
            "lp_bound": self.lp_bound,
            "yudin_raw": self.yudin_raw,
            "yudin_bound": self.yudin_bound,
            "epsilon": self.epsilon,
            "xi": self.xi,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        return cls(
            field=Field.parse(d["field"]),
            m=int(d["m"]),
            p=int(d["p"]),
            lp_bound=int(d["lp_bound"]),
            yudin_raw=float(d["yudin_raw"]),
            yudin_bound=int(d["yudin_bound"]),
            epsilon=float(d["epsilon"]),
            xi=float(d["xi"]),
        )


def _check_even_p(p: int) -> None:
    if p < 2 or p % 2 != 0:
        raise ValueError(f"p must be a positive even integer, got {p}")


def _real_ratio_from_xi(m: int, xi: float) -> float:
    eta = math.sqrt((1.0 + xi) / 2.0)
    sym = JacobiParams((m - 3) / 2.0, (m - 3) / 2.0)
    return tau(sym) / (2.0 * incomplete_weight_integral(sym, eta))


def real_integral_ratio(m: int, p: int) -> float:
    """Real-case form of the test-function bound as a ratio of two integrals.

    integral_0^1 (1-s^2)^a ds / integral_eta^1 (1-s^2)^a ds with a = (m-3)/2
    and eta = sqrt((1+xi)/2).  Algebraically equal to the closed form; kept
    as an independent numeric route.
    """
    _check_even_p(p)
    params = field_params(Field.R, m)
    xi = largest_root(params.raised(), p // 2)
    return _real_ratio_from_xi(m, xi)


def yudin_bound(field: Field, m: int, p: int) -> BoundReport:
    """Yudin-type lower bound for (field, m, p), raw and rounded, plus LP bound.

    Evaluates the closed form in the log domain and enforces agreement with
    the per-field specialization (pure power of 1/eps over C, the rational
    form over H, the integral ratio over R) before reporting.
    """
    _check_even_p(p)
    params = field_params(field, m)
    a, b = params.alpha, params.beta
    xi = largest_root(params.raised(), p // 2)
    eps = (1.0 - xi) / 2.0
    if not 0.0 < eps < 1.0:
        raise NumericalError(f"epsilon={eps} outside (0,1) for field={field.name}, m={m}, p={p}")

    log_raw = (
        log_gamma(a + 2.0)
        + log_gamma(b + 1.0)
        - log_gamma(a + b + 2.0)
        - math.log(hypergeom_F(b, a, eps))
        - (a + 1.0) * math.log(eps)
    )
    raw = math.exp(log_raw)

    if field is Field.C:
        reference = (1.0 / eps) ** (m - 1)
    elif field is Field.H:
        reference = (1.0 / eps) ** (2 * m - 2) / ((2 * m - 1) - (2 * m - 2) * eps)
    else:
        reference = _real_ratio_from_xi(m, xi)
    if abs(raw - reference) > _CONSISTENCY_RTOL * abs(reference):
        raise NumericalError(
            f"bound forms disagree for field={field.name}, m={m}, p={p}: "
            f"closed form {raw!r} vs specialization {reference!r}"
        )

    report = BoundReport(
        field=field,
        m=m,
        p=p,
        lp_bound=lp_bound(field, m, p // 2),
        yudin_raw=raw,
        yudin_bound=ceil_snap(raw),
        epsilon=eps,
        xi=xi,
    )
    if report.yudin_bound < 1 or report.lp_bound < 1:
        raise NumericalError(f"nonsensical bound report: {report}")
    return report


def delta_C(p: int) -> int:
    """Rounded Yudin-type bound minus the LP bound, complex field, m=2."""
    _check_even_p(p)
    floor_form = (p + 4) ** 2 // 16  # integer part of (p/4 + 1)^2
    lp = lp_bound(Field.C, 2, p // 2)
    if floor_form != lp:
        raise NumericalError(f"complex m=2 LP closed forms disagree at p={p}: {floor_form} != {lp}")
    return yudin_bound(Field.C, 2, p).yudin_bound - floor_form


def delta_H(p: int) -> int:
    """Rounded Yudin-type bound minus the LP bound, quaternionic field, m=2."""
    _check_even_p(p)
    return yudin_bound(Field.H, 2, p).yudin_bound - lp_bound(Field.H, 2, p // 2)


@dataclass(frozen=True)
class LogScaled:
    """A positive quantity carried with its natural log (value may overflow to inf)."""

    value: float
    log_value: float


def _exp_safe(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def lambda_asym(field: Field, m: int) -> LogScaled:
    """Constant lambda(m) in the large-p growth of the LP bound, p^{d(m-1)} / lambda.

    Unified Gamma form, evaluated in the log domain; cross-checked against
    the explicit factorial case table for moderate m.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    d = field.delta
    log_val = (
        log_gamma(d * m / 2.0)
        + log_gamma(d * (m - 1) / 2.0 + 1.0)
        - log_gamma(d / 2.0)
        + 2.0 * d * (m - 1) * math.log(2.0)
    )
    if m <= 20:
        if field is Field.R:
            exact = 2 ** (m - 1) * math.factorial(m - 1)
        elif field is Field.C:
            exact = 2 ** (4 * (m - 1)) * math.factorial(m - 1) ** 2
        else:
            exact = 2 ** (8 * (m - 1)) * math.factorial(2 * m - 1) * math.factorial(2 * m - 2)
        if abs(log_val - math.log(exact)) > 1e-10:
            raise NumericalError(
                f"lambda forms disagree for field={field.name}, m={m}: "
                f"log {log_val} vs exact log {math.log(exact)}"
            )
    return LogScaled(value=_exp_safe(log_val), log_value=log_val)


def kappa(field: Field, m: int) -> LogScaled:
    """Quotient of the LP-side and test-function-side asymptotic constants.

    kappa = j_{nu,1}^{2 nu} / (Gamma(nu+1)^2 * 16^nu), nu = d(m-1)/2; strictly
    below 1 except in the real m=2 case, and exponentially small in m.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    nu = field.delta * (m - 1) / 2.0
    j1 = bessel_first_zero(nu).value
    log_val = 2.0 * nu * math.log(j1) - 2.0 * log_gamma(nu + 1.0) - nu * math.log(16.0)
    return LogScaled(value=_exp_safe(log_val), log_value=log_val)


@dataclass(frozen=True)
class AsymptoticRow:
    """Per-m comparison of asymptotic constants (log domain where they underflow)."""

    m: int
    nu: float
    bessel_zero: float
    kappa: float
    log_kappa: float
    log_kappa_approx: float  # log of (1/(pi*d*m)) * (e/4)^{d(m-1)}
    log_ratio: float  # log_kappa - log_kappa_approx
    lp_liminf_log: float  # log of 1/lambda(m)
    testfn_liminf_log: float  # log of the test-function side constant
    gap_factor_log: float  # log of 2^{d(m-1)} * kappa


def asymptotic_report(field: Field, m_list) -> list[AsymptoticRow]:
    """Rows comparing the two liminf constants and their quotient for each m."""
    rows = []
    d = field.delta
    for m in m_list:
        params = field_params(field, m)
        a, b = params.alpha, params.beta
        nu = d * (m - 1) / 2.0
        j1 = bessel_first_zero(nu).value
        kap = kappa(field, m)
        lam = lambda_asym(field, m)
        log_approx = -math.log(math.pi * d * m) + d * (m - 1) * (1.0 - math.log(4.0))
        testfn_log = (
            log_gamma(a + 2.0) + log_gamma(b + 1.0) - log_gamma(a + b + 2.0)
            - d * (m - 1) * math.log(j1)
        )
        rows.append(
            AsymptoticRow(
                m=m,
                nu=nu,
                bessel_zero=j1,
                kappa=kap.value,
                log_kappa=kap.log_value,
                log_kappa_approx=log_approx,
                log_ratio=kap.log_value - log_approx,
                lp_liminf_log=-lam.log_value,
                testfn_liminf_log=testfn_log,
                gap_factor_log=d * (m - 1) * math.log(2.0) + kap.log_value,
            )
        )
    return rows


@dataclass(frozen=True)
class OscillationRow:
    p: int
    delta: int
    d1: Optional[int]  # delta(p) - delta(p-2)
    d2: Optional[int]  # d1(p) - d1(p-2)
    d2_sign_expected: Optional[int]  # the observed alternation pattern (-1)^(p/2+1)
    d2_sign_match: Optional[bool]


@dataclass(frozen=True)
class MonotonicityRow:
    p: int
    delta: int
    d1: Optional[int]
    d1_nondecreasing: Optional[bool]


@dataclass(frozen=True)
class OscillationReport:
    """Difference tables for both fields at m=2; patterns reported, not asserted."""

    h_rows: list
    c_rows: list


def oscillation_report(p_max: int) -> OscillationReport:
    """First/second differences of delta_H and delta_C up to p_max (even, >= 8).

    The alternating sign of the quaternionic second difference and the
    monotonicity of the complex first difference are observed regularities;
    this report flags them without asserting them.
    """
    if p_max < 8 or p_max % 2 != 0:
        raise ValueError(f"p_max must be an even integer >= 8, got {p_max}")
    ps = list(range(2, p_max + 1, 2))
    dh = {p: delta_H(p) for p in ps}
    dc = {p: delta_C(p) for p in ps}

    h_rows = []
    d1h = {p: dh[p] - dh[p - 2] for p in ps if p >= 4}
    d2h = {p: d1h[p] - d1h[p - 2] for p in ps if p >= 6}
    for p in ps:
        d2 = d2h.get(p)
        expected = 1 if (p // 2 + 1) % 2 == 0 else -1
        match = None if d2 is None else (d2 > 0) == (expected > 0) and d2 != 0
        h_rows.append(
            OscillationRow(
                p=p,
                delta=dh[p],
                d1=d1h.get(p),
                d2=d2,
                d2_sign_expected=expected if d2 is not None else None,
                d2_sign_match=match,
            )
        )

    c_rows = []
    d1c = {p: dc[p] - dc[p - 2] for p in ps if p >= 4}
    for p in ps:
        d1 = d1c.get(p)
        prev = d1c.get(p - 2)
        c_rows.append(
            MonotonicityRow(
                p=p,
                delta=dc[p],
                d1=d1,
                d1_nondecreasing=None if (d1 is None or prev is None) else d1 >= prev,
            )
        )
    return OscillationReport(h_rows=h_rows, c_rows=c_rows)


def root_asymptotic_ratio(field: Field, m: int, p: int) -> float:
    """eps(p) * p^2 / j_{alpha+1,1}^2; tends to 1 as p grows at fixed (field, m)."""
    report = yudin_bound(field, m, p)
    nu = field_params(field, m).alpha + 1.0
    j1 = bessel_first_zero(nu).value
    return report.epsilon * p * p / (j1 * j1)
