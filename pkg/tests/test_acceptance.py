"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import math
import time

import numpy as np
import pytest

from projbound import (
    Field,
    bessel_first_zero,
    bound_from_test_function,
    build_test_function,
    circle_design,
    delta_C,
    delta_H,
    eval_f,
    field_params,
    jacobi_eval,
    kappa,
    largest_root,
    log_gamma,
    lp_bound,
    moment_test,
    orthonormal_design,
    real_integral_ratio,
    root_asymptotic_ratio,
    verify,
    yudin_bound,
)
from projbound.cubature import PointSet
from projbound.jacobi import JacobiParams

from helpers import quad_tail

DELTA_C_EXPECTED = {p: 0 for p in range(2, 17, 2)}
DELTA_C_EXPECTED.update({p: 1 for p in (18, 20, 22, 24)})
DELTA_C_EXPECTED.update(
    dict(zip(range(26, 53, 2), [2, 2, 3, 3, 4, 4, 5, 6, 7, 7, 8, 9, 10, 11]))
)
DELTA_C_EXPECTED.update(
    dict(
        zip(
            range(54, 85, 2),
            [12, 13, 14, 15, 17, 18, 19, 20, 22, 23, 25, 26, 28, 29, 31, 32],
        )
    )
)
DELTA_C_EXPECTED.update({86: 34, 88: 36, 90: 38})

DELTA_H_TABLE1 = {2: 0, 4: -1, 10: -2, 12: -6, 14: -3, 16: -6, 18: 1, 20: -1}
DELTA_H_TABLE2 = dict(
    zip(
        range(22, 51, 2),
        [12, 14, 35, 42, 75, 90, 138, 165, 231, 274, 364, 426, 544, 631, 782],
    )
)


def _criterion(cid, name):
    def deco(fn):
        def wrapped(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {cid} {name}: FAIL")
                raise
            print(f"ACCEPTANCE {cid} {name}: PASS")

        wrapped.__name__ = fn.__name__
        return wrapped

    return deco


@_criterion(1, "delta_C table reproduction")
def test_criterion_1_delta_c_table():
    start = time.perf_counter()
    got = {p: delta_C(p) for p in range(2, 91, 2)}
    elapsed = time.perf_counter() - start
    assert got == DELTA_C_EXPECTED
    assert elapsed < 5.0, f"delta_C table took {elapsed:.2f}s"


@_criterion(2, "delta_H table reproduction")
def test_criterion_2_delta_h_tables():
    start = time.perf_counter()
    got = {p: delta_H(p) for p in range(2, 51, 2)}
    elapsed = time.perf_counter() - start
    expected = dict(DELTA_H_TABLE1)
    expected.update(DELTA_H_TABLE2)
    mismatches = {p: (got[p], expected[p]) for p in expected if got[p] != expected[p]}
    assert not mismatches, f"delta_H mismatches: {mismatches}"
    # the two source entries at the duplicated position are excluded from
    # pass/fail; report the computed values
    print(f"  [excluded entries] delta_H(6) = {got[6]}, delta_H(8) = {got[8]}")
    assert elapsed < 5.0, f"delta_H tables took {elapsed:.2f}s"


@_criterion(3, "equivalence of bound forms")
def test_criterion_3_form_equivalence():
    for field in Field:
        for m in (2, 3, 4, 5):
            for p in range(2, 41, 2):
                report = yudin_bound(field, m, p)
                tf = build_test_function(field, m, p // 2, k_max=p // 2 + 4)
                ratio_form = bound_from_test_function(tf)
                assert report.yudin_raw == pytest.approx(ratio_form, rel=1e-10), (
                    field,
                    m,
                    p,
                )
                if field is Field.R:
                    integral_form = real_integral_ratio(m, p)
                    assert report.yudin_raw == pytest.approx(integral_form, rel=1e-10)
                    assert ratio_form == pytest.approx(integral_form, rel=1e-10)


@_criterion(4, "real m=2 exactness")
def test_criterion_4_real_m2_exactness():
    for p in range(2, 41, 2):
        report = yudin_bound(Field.R, 2, p)
        assert report.yudin_raw == pytest.approx(p / 2 + 1, rel=1e-10)
        assert report.yudin_bound == lp_bound(Field.R, 2, p // 2)


@_criterion(5, "test-function certificate")
def test_criterion_5_certificate():
    grid = np.linspace(-1.0, 1.0, 2000)
    for field in Field:
        for m in (2, 3, 4):
            for l in range(1, 13):
                tf = build_test_function(field, m, l, k_max=200)
                scale = np.abs(tf.coeff_f).max()
                # c_{l+1}[f] vanishes
                assert abs(tf.coeff_f[l + 1]) <= 1e-12 * scale, (field, m, l)
                # never positive past l+1; strictly negative wherever c_k[h]
                # is not an exact zero (at m=2, l=1 alternate coefficients
                # vanish identically)
                high = tf.coeff_f[l + 2 :]
                assert np.all(high <= 0.0), (field, m, l)
                nonzero = tf.coeff_h[l + 2 :] != 0.0
                assert np.all(high[nonzero] < 0.0), (field, m, l)
                assert np.count_nonzero(nonzero) >= len(high) // 2

                # closed-form coefficients against direct tail quadrature
                params = tf.params
                p_r_xi = jacobi_eval(params, tf.r, tf.xi)
                for k in range(26):
                    h_quad = quad_tail(
                        params.alpha,
                        params.beta,
                        tf.xi,
                        lambda t, k=k: jacobi_eval(params, k, t),
                    )
                    g_quad = quad_tail(
                        params.alpha,
                        params.beta,
                        tf.xi,
                        lambda t, k=k: (jacobi_eval(params, tf.r, t) - p_r_xi)
                        * jacobi_eval(params, k, t),
                    )
                    coeff_cap = max(np.abs(tf.coeff_h).max(), np.abs(tf.coeff_g).max())
                    assert abs(tf.coeff_h[k] - h_quad) <= 1e-10 * coeff_cap
                    assert abs(tf.coeff_g[k] - g_quad) <= 1e-10 * coeff_cap

                # nonnegativity of the function itself: evaluate with the
                # series pushed to convergence (truncating at 200 leaves
                # oscillations around zero far above this tolerance for the
                # slowly decaying real-field tables)
                tf_eval = build_test_function(field, m, l, k_max=2400)
                vals = eval_f(tf_eval, grid)
                assert vals.min() >= -1e-8 * tf_eval.value_at_one, (field, m, l)


@_criterion(6, "kappa below one and the zero-bracket inequality")
def test_criterion_6_kappa():
    assert kappa(Field.R, 2).value == pytest.approx(1.0, abs=1e-10)
    for field in Field:
        for m in range(2, 51):
            if field is Field.R and m == 2:
                continue
            assert kappa(field, m).value < 1.0, (field, m)
    nu = 1.0
    while nu <= 50.0:
        lhs = nu * (math.log(nu + 1.0) + math.log(nu + 3.0))
        rhs = 2.0 * log_gamma(nu + 1.0) + nu * math.log(8.0)
        assert lhs <= rhs + 1e-12, nu
        nu += 0.5


@_criterion(7, "log-scale decay rate of kappa")
def test_criterion_7_kappa_slope():
    for field in Field:
        lo = kappa(field, 100).log_value
        hi = kappa(field, 200).log_value
        slope = (hi - lo) / 100.0
        target = -field.delta * math.log(4.0 / math.e)
        assert abs(slope / target - 1.0) < 0.10, (field, slope, target)


@_criterion(8, "epsilon-Bessel ratio window at p=400")
def test_criterion_8_epsilon_ratio_window():
    failures = {}
    for field in Field:
        for m in (2, 3):
            ratio = root_asymptotic_ratio(field, m, 400)
            print(f"  eps*p^2/j^2 at p=400, field {field.name}, m={m}: {ratio:.6f}")
            if not 0.98 <= ratio <= 1.02:
                failures[(field.name, m)] = ratio
    assert not failures, f"ratio outside [0.98, 1.02]: {failures}"


@_criterion(9, "verifier fixtures")
def test_criterion_9_verifier_fixtures():
    for p in range(2, 21, 2):
        report = verify(circle_design(p), p)
        assert report.passed and report.max_abs_moment < 1e-10, p
        assert report.tight_lp and report.tight_yudin, p

    for field in Field:
        for m in range(2, 6):
            report = verify(orthonormal_design(field, m), 2)
            assert report.passed, (field, m)

    for p in range(2, 21, 2):
        base = circle_design(p)
        for idx in range(base.n):
            nodes = base.nodes.copy()
            theta = math.atan2(nodes[idx, 1, 0], nodes[idx, 0, 0]) + 0.01
            nodes[idx, 0, 0], nodes[idx, 1, 0] = math.cos(theta), math.sin(theta)
            moments = moment_test(PointSet(Field.R, 2, nodes), p)
            assert max(abs(v) for v in moments) > 1e-6, (p, idx)


@_criterion(10, "substitution-root cross-check")
def test_criterion_10_gegenbauer_roots():
    for m in range(2, 7):
        for p in range(2, 31, 2):
            params = field_params(Field.R, m)
            xi = largest_root(params.raised(), p // 2)
            half = (m - 1) / 2.0
            eta = largest_root(JacobiParams(half, half), p + 1)
            assert eta * eta == pytest.approx((1.0 + xi) / 2.0, abs=1e-12), (m, p)
