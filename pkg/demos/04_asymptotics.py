"""Large-p and large-m behavior of the two bounds.

As p grows, eps approaches j_{alpha+1,1}^2 / p^2, so the convolution bound
grows like p^{d(m-1)} with a constant governed by the first Bessel zero.
The quotient kappa of the LP-side and convolution-side constants equals 1
only in the real m=2 case and decays exponentially in m.
"""

import math

from projbound import Field, asymptotic_report, kappa, root_asymptotic_ratio

print("kappa near m=2 (real case is the unique equality case):")
for field in Field:
    for m in (2, 3, 4):
        print(f"  {field.name} m={m}: kappa = {kappa(field, m).value:.10f}")

print()
print("Exponential decay: ln kappa per unit m over m in [100, 200]")
for field in Field:
    slope = (kappa(field, 200).log_value - kappa(field, 100).log_value) / 100.0
    target = -field.delta * math.log(4.0 / math.e)
    print(
        f"  {field.name}: measured {slope:+.5f}, limit -delta*ln(4/e) = {target:+.5f} "
        f"({100 * abs(slope / target - 1):.1f}% off at this range)"
    )

print()
print("Convergence of eps * p^2 / j^2 toward 1 (finite-p deficit ~ 1/p):")
for field in Field:
    for m in (2, 3):
        row = "  ".join(
            f"p={p}: {root_asymptotic_ratio(field, m, p):.4f}" for p in (100, 400, 1600)
        )
        print(f"  {field.name} m={m}:  {row}")

print()
print("Full report row for the complex field at m=10:")
(row,) = asymptotic_report(Field.C, [10])
print(f"  nu = {row.nu}, j_(nu,1) = {row.bessel_zero:.6f}")
print(f"  ln kappa = {row.log_kappa:.4f}, approx {row.log_kappa_approx:.4f}, "
      f"log-ratio {row.log_ratio:.4f}")
print(f"  liminf constants (log): lp side {row.lp_liminf_log:.4f}, "
      f"test-function side {row.testfn_liminf_log:.4f}")
print(f"  upper/lower gap factor (log): {row.gap_factor_log:.4f}")
