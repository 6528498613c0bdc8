"""Verifying candidate cubature formulas with the Jacobi moment test.

A weighted point set on the unit sphere of K^m has cubature index p exactly
when the moments M_k = sum_{ij} w_i w_j P_k(x_i . x_j) vanish for
k = 1..p/2.  Two classical fixtures pass and sit exactly on the lower
bounds; a tiny perturbation is caught immediately.
"""

import math

import numpy as np

from projbound import Field, PointSet, circle_design, moment_test, orthonormal_design, verify

print("Equiangular lines on the real circle (tight for every p):")
for p in (2, 6, 10, 14, 20):
    rep = verify(circle_design(p), p)
    tight = "tight vs both bounds" if rep.tight_lp and rep.tight_yudin else ""
    print(
        f"  p={p:>2}  n={rep.n:>2}  max|M_k|={rep.max_abs_moment:.2e}  "
        f"{'PASS' if rep.passed else 'FAIL'}  lp={rep.lp_bound} yudin={rep.yudin_bound}  {tight}"
    )

print()
print("Coordinate bases (index-2 formulas over every field):")
for field in Field:
    for m in (2, 3, 5):
        rep = verify(orthonormal_design(field, m), 2)
        print(
            f"  {field.name} m={m}:  n={rep.n}  max|M_1|={rep.max_abs_moment:.2e}  "
            f"{'PASS' if rep.passed else 'FAIL'}  lp={rep.lp_bound}"
        )

print()
print("A 0.01-radian nudge of one circle node breaks the design:")
base = circle_design(10)
nodes = base.nodes.copy()
theta = math.atan2(nodes[2, 1, 0], nodes[2, 0, 0]) + 0.01
nodes[2, 0, 0], nodes[2, 1, 0] = math.cos(theta), math.sin(theta)
moments = moment_test(PointSet(Field.R, 2, nodes), 10)
for k, m_k in enumerate(moments, start=1):
    print(f"  M_{k} = {m_k:+.3e}")
print(f"  max|M_k| = {max(abs(v) for v in moments):.3e}  -> FAIL")
print()
print("All moments stay nonnegative even for arbitrary weighted sets")
print("(they are sums of squared harmonic moments):")
rng = np.random.default_rng(1)
raw = rng.standard_normal((5, 3, 1))
nodes = np.zeros((5, 3, 4))
nodes[:, :, :1] = raw / np.sqrt((raw**2).sum(axis=(1, 2)))[:, None, None]
random_set = PointSet(Field.R, 3, nodes)
print("  ", [f"{v:.4f}" for v in moment_test(random_set, 8)])
