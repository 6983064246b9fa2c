"""Numeric Schwarzian norms on a polar grid versus the closed forms.

Run: python demos/03_numeric_verification.py
"""

from janowski_schwarzian import (
    SchwarzFunction,
    check_pointwise_dominance,
    dieudonne_suite,
    norm_bound,
    numeric_norm,
    validate,
)
from janowski_schwarzian.verifier import norm_witness

for A, B in [(-0.5, -1.0), (-0.5, -0.99), (0.5, -0.95), (0.5, 0.0), (0.3, -1.0)]:
    p = validate(A, B)
    w, rep = norm_witness(p)
    print(f"({A:5.2f},{B:5.2f}) {norm_bound(p).branch:10s} grid sup {rep.numeric_sup:.6f}"
          f"  closed form {rep.closed_form:.6f}")

# K_{A,B} corresponds to w(z) = z.
rep = numeric_norm(validate(-0.5, -1.0), SchwarzFunction.identity())
print("\ntop witnesses for K_{-1/2,-1}:")
for z, v in rep.witnesses:
    print(f"  z = {z:.5f}  weighted |S| = {v:.6f}")

dom = check_pointwise_dominance(validate(0.2, -0.6), 5000, seed=1)
print(f"\ndominance: {dom.checks} trials, worst gap {dom.max_violation:.3e}, passed={dom.passed}")
dd = dieudonne_suite(1000, seed=2)
print(f"Dieudonne: {dd.checks} trials, worst gap {dd.max_violation:.3e}, passed={dd.passed}")
