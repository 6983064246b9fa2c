"""Sharp Schwarzian norm bounds across the (A, B) triangle.

Run: python demos/01_norm_bounds.py
"""

import numpy as np

from janowski_schwarzian import classify, norm_bound, validate

# The classical subclasses first.
for label, (A, B) in {
    "convex C = C(1,-1)": (1.0, -1.0),
    "convex of order 3/4 = C(-1/2,-1)": (-0.5, -1.0),
    "C(1/2, 0)": (0.5, 0.0),
    "C(1/2, -1/2)": (0.5, -0.5),
}.items():
    rep = norm_bound(validate(A, B))
    print(f"{label:36s} region={rep.region} branch={rep.branch:10s} "
          f"||S_f|| <= {rep.bound:.6f}  qc={rep.qc_constant}")

# Convex functions of order alpha: 2 up to alpha = 1/2, then 8 alpha (1 - alpha).
print("\nalpha   bound     8a(1-a)")
for alpha in np.linspace(0.0, 0.95, 11):
    bound = norm_bound(validate(1 - 2 * alpha, -1.0)).bound
    print(f"{alpha:5.3f}  {bound:.6f}  {8 * alpha * (1 - alpha):.6f}")

# The gamma(alpha) branch needs B != -1 and |A+B| > 2(1 - B^2).
p = validate(0.5, -0.95)
rep = norm_bound(p)
print(f"\n(0.5, -0.95): {classify(p)} {rep.branch}, alpha = {rep.alpha:.12f}, bound = {rep.bound:.12f}")
