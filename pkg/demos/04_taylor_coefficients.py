"""Taylor coefficients of the extremal functions by power-series integration.

Run: python demos/04_taylor_coefficients.py
"""

import numpy as np

from janowski_schwarzian import (
    ExtremalKind,
    ExtremalSpec,
    K_series,
    f0_series,
    extremal_spec,
    fzpq_series,
    subordination_residual,
    validate,
)

np.set_printoptions(precision=6, suppress=True)

print("K_{1,-1} = z/(1-z):", K_series(validate(1, -1), 8).c.real)
print("f0 for C(1,-1) = atanh z:", f0_series(validate(1, -1), 8).c.real)

p = validate(0.2, -0.5)
spec = extremal_spec(p, 0.5)
f = fzpq_series(p, spec, 32)
res = subordination_residual(p, f, spec.schwarz_function())
print(f"\nf_(0.5,{spec.p},{spec.q}) for (0.2, -0.5):", f.c[:9].real)
print(f"max |1 + z f''/f' - (1 + A w)/(1 + B w)| coefficient: {np.max(np.abs(res)):.2e}")

k = ExtremalSpec(ExtremalKind.K)
res = subordination_residual(p, K_series(p, 32), k.schwarz_function())
print(f"same check for K_(0.2,-0.5): {np.max(np.abs(res)):.2e}")
