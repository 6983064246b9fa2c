"""Pointwise bound on |S_f(z)|, random Schwarz functions, and the extremal f_{z0,p,q}.

Run: python demos/02_pointwise_and_sharpness.py
"""

import numpy as np

from janowski_schwarzian import (
    deltas,
    extremal_spec,
    pointwise_parts,
    random_schwarz,
    schwarzian,
    validate,
)

p = validate(-0.8, -0.95)  # an E3 pair: the bound switches formula on an annulus
d1, d2 = deltas(p)
print(f"annulus for (A, B) = ({p.A}, {p.B}): {d1:.4f} <= |z| <= {d2:.4f}")
for t in (0.1, 0.5, 0.8, 0.95):
    parts = pointwise_parts(p, t)
    print(f"|z|={t:4.2f}  branch={parts.branch:8s} bound={parts.bound:.6f}")

# Random Schwarz functions never beat the bound.
rng = np.random.default_rng(0)
slack = []
for seed in range(2000):
    w = random_schwarz(seed % 4, seed)
    z = 0.95 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    slack.append(pointwise_parts(p, z).bound - abs(schwarzian(p, w, z).value))
print(f"\nmin slack over 2000 random samples: {min(slack):.3e}")

# The extremal function attains it at a real point outside the annulus.
z0 = 0.12
spec = extremal_spec(p, z0)
print(f"\nz0={z0}: (p, q, b) = ({spec.p}, {spec.q}, {spec.b:.12f})")
print(f"|S_f(z0)| = {abs(schwarzian(p, spec.schwarz_function(), z0).value):.12f}")
print(f"bound     = {pointwise_parts(p, z0).bound:.12f}")
