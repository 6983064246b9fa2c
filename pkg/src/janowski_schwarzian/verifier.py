"""Empirical checks: numeric Schwarzian norms, bound dominance, sharpness.

The supremum of ``(1-|z|^2)^2 |S_f(z)|`` is located by a coarse polar grid
followed by golden-section refinement in the radius along the best angles.
All randomness is drawn from ``numpy.random.default_rng(seed)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import norm_bound, pointwise_bound_radial, weighted_pointwise_bound
from .errors import PreconditionError
from .extremal import extremal_spec, extremal_weighted_value, is_admissible, weighted_bound_at
from .params import JanowskiParams, RegionClass, classify
from .schwarz import SchwarzFunction, dieudonne_gap, random_blaschke
from .schwarzian import schwarzian, weighted_schwarzian

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GridSpec:
    radial_points: int = 256
    angular_points: int = 128
    boundary_margin: float = 1e-4
    refine_iters: int = 40
    refine_angles: int = 8

    def __post_init__(self):
        if min(self.radial_points, self.angular_points, self.refine_angles) < 1 or self.refine_iters < 0:
            raise ValueError("grid counts must be positive")
        if not 0.0 < self.boundary_margin < 1.0:
            raise ValueError("boundary_margin must lie in (0, 1)")

    @property
    def r_max(self) -> float:
        return 1.0 - self.boundary_margin

    def radii(self) -> np.ndarray:
        return np.linspace(0.0, self.r_max, self.radial_points)

    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_points) / self.angular_points


@dataclass
class VerificationReport:
    numeric_sup: float
    closed_form: float
    max_violation: float
    witnesses: list = field(default_factory=list)
    tolerance: float = 1e-9
    checks: int = 0
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "numeric_sup": self.numeric_sup,
            "closed_form": self.closed_form,
            "max_violation": self.max_violation,
            "tolerance": self.tolerance,
            "checks": self.checks,
            "failures": self.failures,
            "passed": self.passed,
            "witnesses": [
                {"z": [complex(z).real, complex(z).imag], "weighted": v} for z, v in self.witnesses
            ],
        }


def golden_max(fn, lo: float, hi: float, iters: int):
    """Maximise a scalar function on [lo, hi]; returns the best (x, f(x)) evaluated."""
    best_x, best_v = lo, fn(lo)
    v_hi = fn(hi)
    if v_hi > best_v:
        best_x, best_v = hi, v_hi
    a, b = lo, hi
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = fn(d)
        for x, v in ((c, fc), (d, fd)):
            if v > best_v:
                best_x, best_v = x, v
    for x, v in ((c, fc), (d, fd)):
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v


def polar_sup(fn, grid: GridSpec, top: int = 5):
    """Supremum of a vectorised ``fn(z)`` over the closed disk of radius ``grid.r_max``.

    Returns ``(sup, witnesses)`` with the ``top`` best ``(z, value)`` pairs.
    """
    radii = grid.radii()
    angles = grid.angles()
    Z = radii[:, None] * np.exp(1j * angles)[None, :]
    V = np.asarray(fn(Z), dtype=float)
    candidates = [(complex(Z[i, j]), float(V[i, j])) for i, j in zip(*np.unravel_index(
        np.argsort(V, axis=None)[::-1][: max(top, 1)], V.shape))]

    col_best = V.max(axis=0)
    order = np.argsort(col_best, kind="stable")[::-1][: grid.refine_angles]
    dr = radii[1] - radii[0] if len(radii) > 1 else grid.r_max
    for j in sorted(order):
        i = int(np.argmax(V[:, j]))
        lo = max(0.0, radii[i] - dr)
        hi = min(grid.r_max, radii[i] + dr)
        e = np.exp(1j * angles[j])
        x, v = golden_max(lambda r: float(fn(np.asarray(r * e))), lo, hi, grid.refine_iters)
        candidates.append((complex(x * e), float(v)))

    candidates.sort(key=lambda zv: zv[1], reverse=True)
    seen, witnesses = set(), []
    for z, v in candidates:
        key = (round(z.real, 12), round(z.imag, 12))
        if key in seen:
            continue
        seen.add(key)
        witnesses.append((z, v))
        if len(witnesses) == top:
            break
    return witnesses[0][1], witnesses


def numeric_norm(params: JanowskiParams, w: SchwarzFunction, grid: GridSpec | None = None,
                 tolerance: float = 1e-3) -> VerificationReport:
    """Grid estimate of ``||S_f||`` for the ``f`` generated by ``w``, against the closed-form bound."""
    grid = grid or GridSpec()
    sup, witnesses = polar_sup(lambda z: weighted_schwarzian(params, w, z), grid)
    closed = norm_bound(params).bound
    gap = sup - closed
    return VerificationReport(sup, closed, gap, witnesses, tolerance, 1, int(gap > tolerance))


def grid_sup_of_bound(params: JanowskiParams, grid: GridSpec | None = None) -> float:
    """Supremum of the weighted pointwise bound over the radii of the grid, refined.

    The bound is radial, so only the radial grid and golden-section
    refinement around its best radius are needed.
    """
    grid = grid or GridSpec()
    radii = grid.radii()
    vals = weighted_pointwise_bound(params, radii)
    i = int(np.argmax(vals))
    dr = radii[1] - radii[0] if len(radii) > 1 else grid.r_max
    _, v = golden_max(lambda r: float(weighted_pointwise_bound(params, r)),
                      max(0.0, radii[i] - dr), min(grid.r_max, radii[i] + dr), grid.refine_iters)
    return max(float(vals[i]), v)


def _random_point(rng: np.random.Generator, r_max: float = 0.99) -> complex:
    return complex(r_max * rng.uniform() * np.exp(2j * np.pi * rng.uniform()))


def check_pointwise_dominance(params: JanowskiParams, trials: int, seed: int = 0,
                              max_degree: int = 4, tolerance: float = 1e-9) -> VerificationReport:
    """Random ``(w, z)`` pairs: weighted |S_f(z)| must not exceed the weighted pointwise bound.

    ``max_violation`` is the largest ``weighted - bound`` seen (negative when
    every sample has slack). The zero function is always the first trial.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    worst = -math.inf
    sup = 0.0
    failures = 0
    witnesses = []
    for k in range(trials):
        if k == 0:
            w = SchwarzFunction.zero()
        else:
            w = SchwarzFunction(random_blaschke(int(rng.integers(0, max_degree)), rng))
        z = _random_point(rng)
        sample = schwarzian(params, w, z)
        bound = (1.0 - abs(z) ** 2) ** 2 * pointwise_bound_radial(params, abs(z))
        gap = sample.weighted - bound
        if gap > tolerance:
            failures += 1
        if gap > worst:
            worst = gap
        sup = max(sup, sample.weighted)
        witnesses.append((z, sample.weighted))
    witnesses.sort(key=lambda zv: zv[1], reverse=True)
    return VerificationReport(sup, norm_bound(params).bound, worst, witnesses[:5], tolerance, trials, failures)


def check_sharpness(params: JanowskiParams, z0_list, tolerance: float = 1e-9,
                    grid: GridSpec | None = None, norm_tolerance: float = 1e-3) -> VerificationReport:
    """Extremal functions attain the pointwise bound at each ``z0``; in E3, K attains the norm bound.

    Raises :class:`PreconditionError` for a ``z0`` where the construction does not apply.
    """
    worst = 0.0
    failures = 0
    checks = 0
    witnesses = []
    sup = 0.0
    for z0 in z0_list:
        if not is_admissible(params, z0):
            raise PreconditionError(f"z0={z0!r} is not admissible for {params}")
        attained = extremal_weighted_value(params, z0)
        target = weighted_bound_at(params, z0)
        gap = abs(attained - target)
        checks += 1
        failures += gap > tolerance
        worst = max(worst, gap)
        sup = max(sup, attained)
        witnesses.append((complex(z0), attained))
    closed = norm_bound(params).bound
    if classify(params) is RegionClass.E3:
        rep = numeric_norm(params, SchwarzFunction.identity(), grid, norm_tolerance)
        checks += 1
        err = abs(rep.numeric_sup - closed)
        failures += err > norm_tolerance
        sup = max(sup, rep.numeric_sup)
        witnesses.extend(rep.witnesses[:1])
    witnesses.sort(key=lambda zv: zv[1], reverse=True)
    return VerificationReport(sup, closed, worst, witnesses[:5], tolerance, checks, failures)


def dieudonne_suite(trials: int, seed: int = 0, max_degree: int = 4,
                    tolerance: float = 1e-9) -> VerificationReport:
    """Dieudonne inequality on random Schwarz functions, equality on degree-2 Blaschke products.

    Odd-numbered trials draw ``w = z * (one Blaschke factor)``; for those
    ``max_violation`` also tracks ``|lhs - rhs|``. ``numeric_sup`` is the
    largest ``lhs - rhs`` seen over all trials.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    worst_ineq = -math.inf
    worst_eq = 0.0
    failures = 0
    witnesses = []
    for k in range(trials):
        degree = 1 if k % 2 else int(rng.integers(0, max_degree + 1))
        w = SchwarzFunction(random_blaschke(degree, rng))
        r = rng.uniform(0.05, 0.95)
        z0 = complex(r * np.exp(2j * np.pi * rng.uniform()))
        lhs, rhs = dieudonne_gap(w, z0)
        gap = lhs - rhs
        worst_ineq = max(worst_ineq, gap)
        bad = gap > tolerance
        if degree == 1:
            worst_eq = max(worst_eq, abs(gap))
            bad = bad or abs(gap) > tolerance
        failures += bad
        witnesses.append((z0, gap))
    witnesses.sort(key=lambda zv: zv[1], reverse=True)
    return VerificationReport(worst_ineq, 0.0, max(worst_ineq, worst_eq), witnesses[:5],
                              tolerance, trials, failures)


def norm_witness(params: JanowskiParams, grid: GridSpec | None = None,
                 tolerance: float = 5e-3) -> tuple[SchwarzFunction, VerificationReport]:
    """The Schwarz function of the function attaining the norm bound, with its numeric norm.

    For ``B = -1`` outside E3 the bound is a boundary limit and the witness
    ``f_{z0,1,1}`` with ``z0 = 0.999`` only approaches it.
    """
    rep = norm_bound(params)
    if rep.branch.value == "E3Formula":
        w = SchwarzFunction.identity()
    elif rep.branch.value == "AminusB":
        w = SchwarzFunction.from_zeros([0.0])
    elif rep.branch.value == "GammaAlpha":
        w = extremal_spec(params, rep.alpha).schwarz_function()
    else:
        w = extremal_spec(params, 0.999).schwarz_function()
    return w, numeric_norm(params, w, grid, tolerance)
