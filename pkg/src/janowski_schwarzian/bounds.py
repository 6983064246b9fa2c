"""Sharp pointwise bound on |S_f(z)| and sharp bound on the Schwarzian norm.

Notation used throughout (``s = |A+B|``, ``t = |z|``):

* ``s0(t) = 2|B| t^2 / (2 - s(1 - t^2))``, the maximiser of the auxiliary
  function that controls |S_f| once ``|w(z)|`` is fixed;
* ``k(t) = 2 - s - 2|B| t + s t^2``; ``s0(t) < t`` iff ``k(t) > 0``;
* ``delta1 <= delta2`` are the roots of ``k`` (relevant in E3 only), and the
  annulus ``delta1 <= t <= delta2`` is where ``k <= 0``;
* ``gamma(t)`` and ``gamma1(t)`` are the hyperbolically weighted bounds divided
  by ``A - B`` inside and on the annulus respectively;
* ``h`` is the quartic with ``gamma'(t) = 2 t h(t) / (...)^2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError
from .params import JanowskiParams, RegionClass, classify


class PointwiseBranch(str, enum.Enum):
    Interior = "Interior"
    Annulus = "Annulus"

    def __str__(self) -> str:
        return self.value


class NormBranch(str, enum.Enum):
    Bm1 = "Bm1"
    AminusB = "AminusB"
    GammaAlpha = "GammaAlpha"
    E3Formula = "E3Formula"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PointwiseBoundParts:
    s0: float
    delta1: float | None
    delta2: float | None
    branch: PointwiseBranch
    bound: float


@dataclass(frozen=True)
class NormBoundReport:
    region: RegionClass
    bound: float
    branch: NormBranch
    alpha: float | None = None
    qc_constant: float | None = None

    def to_json(self) -> dict:
        return {
            "region": str(self.region),
            "bound": self.bound,
            "branch": str(self.branch),
            "alpha": self.alpha,
            "qc_constant": self.qc_constant,
        }


def s0_of(params: JanowskiParams, t):
    t2 = np.asarray(t, dtype=float) ** 2
    out = 2.0 * params.absB * t2 / (2.0 - params.sAB * (1.0 - t2))
    return float(out) if out.ndim == 0 else out


def k_poly(params: JanowskiParams, t):
    s = params.sAB
    return 2.0 - s - 2.0 * params.absB * t + s * np.asarray(t) ** 2


def deltas(params: JanowskiParams) -> tuple[float, float]:
    """Roots of ``k``; only meaningful in E3 where both are real and in (0, 1]."""
    if classify(params) is not RegionClass.E3:
        raise PreconditionError("the annulus only exists for parameters in E3")
    s = params.sAB
    if params.B == -1.0:
        return 2.0 / abs(params.A - 1.0) - 1.0, 1.0
    disc = math.sqrt(max(0.0, params.B ** 2 - s * (2.0 - s)))
    return (params.absB - disc) / s, (params.absB + disc) / s


def gamma(params: JanowskiParams, t):
    s = params.sAB
    u = 1.0 - np.asarray(t, dtype=float) ** 2
    c = 2.0 - s * u
    out = u * c / (c - 2.0 * params.B ** 2 * (1.0 - u))
    return float(out) if out.ndim == 0 else out


def gamma1(params: JanowskiParams, t):
    t = np.asarray(t, dtype=float)
    out = params.sAB * (1.0 - t * t) ** 2 / (2.0 * (1.0 - params.absB * t) ** 2)
    return float(out) if out.ndim == 0 else out


def h_poly(params: JanowskiParams, t):
    s = params.sAB
    B2 = params.B ** 2
    t2 = np.asarray(t, dtype=float) ** 2
    out = (2.0 - s) * (s + 2.0 * B2 - 2.0) - 2.0 * s * (2.0 - s) * t2 + s * (2.0 * B2 - s) * t2 * t2
    return float(out) if out.ndim == 0 else out


def beta_point(params: JanowskiParams) -> float:
    """Maximiser of ``gamma1`` on (0, 1): ``(1 - sqrt(1-B^2)) / |B|``."""
    if params.B == 0.0:
        raise PreconditionError("gamma1 has no interior maximiser when B = 0")
    return (1.0 - params.root) / params.absB


def _in_annulus(params: JanowskiParams, t):
    if classify(params) is not RegionClass.E3:
        return np.zeros(np.shape(t), dtype=bool)
    d1, d2 = deltas(params)
    return (np.asarray(t) >= d1) & (np.asarray(t) <= d2)


def pointwise_parts(params: JanowskiParams, z: complex) -> PointwiseBoundParts:
    t = abs(complex(z))
    if t >= 1.0:
        raise DomainError("z must lie in the open unit disk")
    d1 = d2 = None
    if classify(params) is RegionClass.E3:
        d1, d2 = deltas(params)
    annulus = bool(_in_annulus(params, t))
    bound = float(pointwise_bound_radial(params, t))
    return PointwiseBoundParts(
        s0=s0_of(params, t),
        delta1=d1,
        delta2=d2,
        branch=PointwiseBranch.Annulus if annulus else PointwiseBranch.Interior,
        bound=bound,
    )


def pointwise_bound_radial(params: JanowskiParams, t):
    """The bound on |S_f(z)| as a function of ``t = |z|`` (vectorised)."""
    t = np.asarray(t, dtype=float)
    if np.any((t < 0) | (t >= 1.0)):
        raise DomainError("need 0 <= |z| < 1")
    A, B, s = params.A, params.B, params.sAB
    u = 1.0 - t * t
    c = 2.0 - s * u
    inner = (A - B) * c / (u * (c - 2.0 * B * B * t * t))
    annulus = _in_annulus(params, t)
    if np.any(annulus):
        outer = abs(A * A - B * B) / (2.0 * (1.0 - params.absB * t) ** 2)
        inner = np.where(annulus, outer, inner)
    return float(inner) if np.ndim(inner) == 0 else inner


def pointwise_bound(params: JanowskiParams, z: complex) -> float:
    return float(pointwise_bound_radial(params, abs(complex(z))))


def weighted_pointwise_bound(params: JanowskiParams, t):
    """``(1 - t^2)^2`` times the pointwise bound, i.e. ``(A-B) gamma`` or ``(A-B) gamma1``."""
    t = np.asarray(t, dtype=float)
    out = (1.0 - t * t) ** 2 * np.asarray(pointwise_bound_radial(params, t))
    return float(out) if out.ndim == 0 else out


def alpha_root(params: JanowskiParams, max_iter: int = 200) -> float:
    """Unique zero of ``h`` in (0, 1), by bisection.

    ``h`` is strictly decreasing on (0, 1) with ``h(1) = -4(1-B^2) < 0``, so a
    root exists exactly when ``h(0) > 0``.
    """
    if params.B == -1.0:
        raise PreconditionError("h(1) = 0 when B = -1; no interior root")
    if h_poly(params, 0.0) <= 0.0:
        raise PreconditionError("h(0) <= 0: the gamma(alpha) branch does not apply")
    lo, hi = 0.0, 1.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if h_poly(params, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return lo if abs(h_poly(params, lo)) <= abs(h_poly(params, hi)) else hi


def e3_norm_formula(params: JanowskiParams) -> float:
    """``2|A^2 - B^2| (1 - sqrt(1-B^2))^2 / B^4``."""
    A, B = params.A, params.B
    return 2.0 * abs(A * A - B * B) * (1.0 - params.root) ** 2 / B ** 4


def norm_bound(params: JanowskiParams) -> NormBoundReport:
    region = classify(params)
    alpha = None
    if region is RegionClass.E3:
        bound, branch = e3_norm_formula(params), NormBranch.E3Formula
    elif params.B == -1.0:
        bound, branch = 2.0, NormBranch.Bm1
    elif params.sAB <= 2.0 * (1.0 - params.B ** 2):
        bound, branch = params.A - params.B, NormBranch.AminusB
    else:
        alpha = alpha_root(params)
        bound, branch = (params.A - params.B) * gamma(params, alpha), NormBranch.GammaAlpha
    qc = bound / 2.0 if bound < 2.0 else None
    return NormBoundReport(region, bound, branch, alpha, qc)
