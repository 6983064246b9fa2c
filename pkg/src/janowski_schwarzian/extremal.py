"""Extremal functions: K_{A,B}, f0 and the two-parameter family f_{z0,p,q}.

``f_{z0,p,q}`` is generated by the degree-2 Blaschke product
``phi(z) = p z (z - b) / (1 - b z)``, with ``b`` chosen so that
``|phi(z0)| = s0(|z0|)``; at ``z0`` it attains the pointwise bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bounds import deltas, pointwise_bound, s0_of
from .errors import DomainError, PreconditionError
from .params import JanowskiParams, RegionClass, classify
from .schwarz import BlaschkeProduct, SchwarzFunction
from .series import PowerSeries


class ExtremalKind(str, enum.Enum):
    K = "K"
    F0 = "F0"
    FZPQ = "FZPQ"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtremalSpec:
    kind: ExtremalKind
    z0: float | None = None
    p: int | None = None
    q: int | None = None
    b: float | None = None

    def schwarz_function(self) -> SchwarzFunction:
        if self.kind is ExtremalKind.K:
            return SchwarzFunction.identity()
        if self.kind is ExtremalKind.F0:
            return SchwarzFunction.from_zeros([0.0])
        return SchwarzFunction.from_zeros([self.b], rotation=0.0 if self.p == 1 else math.pi)


def choose_pq(params: JanowskiParams) -> tuple[int, int]:
    if params.A + params.B <= 0:
        return 1, 1
    if params.B >= 0:
        return -1, 1
    return -1, -1


def is_admissible(params: JanowskiParams, z0: float) -> bool:
    """Whether ``s0(|z0|)`` lies in ``[0, |z0|)``, so the construction applies."""
    z0 = float(z0)
    if not -1.0 < z0 < 1.0:
        return False
    if classify(params) is not RegionClass.E3:
        return True
    d1, d2 = deltas(params)
    t = abs(z0)
    return t < d1 or t > d2


def solve_b(params: JanowskiParams, z0: float) -> float:
    z0 = float(z0)
    if not -1.0 < z0 < 1.0:
        raise DomainError("z0 must be real and lie in (-1, 1)")
    if not is_admissible(params, z0):
        raise PreconditionError(f"z0={z0!r} lies in the closed annulus where s0(|z0|) >= |z0|")
    _, q = choose_pq(params)
    c = 2.0 - params.sAB * (1.0 - z0 * z0)
    num = c - 2.0 * q * params.absB
    den = c - 2.0 * q * params.absB * z0 * z0
    return z0 * num / den


def extremal_spec(params: JanowskiParams, z0: float) -> ExtremalSpec:
    p, q = choose_pq(params)
    return ExtremalSpec(ExtremalKind.FZPQ, float(z0), p, q, solve_b(params, z0))


def b_equation_residual(params: JanowskiParams, spec: ExtremalSpec) -> float:
    """``z0 (z0 - b)/(1 - b z0) - q s0(|z0|)``."""
    z0, b = spec.z0, spec.b
    return z0 * (z0 - b) / (1.0 - b * z0) - spec.q * s0_of(params, abs(z0))


def extremal_schwarzian_at_z0(params: JanowskiParams, z0: float) -> float:
    """Closed-form ``S_{f_{z0,p,q}}(z0)`` (real for real ``z0``)."""
    z0 = float(z0)
    solve_b(params, z0)  # admissibility
    p, q = choose_pq(params)
    A, B, s = params.A, params.B, params.sAB
    u = 1.0 - z0 * z0
    c = 2.0 - s * u
    num = 2.0 * q * q * B * B * z0 * z0 * (2.0 * p + (A + B) * u) - p * c * c
    den = u * (c + 2.0 * p * q * B * abs(B) * z0 * z0) ** 2
    return -(A - B) * num / den


def extremal_weighted_value(params: JanowskiParams, z0: float) -> float:
    """``(1 - z0^2)^2 |S_{f_{z0,p,q}}(z0)|``; equals the weighted pointwise bound at z0."""
    return (1.0 - z0 * z0) ** 2 * abs(extremal_schwarzian_at_z0(params, z0))


# -- power series ----------------------------------------------------------


def _psi_series(w: SchwarzFunction, order: int) -> PowerSeries:
    if w.psi is None:
        return PowerSeries.constant(0.0, order)
    z = PowerSeries.variable(order)
    out = PowerSeries.constant(np.exp(1j * w.psi.rotation), order)
    for a in w.psi.zeros:
        out = out * (z - a) / (1.0 - np.conj(a) * z)
    return out


def omega_series(w: SchwarzFunction, order: int) -> PowerSeries:
    z = PowerSeries.variable(order)
    return z * _psi_series(w, order)


def series_from_schwarz(params: JanowskiParams, w: SchwarzFunction, order: int) -> PowerSeries:
    """Taylor coefficients of the normalised ``f`` with ``1 + z f''/f' = (1 + A w)/(1 + B w)``."""
    if order < 2:
        raise ValueError("order must be at least 2")
    m = order - 2
    z = PowerSeries.variable(m)
    psi = _psi_series(w, m)
    Q = (params.A - params.B) * psi / (1.0 + params.B * z * psi)
    fprime = Q.integ().exp()
    return fprime.integ()


def K_series(params: JanowskiParams, order: int) -> PowerSeries:
    """Closed-form coefficients of ``K_{A,B}``, branch chosen by exact A == 0 / B == 0."""
    if order < 2:
        raise ValueError("order must be at least 2")
    A, B = params.A, params.B
    c = np.zeros(order + 1, dtype=complex)
    if B == 0.0:
        # (e^{Az} - 1)/A
        term = 1.0
        for n in range(1, order + 1):
            c[n] = term
            term *= A / (n + 1)
    elif A == 0.0:
        # log(1 + Bz)/B
        for n in range(1, order + 1):
            c[n] = (-1) ** (n + 1) * B ** (n - 1) / n
    else:
        # ((1 + Bz)^{A/B} - 1)/A; binom(A/B, n) B^n / A by recurrence
        g = A / B
        term = 1.0  # g * B / A
        for n in range(1, order + 1):
            c[n] = term
            term *= (g - n) / (n + 1) * B
    return PowerSeries(c)


def f0_series(params: JanowskiParams, order: int) -> PowerSeries:
    return series_from_schwarz(params, ExtremalSpec(ExtremalKind.F0).schwarz_function(), order)


def fzpq_series(params: JanowskiParams, spec: ExtremalSpec, order: int) -> PowerSeries:
    return series_from_schwarz(params, spec.schwarz_function(), order)


def subordination_residual(params: JanowskiParams, f: PowerSeries, w: SchwarzFunction) -> np.ndarray:
    """Coefficients of ``1 + z f''/f' - (1 + A w)/(1 + B w)`` through order ``f.order - 2``."""
    m = f.order - 2
    d1 = f.deriv().truncate(m)
    d2 = f.deriv().deriv()
    z = PowerSeries.variable(m)
    lhs = 1.0 + z * (d2 / d1)
    om = omega_series(w, m)
    rhs = (1.0 + params.A * om) / (1.0 + params.B * om)
    return (lhs - rhs).c


def weighted_bound_at(params: JanowskiParams, z0: float) -> float:
    return (1.0 - z0 * z0) ** 2 * pointwise_bound(params, z0)
