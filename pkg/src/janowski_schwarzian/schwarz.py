"""Finite Blaschke products and Schwarz functions ``omega(z) = z * psi(z)``.

Everything here accepts scalars or numpy arrays of complex points and is
evaluated in closed form; derivatives come from the product rule applied to
the factors ``(z - a) / (1 - conj(a) z)`` whose derivative is
``(1 - |a|^2) / (1 - conj(a) z)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class BlaschkeProduct:
    """``exp(i*rotation) * prod_j (z - a_j) / (1 - conj(a_j) z)``."""

    rotation: float = 0.0
    zeros: tuple[complex, ...] = ()

    def __post_init__(self):
        zs = tuple(complex(a) for a in self.zeros)
        if any(abs(a) >= 1.0 for a in zs):
            raise DomainError("Blaschke zeros must lie in the open unit disk")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "rotation", float(self.rotation))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return eval_blaschke(self, z)

    def deriv(self, z):
        return eval_blaschke_deriv(self, z)


def eval_blaschke(b: BlaschkeProduct, z):
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, np.exp(1j * b.rotation), dtype=complex)
    for a in b.zeros:
        out = out * (z - a) / (1.0 - np.conj(a) * z)
    return out[()] if out.ndim == 0 else out


def eval_blaschke_deriv(b: BlaschkeProduct, z):
    # B'/B = sum_j (1-|a_j|^2) / ((z-a_j)(1-conj(a_j) z)); the factor-wise
    # product rule below avoids dividing by B at its zeros.
    z = np.asarray(z, dtype=complex)
    factors = [(z - a) / (1.0 - np.conj(a) * z) for a in b.zeros]
    dfactors = [(1.0 - abs(a) ** 2) / (1.0 - np.conj(a) * z) ** 2 for a in b.zeros]
    out = np.zeros(z.shape, dtype=complex)
    for j in range(len(factors)):
        term = dfactors[j]
        for k, fk in enumerate(factors):
            if k != j:
                term = term * fk
        out = out + term
    out = out * np.exp(1j * b.rotation)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class SchwarzFunction:
    """``omega(z) = z * psi(z)``; ``psi=None`` stands for the zero function."""

    psi: BlaschkeProduct | None = field(default_factory=BlaschkeProduct)

    @classmethod
    def zero(cls) -> "SchwarzFunction":
        return cls(psi=None)

    @classmethod
    def identity(cls) -> "SchwarzFunction":
        return cls(psi=BlaschkeProduct())

    @classmethod
    def from_zeros(cls, zeros, rotation: float = 0.0) -> "SchwarzFunction":
        return cls(psi=BlaschkeProduct(rotation, tuple(zeros)))

    @property
    def is_zero(self) -> bool:
        return self.psi is None

    @property
    def blaschke_degree(self) -> int:
        """Degree of omega itself as a Blaschke product (0 for omega == 0)."""
        return 0 if self.psi is None else self.psi.degree + 1

    def psi_value(self, z):
        if self.psi is None:
            z = np.asarray(z, dtype=complex)
            return np.zeros(z.shape, dtype=complex)[()]
        return eval_blaschke(self.psi, z)

    def psi_deriv(self, z):
        if self.psi is None:
            z = np.asarray(z, dtype=complex)
            return np.zeros(z.shape, dtype=complex)[()]
        return eval_blaschke_deriv(self.psi, z)

    def __call__(self, z):
        return eval_omega(self, z)

    def deriv(self, z):
        return eval_omega_deriv(self, z)


def eval_omega(w: SchwarzFunction, z):
    z = np.asarray(z, dtype=complex)
    out = z * w.psi_value(z)
    return out[()] if np.ndim(out) == 0 else out


def eval_omega_deriv(w: SchwarzFunction, z):
    z = np.asarray(z, dtype=complex)
    out = w.psi_value(z) + z * w.psi_deriv(z)
    return out[()] if np.ndim(out) == 0 else out


def dieudonne_gap(w: SchwarzFunction, z0: complex) -> tuple[float, float]:
    """Both sides of the Dieudonne inequality at ``z0``.

    ``lhs = |omega'(z0) - omega(z0)/z0|`` and
    ``rhs = (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2))``; for any Schwarz
    function ``lhs <= rhs``, with equality exactly for Blaschke products of
    degree 2.
    """
    z0 = complex(z0)
    r = abs(z0)
    if r == 0.0 or r >= 1.0:
        raise DomainError("need 0 < |z0| < 1")
    wz = complex(eval_omega(w, z0))
    dw = complex(eval_omega_deriv(w, z0))
    lhs = abs(dw - wz / z0)
    rhs = (r * r - abs(wz) ** 2) / (r * (1.0 - r * r))
    return lhs, rhs


def random_blaschke(degree: int, rng: np.random.Generator, radius: float = 0.95) -> BlaschkeProduct:
    """Zeros uniform (by area) in ``|a| <= radius``, rotation uniform in [0, 2pi)."""
    if degree < 0:
        raise DomainError("degree must be non-negative")
    rotation = rng.uniform(0.0, 2.0 * np.pi)
    rad = radius * np.sqrt(rng.uniform(0.0, 1.0, degree))
    ang = rng.uniform(0.0, 2.0 * np.pi, degree)
    zeros = tuple(complex(a) for a in rad * np.exp(1j * ang))
    return BlaschkeProduct(rotation, zeros)


def random_schwarz(degree: int, seed: int) -> SchwarzFunction:
    """Random ``omega = z * psi`` with ``psi`` a Blaschke product of the given degree."""
    rng = np.random.default_rng(seed)
    return SchwarzFunction(random_blaschke(degree, rng))
