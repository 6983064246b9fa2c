"""Schwarzian derivatives of functions in C(A, B).

A function in the class satisfies ``1 + z f''/f' = (1 + A w)/(1 + B w)`` for a
Schwarz function ``w``. Writing ``w = z psi`` gives ``f''/f' = (A-B) psi / (1 + B z psi)``
and hence

    S_f(z) = (A - B) (psi'(z) - (A + B) psi(z)^2 / 2) / (1 + B z psi(z))^2,

which is regular at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .params import JanowskiParams
from .schwarz import SchwarzFunction


@dataclass(frozen=True)
class SchwarzianSample:
    z: complex
    value: complex
    weighted: float

    def to_json(self) -> dict:
        return {
            "z": [self.z.real, self.z.imag],
            "S": [self.value.real, self.value.imag],
            "weighted": self.weighted,
        }


def _check_disk(z) -> None:
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("z must lie in the open unit disk")


def _sample(z, value) -> SchwarzianSample:
    z = complex(z)
    value = complex(value)
    return SchwarzianSample(z, value, (1.0 - abs(z) ** 2) ** 2 * abs(value))


def schwarzian_values(params: JanowskiParams, w: SchwarzFunction, z):
    """Vectorised ``S_f(z)`` for arrays of points."""
    z = np.asarray(z, dtype=complex)
    _check_disk(z)
    A, B = params.A, params.B
    psi = np.asarray(w.psi_value(z))
    dpsi = np.asarray(w.psi_deriv(z))
    return (A - B) * (dpsi - 0.5 * (A + B) * psi * psi) / (1.0 + B * z * psi) ** 2


def weighted_schwarzian(params: JanowskiParams, w: SchwarzFunction, z):
    """``(1-|z|^2)^2 |S_f(z)|`` for arrays of points."""
    z = np.asarray(z, dtype=complex)
    return (1.0 - np.abs(z) ** 2) ** 2 * np.abs(schwarzian_values(params, w, z))


def schwarzian(params: JanowskiParams, w: SchwarzFunction, z: complex) -> SchwarzianSample:
    return _sample(z, schwarzian_values(params, w, complex(z)))


def schwarzian_two_term(params: JanowskiParams, w: SchwarzFunction, z: complex) -> complex:
    """The unregularised form in terms of ``w`` and ``zeta = w' - w/z``; needs ``z != 0``."""
    z = complex(z)
    if z == 0:
        raise DomainError("the two-term form is singular at z = 0")
    _check_disk(z)
    A, B = params.A, params.B
    wz = complex(w(z))
    zeta = complex(w.deriv(z)) - wz / z
    den = (1.0 + B * wz) ** 2
    return (A - B) * (-(A + B) * wz * wz / (2.0 * z * z * den) + zeta / (z * den))


def schwarzian_of_K(params: JanowskiParams, z: complex) -> SchwarzianSample:
    """``S = -(A^2 - B^2) / (2 (1 + B z)^2)``."""
    _check_disk(z)
    A, B = params.A, params.B
    z = complex(z)
    return _sample(z, -(A * A - B * B) / (2.0 * (1.0 + B * z) ** 2))


def schwarzian_of_f0(params: JanowskiParams, z: complex) -> SchwarzianSample:
    """``S = (A-B)(2 - (A+B) z^2) / (2 (1 + B z^2)^2)``, the case ``w = z^2``."""
    _check_disk(z)
    A, B = params.A, params.B
    z = complex(z)
    return _sample(z, (A - B) * (2.0 - (A + B) * z * z) / (2.0 * (1.0 + B * z * z) ** 2))
