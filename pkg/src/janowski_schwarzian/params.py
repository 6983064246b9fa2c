"""Janowski parameter pairs and the E1/E2/E3 partition of the admissible set.

The admissible set is ``-1 <= B < A <= 1``. Which closed-form bound applies
depends only on ``|A+B|`` and ``|B|`` through the partition

* E1: ``1 - sqrt(1-B^2) < |A+B| < 1 + sqrt(1-B^2)``
* E2: ``|A+B| <= 1 - sqrt(1-B^2)`` and ``|A+B| <= |B|``
* E3: ``|A+B| >= 1 + sqrt(1-B^2)`` and ``|A+B| > |B|``
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class RegionClass(str, enum.Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class JanowskiParams:
    """A validated pair ``(A, B)``; build it with :func:`validate`."""

    A: float
    B: float

    @property
    def sAB(self) -> float:
        """``|A+B|``."""
        return abs(self.A + self.B)

    @property
    def root(self) -> float:
        """``sqrt(1-B^2)``."""
        return math.sqrt(max(0.0, 1.0 - self.B * self.B))

    @property
    def absB(self) -> float:
        return abs(self.B)


def validate(A: float, B: float) -> JanowskiParams:
    """Return ``JanowskiParams(A, B)`` or raise :class:`DomainError`."""
    A = float(A)
    B = float(B)
    if math.isnan(A) or math.isnan(B):
        raise DomainError("A and B must be real numbers")
    if A > 1.0:
        raise DomainError(f"A={A!r} exceeds 1")
    if B < -1.0:
        raise DomainError(f"B={B!r} is below -1")
    if not B < A:
        raise DomainError(f"need B < A, got A={A!r}, B={B!r}")
    return JanowskiParams(A, B)


def classify_from(sAB: float, absB: float) -> RegionClass:
    """Classify using only ``|A+B|`` and ``|B|``."""
    root = math.sqrt(max(0.0, 1.0 - absB * absB))
    if 1.0 - root < sAB < 1.0 + root:
        return RegionClass.E1
    if sAB <= absB:
        return RegionClass.E2
    return RegionClass.E3


def classify(params: JanowskiParams) -> RegionClass:
    return classify_from(params.sAB, params.absB)


def in_E1(params: JanowskiParams) -> bool:
    return 1.0 - params.root < params.sAB < 1.0 + params.root


def in_E2(params: JanowskiParams) -> bool:
    return params.sAB <= 1.0 - params.root and params.sAB <= params.absB


def in_E3(params: JanowskiParams) -> bool:
    return params.sAB >= 1.0 + params.root and params.sAB > params.absB
