"""Truncated power series with complex coefficients.

Only the operations needed to integrate ``f''/f' = Q`` are provided: ring
arithmetic, reciprocal, derivative, integral from 0, exp and log. All results
keep the order of the shortest operand; coefficients beyond it are unknown,
not zero.
"""

from __future__ import annotations

import numpy as np


class PowerSeries:
    """Coefficients ``c[0..N]`` of ``c0 + c1 z + ... + cN z^N``."""

    __array_priority__ = 100

    def __init__(self, coeffs, order: int | None = None):
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        out = np.zeros(order + 1, dtype=complex)
        n = min(len(c), order + 1)
        out[:n] = c[:n]
        self.c = out

    @property
    def order(self) -> int:
        return len(self.c) - 1

    @classmethod
    def constant(cls, value, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "PowerSeries":
        return cls([0.0, 1.0], order)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i]

    def __repr__(self):
        return f"PowerSeries({self.c!r})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.c, min(order, self.order))

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __neg__(self):
        return PowerSeries(-self.c)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return PowerSeries(self.c[:n] + other.c[:n])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.c * complex(other))
        n = min(self.order, other.order) + 1
        return PowerSeries(np.convolve(self.c[:n], other.c[:n])[:n])

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        c = self.c
        if c[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        out = np.zeros_like(c)
        out[0] = 1.0 / c[0]
        for n in range(1, len(c)):
            out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1][:n]) / c[0]
        return PowerSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.c / complex(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def deriv(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([0.0], 0)
        n = np.arange(1, len(self.c))
        return PowerSeries(self.c[1:] * n)

    def integ(self) -> "PowerSeries":
        """Antiderivative vanishing at 0; the order goes up by one."""
        out = np.zeros(len(self.c) + 1, dtype=complex)
        out[1:] = self.c / np.arange(1, len(self.c) + 1)
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        # g = exp(h)  =>  n g_n = sum_{k=1..n} k h_k g_{n-k}
        h = self.c
        g = np.zeros_like(h)
        g[0] = np.exp(h[0])
        kh = np.arange(len(h)) * h
        for n in range(1, len(h)):
            g[n] = np.dot(kh[1 : n + 1], g[n - 1 :: -1][:n]) / n
        return PowerSeries(g)

    def log(self) -> "PowerSeries":
        if self.c[0] == 0:
            raise ZeroDivisionError("log of a series with zero constant term")
        d = (self.deriv() / self.truncate(self.order - 1)).integ()
        d.c[0] = np.log(self.c[0])
        return d

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.c)
