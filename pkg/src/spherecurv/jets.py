"""Second-order forward-mode derivative scalars over R^6.

A Jet2 carries a value, the full 6-gradient, and the symmetric 6x6 Hessian
stored as its upper triangle (21 entries), propagated by exact product and
chain rules. The arithmetic is written once over plain Python numbers, so the
same code path is exact when fed Fractions and runs at machine precision when
fed floats. Jet1 is the first-order restriction used where Hessians are not
needed (constraint projection), at a fraction of the cost.

No division is defined: the scalar fields evaluated through jets are
polynomials, and keeping the ring operations only keeps the exact mode exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

N_VARS = 6
_HESS_LEN = N_VARS * (N_VARS + 1) // 2

# Upper-triangle layout: row i holds columns i..5.
_UIDX = [[0] * N_VARS for _ in range(N_VARS)]
_k = 0
for _i in range(N_VARS):
    for _j in range(_i, N_VARS):
        _UIDX[_i][_j] = _k
        _UIDX[_j][_i] = _k
        _k += 1

_ZERO_GRAD = (0,) * N_VARS
_ZERO_HESS = (0,) * _HESS_LEN


@dataclass(frozen=True)
class Jet2:
    """Value, gradient, and upper-triangular Hessian of a scalar at a point."""

    value: object
    grad: tuple
    hess: tuple  # upper triangle, row-major, length 21

    def hess_entry(self, i: int, j: int):
        return self.hess[_UIDX[i][j]]

    def hess_matrix(self) -> list[list]:
        return [[self.hess[_UIDX[i][j]] for j in range(N_VARS)] for i in range(N_VARS)]

    def hess_bilinear(self, u: Sequence, v: Sequence):
        """u^T H v using the triangular storage directly."""
        acc = 0
        for i in range(N_VARS):
            row = _UIDX[i]
            ui = u[i]
            acc += self.hess[row[i]] * ui * v[i]
            for j in range(i + 1, N_VARS):
                acc += self.hess[row[j]] * (ui * v[j] + u[j] * v[i])
        return acc

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.value + other.value,
                tuple(a + b for a, b in zip(self.grad, other.grad)),
                tuple(a + b for a, b in zip(self.hess, other.hess)),
            )
        return Jet2(self.value + other, self.grad, self.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, tuple(-g for g in self.grad), tuple(-h for h in self.hess))

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.value - other.value,
                tuple(a - b for a, b in zip(self.grad, other.grad)),
                tuple(a - b for a, b in zip(self.hess, other.hess)),
            )
        return Jet2(self.value - other, self.grad, self.hess)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return Jet2(
                self.value * other,
                tuple(g * other for g in self.grad),
                tuple(h * other for h in self.hess),
            )
        av, bv = self.value, other.value
        ag, bg = self.grad, other.grad
        grad = tuple(av * bg[k] + bv * ag[k] for k in range(N_VARS))
        hess = []
        k = 0
        for i in range(N_VARS):
            agi, bgi = ag[i], bg[i]
            for j in range(i, N_VARS):
                hess.append(
                    av * other.hess[k] + bv * self.hess[k] + agi * bg[j] + bgi * ag[j]
                )
                k += 1
        return Jet2(av * bv, grad, tuple(hess))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers are nonnegative integers")
        if n == 0:
            return jet_constant(1)
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc


def jet_constant(c) -> Jet2:
    return Jet2(c, _ZERO_GRAD, _ZERO_HESS)


def jet_variable(x, index: int) -> Jet2:
    """Seed jet for coordinate `index` at value x."""
    grad = list(_ZERO_GRAD)
    grad[index] = 1
    return Jet2(x, tuple(grad), _ZERO_HESS)


@dataclass(frozen=True)
class Jet1:
    """First-order jet: value and gradient only."""

    value: object
    grad: tuple

    def __add__(self, other):
        if isinstance(other, Jet1):
            return Jet1(self.value + other.value, tuple(a + b for a, b in zip(self.grad, other.grad)))
        return Jet1(self.value + other, self.grad)

    __radd__ = __add__

    def __neg__(self):
        return Jet1(-self.value, tuple(-g for g in self.grad))

    def __sub__(self, other):
        if isinstance(other, Jet1):
            return Jet1(self.value - other.value, tuple(a - b for a, b in zip(self.grad, other.grad)))
        return Jet1(self.value - other, self.grad)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet1):
            return Jet1(self.value * other, tuple(g * other for g in self.grad))
        av, bv = self.value, other.value
        return Jet1(av * bv, tuple(av * bg + bv * ag for ag, bg in zip(self.grad, other.grad)))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers are nonnegative integers")
        if n == 0:
            return Jet1(1, _ZERO_GRAD)
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc


def jet1_constant(c) -> Jet1:
    return Jet1(c, _ZERO_GRAD)


def jet1_variable(x, index: int) -> Jet1:
    grad = list(_ZERO_GRAD)
    grad[index] = 1
    return Jet1(x, tuple(grad))
