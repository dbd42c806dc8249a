"""Scalar field specifications on R^6 and their jet evaluation.

Three kinds cover everything the package studies:

  coordinate   F(x) = x_i, the linear height function whose zero level on the
               sphere is a great 4-sphere
  quartic      F(x) = (x1^2 + x2^2 + x3^2 - x4^2 - x5^2 - x6^2)^2
                      + 4 (x1 x4 + x2 x5 + x3 x6)^2,
               the degree-4 form whose sphere levels are the classical
               homogeneous family with four distinct curvatures
  polynomial   arbitrary polynomial given by an exponent-tuple table

Evaluation goes through jets, so one code path yields value, gradient and
Hessian, exactly for rational points and to machine precision for floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .jets import (
    N_VARS,
    Jet1,
    Jet2,
    jet1_constant,
    jet1_variable,
    jet_constant,
    jet_variable,
)

COORDINATE = "coordinate"
CARTAN_QUARTIC = "cartan_quartic"
POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class ScalarField:
    """Declarative field description; evaluation never mutates it."""

    kind: str
    index: int | None = None
    coeffs: tuple[tuple[tuple[int, ...], Fraction], ...] = field(default=())

    def describe(self) -> dict:
        """JSON-friendly summary used in reports."""
        out: dict = {"kind": self.kind}
        if self.kind == COORDINATE:
            out["index"] = self.index
        if self.kind == POLYNOMIAL:
            out["terms"] = len(self.coeffs)
        return out


def coordinate_field(index: int) -> ScalarField:
    if not 0 <= index < N_VARS:
        raise ValueError(f"coordinate index out of range: {index}")
    return ScalarField(kind=COORDINATE, index=index)


def cartan_field() -> ScalarField:
    return ScalarField(kind=CARTAN_QUARTIC)


def polynomial_field(coeffs: Mapping[tuple[int, ...], Fraction | int]) -> ScalarField:
    """Polynomial from {exponent 6-tuple: coefficient}. Zero terms are dropped."""
    norm = []
    for exps, c in sorted(coeffs.items()):
        if len(exps) != N_VARS or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple: {exps}")
        c = Fraction(c)
        if c != 0:
            norm.append((tuple(int(e) for e in exps), c))
    return ScalarField(kind=POLYNOMIAL, coeffs=tuple(norm))


def polynomial_product(f: ScalarField, g: ScalarField) -> ScalarField:
    """Exact product of two polynomial fields (coefficient convolution)."""
    if f.kind != POLYNOMIAL or g.kind != POLYNOMIAL:
        raise ValueError("polynomial_product needs polynomial fields")
    acc: dict[tuple[int, ...], Fraction] = {}
    for ef, cf in f.coeffs:
        for eg, cg in g.coeffs:
            key = tuple(a + b for a, b in zip(ef, eg))
            acc[key] = acc.get(key, Fraction(0)) + cf * cg
    return polynomial_field(acc)


def _check_point(x) -> None:
    if len(x) != N_VARS:
        raise ValueError(f"point must have {N_VARS} components, got {len(x)}")
    for c in x:
        if isinstance(c, float) and not math.isfinite(c):
            raise ValueError("non-finite point component")


def _evaluate(spec: ScalarField, vars_, const):
    if spec.kind == COORDINATE:
        return vars_[spec.index]
    if spec.kind == CARTAN_QUARTIC:
        a = vars_[0] ** 2 + vars_[1] ** 2 + vars_[2] ** 2 \
            - vars_[3] ** 2 - vars_[4] ** 2 - vars_[5] ** 2
        b = vars_[0] * vars_[3] + vars_[1] * vars_[4] + vars_[2] * vars_[5]
        return a * a + 4 * (b * b)
    if spec.kind == POLYNOMIAL:
        acc = const(0)
        for exps, c in spec.coeffs:
            term = const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * vars_[i] ** e
            acc = acc + term
        return acc
    raise ValueError(f"unknown field kind: {spec.kind}")


def eval2(spec: ScalarField, x) -> Jet2:
    """Full second-order jet of the field at x (6 floats or Fractions)."""
    _check_point(x)
    vars_ = [jet_variable(c, i) for i, c in enumerate(x)]
    return _evaluate(spec, vars_, jet_constant)


def eval1(spec: ScalarField, x) -> Jet1:
    """Value and gradient only; used in projection inner loops."""
    _check_point(x)
    vars_ = [jet1_variable(c, i) for i, c in enumerate(x)]
    return _evaluate(spec, vars_, jet1_constant)
