"""Geometry of level hypersurfaces of the unit sphere in R^6.

A LevelSpec pairs a scalar field F with a target value c; the surface under
study is {x : |x| = 1, F(x) = c}. Everything here works with the tangential
gradient PgradF, the component of grad F orthogonal to the position vector:
points where it vanishes are focal points of the family, where the
hypersurface degenerates and no frame exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .fields import ScalarField, eval1, eval2
from .jets import N_VARS
from .rng import RngStream, draw_gaussian

FOCAL_EPS = 1e-10
_SEED_SKIP_EPS = 1e-6


class FocalPointError(ValueError):
    """Tangential gradient below threshold: the level surface is singular here."""


class ProjectionError(RuntimeError):
    """Newton projection failed to reach the requested residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class LevelSpec:
    field: ScalarField
    level: float

    def residual(self, x: Sequence[float]) -> float:
        """max of the two constraint residuals at x."""
        value = eval1(self.field, x).value
        return max(abs(_dot(x, x) - 1.0), abs(value - self.level))


@dataclass(frozen=True)
class SpherePoint:
    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != N_VARS:
            raise ValueError("points live in R^6")


@dataclass(frozen=True)
class TangentFrame:
    """Base point, unit normal inside the sphere, and orthonormal 4-frame."""

    base: SpherePoint
    normal: tuple[float, ...]
    vectors: tuple[tuple[float, ...], ...]


def _dot(a: Sequence[float], b: Sequence[float]) -> float:
    return sum(x * y for x, y in zip(a, b))


def _norm(a: Sequence[float]) -> float:
    return math.sqrt(_dot(a, a))


def _axpy(a: Sequence[float], t: float, b: Sequence[float]) -> list[float]:
    return [x + t * y for x, y in zip(a, b)]


def _tangential(vec: Sequence[float], p: Sequence[float]) -> list[float]:
    """Component of vec orthogonal to p (p assumed unit)."""
    t = _dot(vec, p)
    return [v - t * c for v, c in zip(vec, p)]


def project_to_level(
    x0: Sequence[float],
    spec: LevelSpec,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> SpherePoint:
    """Newton-project x0 onto {|x| = 1} intersect {F = level}.

    Each step solves the linearized pair of constraints inside the 2-plane
    spanned by the current position and the field gradient, with step halving
    when a full step would grow the residual. Raises ProjectionError when the
    residual target is not met and FocalPointError when the iteration lands
    where the tangential gradient vanishes.
    """
    if len(x0) != N_VARS:
        raise ValueError("start point must have 6 components")
    x = [float(c) for c in x0]
    if _norm(x) == 0.0:
        raise ValueError("cannot project the origin")

    def residuals(pt: Sequence[float]) -> tuple[float, float, tuple[float, ...]]:
        jet = eval1(spec.field, pt)
        return _dot(pt, pt) - 1.0, jet.value - spec.level, jet.grad

    c1, c2, grad = residuals(x)
    res = max(abs(c1), abs(c2))
    for _ in range(max_iter):
        if res <= tol:
            break
        # Directions: current position and field gradient.
        d1, d2 = x, grad
        a11 = 2.0 * _dot(x, d1)
        a12 = 2.0 * _dot(x, d2)
        a21 = _dot(grad, d1)
        a22 = _dot(grad, d2)
        det = a11 * a22 - a12 * a21
        norm_x = _norm(x)
        if norm_x == 0.0:
            raise ProjectionError("iterate collapsed to the origin", res)
        unit = [c / norm_x for c in x]
        tangential_grad = _norm(_tangential(grad, unit))
        if abs(det) < 1e-300 or tangential_grad < FOCAL_EPS:
            raise FocalPointError(
                f"degenerate tangential gradient ({tangential_grad:.3e}) during projection"
            )
        alpha = (-c1 * a22 + c2 * a12) / det
        beta = (-a11 * c2 + a21 * c1) / det
        step = 1.0
        for _halving in range(6):
            trial = _axpy(_axpy(x, step * alpha, d1), step * beta, d2)
            t1, t2, tgrad = residuals(trial)
            tres = max(abs(t1), abs(t2))
            if tres < res or tres <= tol:
                x, c1, c2, grad, res = trial, t1, t2, tgrad, tres
                break
            step *= 0.5
        else:
            break  # no useful step; report non-convergence below
    if res > tol:
        raise ProjectionError(
            f"projection stalled at residual {res:.3e} (target {tol:.1e})", res
        )
    return SpherePoint(tuple(x))


def surface_normal(p: SpherePoint, spec: LevelSpec) -> tuple[float, ...]:
    """Unit normal of the level surface inside the sphere: PgradF/|PgradF|."""
    grad = eval1(spec.field, p.coords).grad
    tang = _tangential(grad, p.coords)
    n = _norm(tang)
    if n < FOCAL_EPS:
        raise FocalPointError(f"tangential gradient {n:.3e} below {FOCAL_EPS:.0e}")
    return tuple(v / n for v in tang)


def tangent_basis(p: SpherePoint, normal: Sequence[float]) -> tuple[tuple[float, ...], ...]:
    """Orthonormal basis of the 4-space orthogonal to both p and the normal.

    Deterministic Gram-Schmidt over the coordinate seeds e_1..e_6 in order;
    a seed whose residual norm falls below 1e-6 is skipped, so the frame is a
    reproducible function of (p, normal).
    """
    basis: list[tuple[float, ...]] = []
    anchors = [tuple(p.coords), tuple(normal)]
    for k in range(N_VARS):
        if len(basis) == 4:
            break
        seed = [0.0] * N_VARS
        seed[k] = 1.0
        vec = seed
        for anchor in anchors + basis:
            vec = _axpy(vec, -_dot(vec, anchor), anchor)
        # second pass stabilizes near-dependent seeds
        for anchor in anchors + basis:
            vec = _axpy(vec, -_dot(vec, anchor), anchor)
        n = _norm(vec)
        if n < _SEED_SKIP_EPS:
            continue
        basis.append(tuple(v / n for v in vec))
    if len(basis) != 4:
        raise ValueError("could not complete a tangent 4-frame from coordinate seeds")
    return tuple(basis)


def frame_at(p: SpherePoint, spec: LevelSpec) -> TangentFrame:
    normal = surface_normal(p, spec)
    return TangentFrame(base=p, normal=normal, vectors=tangent_basis(p, normal))


def sample_on_sphere(stream: RngStream) -> tuple[SpherePoint, RngStream]:
    """Uniform point on the unit 5-sphere via normalized Gaussians."""
    while True:
        comps = []
        s = stream
        for _ in range(N_VARS):
            g, s = draw_gaussian(s)
            comps.append(g)
        n = _norm(comps)
        stream = s
        if n > 1e-8:
            return SpherePoint(tuple(c / n for c in comps)), stream


def sample_level_point(
    spec: LevelSpec,
    stream: RngStream,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> tuple[SpherePoint, RngStream]:
    """One random point of the level surface: sphere sample then projection."""
    start, stream = sample_on_sphere(stream)
    return project_to_level(start.coords, spec, tol=tol, max_iter=max_iter), stream
