"""Second fundamental form and curvature invariants of sphere level surfaces.

For a unit-sphere point p on {F = c} with unit tangential-gradient normal nu,
the second fundamental form against an orthonormal tangent frame {e_a} is

    h(e_a, e_b) = (HessF(e_a, e_b) - <gradF, p> delta_ab) / |PgradF|,

the intrinsic spherical Hessian of F scaled by the tangential gradient norm.
Its eigenvalues are the principal curvatures; this module turns them into the
scalar invariants used for classification (power sums, Gauss-Kronecker
product, scalar curvature, the number of distinct curvatures, and the angle
offset of the cotangent ladder when the pattern allows one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from scipy.optimize import minimize_scalar

from .eigen import SymMat4, sym_eigen
from .fields import eval2
from .rng import RngStream
from .sphere import (
    FOCAL_EPS,
    FocalPointError,
    LevelSpec,
    ProjectionError,
    SpherePoint,
    TangentFrame,
    frame_at,
    sample_level_point,
)

VERDICTS = ("equator", "clifford_1_3", "clifford_2_2", "cartan", "non_isoparametric", "inconclusive")


@dataclass(frozen=True)
class SweepTolerances:
    """Thresholds used by sweep classification."""

    f1_tol: float = 1e-8      # max |mean curvature * 4| treated as minimal
    s_tol: float = 1e-6       # allowed deviation of S from a catalog value
    cluster_tol: float = 1e-4  # eigenvalue gap that separates distinct curvatures
    projection_tol: float = 1e-12
    max_failure_fraction: float = 0.10


@dataclass(frozen=True)
class CurvatureReport:
    """Principal-curvature invariants at one surface point.

    lambdas are ascending. distinct/multiplicities are ordered by descending
    curvature value, matching the lambda_1 > ... > lambda_g convention of the
    cotangent ladder cot(theta0 + (k-1)pi/g).
    """

    point: tuple[float, ...]
    lambdas: tuple[float, float, float, float]
    f1: float
    f2: float
    f3: float
    f4: float
    S: float
    K: float
    R: float
    g: int
    distinct: tuple[float, ...]
    multiplicities: tuple[int, ...]
    theta0: float | None = None
    theta0_residual: float | None = None


@dataclass(frozen=True)
class SurfaceStats:
    """Aggregate of a random sweep over one level surface."""

    n_points: int
    n_failures: int
    max_abs_f1: float
    s_mean: float
    s_min: float
    s_max: float
    f3_mean: float
    f3_spread: float
    g_histogram: dict[int, int]
    theta0_mean: float | None
    verdict: str
    failure_samples: tuple[str, ...] = field(default=())


def second_form(spec: LevelSpec, frame: TangentFrame) -> SymMat4:
    """Second fundamental form matrix in the given tangent frame.

    Orientation follows the +tangential-gradient normal; flipping the normal
    negates the matrix.
    """
    p = frame.base.coords
    jet = eval2(spec.field, p)
    gp = sum(g * c for g, c in zip(jet.grad, p))
    tang = [g - gp * c for g, c in zip(jet.grad, p)]
    nt = math.sqrt(sum(t * t for t in tang))
    if nt < FOCAL_EPS:
        raise FocalPointError(f"tangential gradient {nt:.3e} below {FOCAL_EPS:.0e}")
    upper = []
    for a in range(4):
        ea = frame.vectors[a]
        for b in range(a, 4):
            eb = frame.vectors[b]
            val = jet.hess_bilinear(ea, eb)
            if a == b:
                val -= gp
            upper.append(val / nt)
    return SymMat4.from_upper(upper)


def _cluster(ascending: Sequence[float], cluster_tol: float) -> list[list[float]]:
    groups: list[list[float]] = [[ascending[0]]]
    for v in ascending[1:]:
        if v - groups[-1][-1] <= cluster_tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return groups


def fit_theta0(distinct: Sequence[float], g: int | None = None) -> tuple[float, float]:
    """Least-squares angle offset for lambda_k = cot((k-1)pi/g + theta0).

    `distinct` holds the distinct curvature values in strictly descending
    order. Returns (theta0, residual) where residual is the root of the
    summed squared misfit. For g = 1 the ladder is the single value
    cot(theta0) = 0, so theta0 = pi/2 and the residual is |lambda|.
    """
    vals = [float(v) for v in distinct]
    if g is None:
        g = len(vals)
    if g != len(vals):
        raise ValueError(f"need exactly g={g} distinct values, got {len(vals)}")
    if any(a <= b for a, b in zip(vals, vals[1:])):
        raise ValueError("distinct curvatures must be strictly descending")
    if g == 1:
        return math.pi / 2, abs(vals[0])

    step = math.pi / g

    def misfit(theta: float) -> float:
        acc = 0.0
        for k, lam in enumerate(vals):
            angle = theta + k * step
            acc += (lam - math.cos(angle) / math.sin(angle)) ** 2
        return acc

    # Coarse scan pins the basin; bounded Brent polishes inside it; Newton on
    # the analytic derivative removes the optimizer's ~1e-10 stopping error.
    lo, hi = 1e-9, step - 1e-9
    n_grid = 256
    best_k = min(range(n_grid + 1), key=lambda k: misfit(lo + (hi - lo) * k / n_grid))
    width = (hi - lo) / n_grid
    center = lo + width * best_k
    res = minimize_scalar(
        misfit,
        bounds=(max(lo, center - 2 * width), min(hi, center + 2 * width)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    theta = float(res.x)
    for _ in range(5):
        d1 = d2 = 0.0
        for k, lam in enumerate(vals):
            angle = theta + k * step
            s, c = math.sin(angle), math.cos(angle)
            gap = lam - c / s
            d1 += 2.0 * gap / (s * s)
            d2 += 2.0 / (s * s * s * s) + 4.0 * gap * c / (s * s * s)
        if d2 <= 0.0:
            break
        delta = d1 / d2
        candidate = theta - delta
        if not lo < candidate < hi:
            break
        theta = candidate
        if abs(delta) < 1e-15:
            break
    return theta, math.sqrt(misfit(theta))


def curvature_report(
    spec: LevelSpec,
    point: SpherePoint,
    cluster_tol: float = 1e-4,
) -> CurvatureReport:
    """All curvature invariants of the level surface at one point."""
    frame = frame_at(point, spec)
    h = second_form(spec, frame)
    lambdas, _vectors = sym_eigen(h)
    f1 = lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3]
    f2 = sum(v * v for v in lambdas)
    f3 = sum(v**3 for v in lambdas)
    f4 = sum(v**4 for v in lambdas)
    S = f2
    K = lambdas[0] * lambdas[1] * lambdas[2] * lambdas[3]
    R = 12.0 + f1 * f1 - S

    groups = _cluster(lambdas, cluster_tol)
    distinct_desc = tuple(sum(grp) / len(grp) for grp in reversed(groups))
    mults_desc = tuple(len(grp) for grp in reversed(groups))
    g = len(groups)

    theta0 = residual = None
    ladder_pattern = g in (1, 2) or (g == 4 and mults_desc == (1, 1, 1, 1))
    if ladder_pattern:
        theta0, residual = fit_theta0(distinct_desc, g)

    return CurvatureReport(
        point=point.coords,
        lambdas=lambdas,
        f1=f1,
        f2=f2,
        f3=f3,
        f4=f4,
        S=S,
        K=K,
        R=R,
        g=g,
        distinct=distinct_desc,
        multiplicities=mults_desc,
        theta0=theta0,
        theta0_residual=residual,
    )


class _Kahan:
    """Compensated accumulator so aggregation order does not leak into sums."""

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, x: float) -> None:
        y = x - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t


def _sweep_chunk(
    spec: LevelSpec,
    seed: int,
    start: int,
    stop: int,
    tols: SweepTolerances,
) -> list[tuple]:
    """Per-point results for indices [start, stop); pure and order-stable.

    Every index derives its own child stream from the root seed, so the
    result is identical however the index range is partitioned.
    """
    root = RngStream(seed)
    out: list[tuple] = []
    for idx in range(start, stop):
        stream = root.split(idx)
        try:
            point, _ = sample_level_point(
                spec, stream, tol=tols.projection_tol, max_iter=50
            )
            rep = curvature_report(spec, point, cluster_tol=tols.cluster_tol)
        except (FocalPointError, ProjectionError) as exc:
            out.append((idx, False, f"point {idx}: {exc}"))
            continue
        out.append(
            (idx, True, rep.f1, rep.S, rep.f3, rep.g, rep.multiplicities, rep.theta0)
        )
    return out


def _classify(
    ok_rows: list[tuple],
    max_abs_f1: float,
    tols: SweepTolerances,
) -> str:
    if not ok_rows:
        return "inconclusive"
    if max_abs_f1 > tols.f1_tol:
        return "non_isoparametric"
    signatures = {(row[5], tuple(sorted(row[6]))) for row in ok_rows}
    if len(signatures) != 1:
        return "inconclusive"
    (g, mults), = signatures
    s_values = [row[3] for row in ok_rows]

    def s_close(target: float) -> bool:
        return all(abs(s - target) <= tols.s_tol for s in s_values)

    if g == 1 and s_close(0.0):
        return "equator"
    if g == 2 and mults == (1, 3) and s_close(4.0):
        return "clifford_1_3"
    if g == 2 and mults == (2, 2) and s_close(4.0):
        return "clifford_2_2"
    if g == 4 and mults == (1, 1, 1, 1) and s_close(12.0):
        return "cartan"
    return "inconclusive"


def sweep_analyze(
    spec: LevelSpec,
    n: int,
    seed: int,
    tols: SweepTolerances | None = None,
    workers: int = 1,
) -> SurfaceStats:
    """Sample n surface points and aggregate their curvature invariants.

    Raises RuntimeError when more than tols.max_failure_fraction of the
    projections fail; individual failures below that are counted and the
    first few messages kept.
    """
    if n < 1:
        raise ValueError("need at least one sample")
    tols = tols or SweepTolerances()

    if workers <= 1:
        rows = _sweep_chunk(spec, seed, 0, n, tols)
    else:
        from concurrent.futures import ProcessPoolExecutor

        bounds = [(n * w // workers, n * (w + 1) // workers) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _sweep_chunk,
                    [spec] * workers,
                    [seed] * workers,
                    [b[0] for b in bounds],
                    [b[1] for b in bounds],
                    [tols] * workers,
                )
            )
        rows = [row for part in parts for row in part]
    rows.sort(key=lambda r: r[0])

    ok_rows = [r for r in rows if r[1]]
    failures = [r for r in rows if not r[1]]
    if len(failures) > tols.max_failure_fraction * n:
        raise RuntimeError(
            f"{len(failures)}/{n} projections failed; first: {failures[0][2]}"
        )
    if not ok_rows:
        raise RuntimeError("no surface point could be sampled")

    max_abs_f1 = max(abs(r[2]) for r in ok_rows)
    s_sum, f3_sum, theta_sum = _Kahan(), _Kahan(), _Kahan()
    s_min = math.inf
    s_max = -math.inf
    f3_min = math.inf
    f3_max = -math.inf
    hist: dict[int, int] = {}
    n_theta = 0
    for r in ok_rows:
        _, _, _f1, s, f3, g, _mults, theta0 = r
        s_sum.add(s)
        f3_sum.add(f3)
        s_min = min(s_min, s)
        s_max = max(s_max, s)
        f3_min = min(f3_min, f3)
        f3_max = max(f3_max, f3)
        hist[g] = hist.get(g, 0) + 1
        if theta0 is not None:
            theta_sum.add(theta0)
            n_theta += 1

    return SurfaceStats(
        n_points=len(ok_rows),
        n_failures=len(failures),
        max_abs_f1=max_abs_f1,
        s_mean=s_sum.total / len(ok_rows),
        s_min=s_min,
        s_max=s_max,
        f3_mean=f3_sum.total / len(ok_rows),
        f3_spread=f3_max - f3_min,
        g_histogram=dict(sorted(hist.items())),
        theta0_mean=(theta_sum.total / n_theta) if n_theta else None,
        verdict=_classify(ok_rows, max_abs_f1, tols),
        failure_samples=tuple(r[2] for r in failures[:3]),
    )
