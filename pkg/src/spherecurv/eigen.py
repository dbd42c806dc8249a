"""Cyclic Jacobi eigendecomposition for small symmetric matrices.

Plain Jacobi is the right tool at 4x4: unconditionally stable, no complex
arithmetic, and bit-for-bit deterministic because the rotation order is fixed.
Convergence threshold is 1e-14 times the Frobenius norm, capped at 100 sweeps.
Output is fully normalized: eigenvalues ascending, each eigenvector scaled so
its first component of magnitude above 1e-12 is positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

N = 4

_SWEEP_CAP = 100
_OFF_FACTOR = 1e-14
_SIGN_EPS = 1e-12


@dataclass(frozen=True)
class SymMat4:
    """Symmetric 4x4 of floats; exact symmetry is enforced at construction."""

    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != N or any(len(r) != N for r in self.rows):
            raise ValueError("SymMat4 needs 4x4 entries")
        for i in range(N):
            for j in range(i + 1, N):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"asymmetric entries at ({i},{j})")

    @classmethod
    def from_upper(cls, upper: Sequence[float]) -> "SymMat4":
        """Build from the 10 upper-triangle entries, row-major."""
        if len(upper) != 10:
            raise ValueError("upper triangle of a 4x4 has 10 entries")
        m = [[0.0] * N for _ in range(N)]
        k = 0
        for i in range(N):
            for j in range(i, N):
                m[i][j] = float(upper[k])
                m[j][i] = float(upper[k])
                k += 1
        return cls(tuple(tuple(r) for r in m))

    def entry(self, i: int, j: int) -> float:
        return self.rows[i][j]

    def scaled(self, factor: float) -> "SymMat4":
        return SymMat4(tuple(tuple(factor * v for v in row) for row in self.rows))

    def frobenius(self) -> float:
        return math.sqrt(sum(v * v for row in self.rows for v in row))


def _off_norm(a: list[list[float]]) -> float:
    return math.sqrt(sum(a[i][j] ** 2 for i in range(N) for j in range(i + 1, N)))


def sym_eigen(m: SymMat4) -> tuple[tuple[float, ...], tuple[tuple[float, ...], ...]]:
    """Eigenvalues (ascending) and matching orthonormal eigenvectors (as rows).

    Reconstruction sum(lam_k v_k v_k^T) reproduces m to ~1e-14 of its norm.
    """
    a = [list(row) for row in m.rows]
    v = [[1.0 if i == j else 0.0 for j in range(N)] for i in range(N)]
    threshold = _OFF_FACTOR * max(m.frobenius(), 1e-300)

    for _ in range(_SWEEP_CAP):
        if _off_norm(a) <= threshold:
            break
        for p in range(N - 1):
            for q in range(p + 1, N):
                apq = a[p][q]
                if abs(apq) <= threshold * 1e-2:
                    continue
                # Classic stable rotation choice (Golub & Van Loan alg. 8.4.1)
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(N):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(N):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                for k in range(N):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq

    pairs = sorted(
        ((a[k][k], tuple(v[i][k] for i in range(N))) for k in range(N)),
        key=lambda kv: kv[0],
    )
    values = []
    vectors = []
    for lam, vec in pairs:
        for comp in vec:
            if abs(comp) > _SIGN_EPS:
                if comp < 0:
                    vec = tuple(-c for c in vec)
                break
        values.append(lam)
        vectors.append(vec)
    return tuple(values), tuple(vectors)
