"""Exact rational verification of the curvature-constraint algebra.

Context: a minimal hypersurface of S^5 with constant scalar invariants and
four principal curvature functions lambda_1 < ... < lambda_4. The classifying
argument runs through a chain of algebraic identities in the curvatures and
the symmetric derivative components h_abc; each identity is implemented here
over Fraction so it can be checked with zero rounding error at random
rational inputs.

Index conventions (0-based internally, matching the docstrings' 1-based math):

  diag[i][l]  = h_iil, the repeated-index components; column l satisfies
                sum_i h_iil = sum_i lam_i h_iil = sum_i lam_i^2 h_iil = 0
  mixed       = (h_123, h_124, h_134, h_234), the fully mixed components
  K_l         = sum_i h_iil prod_{j != i} lam_j, the derivative of the
                Gauss-Kronecker product along direction l
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

import mpmath as mp

from .exact import RationalLike, Surd, as_rational, matrix_rank, solve_linear
from .rng import RngStream, draw_int, draw_rational

Quad = tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Quadruple:
    """Strictly increasing quadruple of exact curvature values."""

    lam: Quad

    def __post_init__(self) -> None:
        vals = tuple(as_rational(v) for v in self.lam)
        if len(vals) != 4:
            raise ValueError("a quadruple has four entries")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values must be strictly increasing: {vals}")
        object.__setattr__(self, "lam", vals)


_MIXED_KEYS = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


@dataclass(frozen=True)
class DerivativeTable:
    """Curvatures plus the free derivative data (K column gains and mixed h)."""

    lam: Quadruple
    K: Quad
    mixed: Quad  # h_123, h_124, h_134, h_234

    def __post_init__(self) -> None:
        object.__setattr__(self, "K", tuple(as_rational(v) for v in self.K))
        object.__setattr__(self, "mixed", tuple(as_rational(v) for v in self.mixed))
        if len(self.K) != 4 or len(self.mixed) != 4:
            raise ValueError("K and mixed each have four entries")

    @cached_property
    def diag(self) -> tuple[tuple[Fraction, ...], ...]:
        return diag_from_K(self.lam, self.K)

    def mixed_component(self, a: int, b: int, c: int) -> Fraction:
        key = tuple(sorted((a, b, c)))
        return self.mixed[_MIXED_KEYS.index(key)]


# ---------------------------------------------------------------------------
# Two distinct curvatures


def g2_solve(k: int, S: RationalLike) -> tuple[tuple[Surd, Surd], tuple[Surd, Surd]]:
    """Exact solutions of {k lam + (4-k) mu = 0, k lam^2 + (4-k) mu^2 = S}.

    k is the multiplicity of lam. Returns the two sign branches
    ((lam, mu), (-lam, -mu)) as surds sharing the square-free part of
    k(4-k)S as radicand, with lam > 0 in the first branch. S = 0 would force
    lam = mu = 0, a degenerate pair, and is rejected.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"multiplicity k must be 1, 2 or 3, got {k}")
    S = as_rational(S)
    if S == 0:
        raise ValueError("S = 0 collapses both curvatures to zero (degenerate)")
    if S < 0:
        raise ValueError(f"S must be positive, got {S}")
    radicand = k * (4 - k) * S
    lam = Surd(Fraction(1, 2 * k), radicand)
    mu = Surd(Fraction(-1, 2 * (4 - k)), radicand)
    return (lam, mu), (-lam, -mu)


# ---------------------------------------------------------------------------
# Three distinct curvatures


def g3_matrix(p: int, q: int, r: int, lams: Sequence[RationalLike]) -> list[list[Fraction]]:
    la, mu, sig = (as_rational(v) for v in lams)
    return [
        [Fraction(p), Fraction(q), Fraction(r)],
        [p * la, q * mu, r * sig],
        [p * la * la, q * mu * mu, r * sig * sig],
    ]


def g3_kernel(p: int, q: int, r: int, lams: Sequence[RationalLike]) -> int:
    """Kernel dimension of the three-curvature differential constraint system.

    Multiplicities p, q, r are positive with p + q + r = 4, curvature values
    distinct. The determinant factors as p q r (mu-la)(sig-la)(sig-mu), which
    is nonzero exactly when the values are distinct, so the kernel dimension
    is always 0 for admissible input; both the cofactor determinant and the
    factored form are computed and cross-checked on every call.
    """
    for name, m in (("p", p), ("q", q), ("r", r)):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"multiplicity {name} must be a positive integer, got {m}")
    if p + q + r != 4:
        raise ValueError(f"multiplicities must sum to 4, got {p}+{q}+{r}")
    la, mu, sig = (as_rational(v) for v in lams)
    if la == mu or la == sig or mu == sig:
        raise ValueError("curvature values must be pairwise distinct")

    m = g3_matrix(p, q, r, (la, mu, sig))
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    det_factored = p * q * r * (mu - la) * (sig - la) * (sig - mu)
    if det != det_factored:
        raise RuntimeError("determinant factorization mismatch (unreachable)")
    return 3 - matrix_rank(m)


# ---------------------------------------------------------------------------
# Four distinct curvatures: repeated-index components


def diag_from_K(lam: Quadruple, K: Sequence[RationalLike]) -> tuple[tuple[Fraction, ...], ...]:
    """h_iil = K_l / prod_{j != i} (lam_j - lam_i), for all i, l.

    Each column is the unique solution of the three moment constraints with
    the prescribed K_l; the constraints are re-verified exactly on every call.
    """
    K = tuple(as_rational(v) for v in K)
    if len(K) != 4:
        raise ValueError("K has four entries")
    ls = lam.lam
    denom = []
    for i in range(4):
        d = Fraction(1)
        for j in range(4):
            if j != i:
                d *= ls[j] - ls[i]
        denom.append(d)
    diag = tuple(tuple(K[l] / denom[i] for l in range(4)) for i in range(4))
    for l in range(4):
        col = [diag[i][l] for i in range(4)]
        z0 = col[0] + col[1] + col[2] + col[3]
        z1 = sum(ls[i] * col[i] for i in range(4))
        z2 = sum(ls[i] * ls[i] * col[i] for i in range(4))
        if z0 != 0 or z1 != 0 or z2 != 0:
            raise RuntimeError("moment constraints violated (unreachable)")
    return diag


def diag_from_system(lam: Quadruple, K_l: RationalLike, l: int) -> tuple[Fraction, ...]:
    """Column l of the repeated-index table, from first principles.

    Solves the 4x4 system {three moment constraints} + {K equation} by exact
    elimination, with no reference to the closed form. Agreement with
    diag_from_K is the correctness check for both.
    """
    if l not in (0, 1, 2, 3):
        raise ValueError(f"column index must be 0..3, got {l}")
    ls = lam.lam
    prods = []
    for i in range(4):
        pr = Fraction(1)
        for j in range(4):
            if j != i:
                pr *= ls[j]
        prods.append(pr)
    matrix = [
        [Fraction(1)] * 4,
        list(ls),
        [v * v for v in ls],
        prods,
    ]
    rhs = [Fraction(0), Fraction(0), Fraction(0), as_rational(K_l)]
    return tuple(solve_linear(matrix, rhs))


# ---------------------------------------------------------------------------
# The interaction sums I_l


def I_def(lam: Quadruple, diag: Sequence[Sequence[Fraction]]) -> Quad:
    """I_l = sum over pairs i < j (both != l) of
    h_iil h_jjl / ((lam_l - lam_i)(lam_l - lam_j))."""
    ls = lam.lam
    out = []
    for l in range(4):
        others = [i for i in range(4) if i != l]
        acc = Fraction(0)
        for a in range(3):
            for b in range(a + 1, 3):
                i, j = others[a], others[b]
                acc += diag[i][l] * diag[j][l] / ((ls[l] - ls[i]) * (ls[l] - ls[j]))
        out.append(acc)
    return tuple(out)


def I_closed(lam: Quadruple, K: Sequence[RationalLike]) -> Quad:
    """The same four sums in closed form: -K_l^2 / D^2 times a difference
    bracket, D = prod_{i<j} (lam_j - lam_i)."""
    K = tuple(as_rational(v) for v in K)
    l1, l2, l3, l4 = lam.lam
    D = (l2 - l1) * (l3 - l1) * (l4 - l1) * (l3 - l2) * (l4 - l2) * (l4 - l3)
    D2 = D * D
    brackets = (
        (l4 - l3) * (l4 - l2) * (l4 - l1) ** 2
        + (l3 - l4) * (l3 - l2) * (l3 - l1) ** 2
        + (l2 - l4) * (l2 - l3) * (l2 - l1) ** 2,
        (l4 - l3) * (l4 - l2) ** 2 * (l4 - l1)
        + (l3 - l4) * (l3 - l2) ** 2 * (l3 - l1)
        + (l1 - l4) * (l1 - l3) * (l1 - l2) ** 2,
        (l4 - l3) ** 2 * (l4 - l2) * (l4 - l1)
        + (l2 - l4) * (l2 - l3) ** 2 * (l2 - l1)
        + (l1 - l4) * (l1 - l3) ** 2 * (l1 - l2),
        (l3 - l4) ** 2 * (l3 - l2) * (l3 - l1)
        + (l2 - l4) ** 2 * (l2 - l3) * (l2 - l1)
        + (l1 - l4) ** 2 * (l1 - l3) * (l1 - l2),
    )
    return tuple(-K[l] * K[l] * brackets[l] / D2 for l in range(4))


def sign_lemma(lam: Quadruple, K: Sequence[RationalLike]) -> bool:
    """True when every interaction sum I_l is nonpositive."""
    return all(v <= 0 for v in I_closed(lam, K))


def gauss_R(lam: Quadruple) -> Fraction:
    """Scalar curvature sum over ordered pairs: sum_{i != j} (1 + lam_i lam_j)."""
    ls = lam.lam
    acc = Fraction(0)
    for i in range(4):
        for j in range(4):
            if i != j:
                acc += 1 + ls[i] * ls[j]
    return acc


# ---------------------------------------------------------------------------
# The divergence-form coefficient


# Each triple product omega_i ^ omega_j ^ omega_kl of the closed 3-form uses
# an even permutation (i, j, k, l) of (1, 2, 3, 4), so one coefficient formula
# serves all six terms.
_PSI_TERMS = (
    (0, 1, 2, 3),
    (1, 2, 0, 3),
    (2, 0, 1, 3),
    (0, 3, 1, 2),
    (1, 3, 2, 0),
    (2, 3, 0, 1),
)


def dpsi_coeff(table: DerivativeTable) -> Fraction:
    """Volume-form coefficient of the exterior derivative of the 3-form
    psi = sum over the six index pairings of omega_i ^ omega_j ^ omega_kl.

    Each term contributes three blocks (derivative on the first leg, on the
    second leg, on the connection form), assembled independently per term;
    sectional curvature enters as R_klkl = 1 + lam_k lam_l. The fully mixed
    components appear with weight -2/((lam_k-lam_m)(lam_l-lam_m)) per term and
    cancel in the total, which the exact sweep verifies rather than assumes.
    """
    ls = table.lam.lam
    diag = table.diag
    total = Fraction(0)
    for i, j, k, l in _PSI_TERMS:
        dki = ls[k] - ls[i]
        dli = ls[l] - ls[i]
        dkj = ls[k] - ls[j]
        dlj = ls[l] - ls[j]
        dkl = ls[k] - ls[l]
        m_ikl = table.mixed_component(i, k, l)
        m_jkl = table.mixed_component(j, k, l)
        # derivative on the first 1-form leg
        block_a = -(
            diag[i][k] * diag[l][k] / (dki * dkl)
            + diag[i][l] * diag[k][l] / (dli * -dkl)
            + m_ikl * m_ikl / (dki * dli)
        )
        # derivative on the second 1-form leg (enters the total negatively)
        block_b = (
            diag[j][k] * diag[l][k] / (dkj * dkl)
            + diag[j][l] * diag[k][l] / (dlj * -dkl)
            + m_jkl * m_jkl / (dkj * dlj)
        )
        # derivative on the connection form, including the curvature term
        block_c = (
            diag[k][i] * diag[l][i] / (dki * dli)
            + diag[k][j] * diag[l][j] / (dkj * dlj)
            - m_ikl * m_ikl / (dki * dli)
            - m_jkl * m_jkl / (dkj * dlj)
            + 1 + ls[k] * ls[l]
        )
        total += block_a - block_b + block_c
    return total


# ---------------------------------------------------------------------------
# Inverting the invariants


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mp.mpf(x)
    return mp.mpf(x)


def recover_curvatures(p1, p2, p3, e4, dps: int = 50) -> tuple[float, float, float, float]:
    """Curvature quadruple from power sums p1, p2, p3 and product e4.

    Newton's identities convert the power sums to elementary symmetric
    functions; the roots of the resulting quartic are found numerically at
    `dps` decimal digits (exact rational or mpf inputs keep repeated roots
    accurate far beyond double precision). Raises ValueError if any root has
    imaginary part beyond 1e-10. Returns the four real roots ascending.
    """
    with mp.workdps(dps):
        p1m, p2m, p3m, e4m = (_to_mpf(v) for v in (p1, p2, p3, e4))
        e1 = p1m
        e2 = (p1m * p1m - p2m) / 2
        e3 = (p1m**3 - 3 * p1m * p2m + 2 * p3m) / 6
        coeffs = [mp.mpf(1), -e1, e2, -e3, e4m]
        zero_roots = 0
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
            zero_roots += 1
        roots = (
            [mp.mpc(r) for r in mp.polyroots(coeffs, maxsteps=300, extraprec=300)]
            if len(coeffs) > 1
            else []
        )
        roots.extend(mp.mpc(0) for _ in range(zero_roots))
        out = []
        for rt in roots:
            if abs(mp.im(rt)) > mp.mpf("1e-10"):
                raise ValueError(f"curvature root is not real: {rt}")
            out.append(float(mp.re(rt)))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Randomized exact sweeps


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of one randomized identity sweep."""

    identity: str
    trials: int
    failures: int
    exact: bool
    first_counterexample: dict | None

    def __post_init__(self) -> None:
        if (self.failures == 0) != (self.first_counterexample is None):
            raise ValueError("failure count and counterexample presence disagree")


def _draw_distinct_quadruple(stream: RngStream, height: int) -> tuple[Quadruple, RngStream]:
    while True:
        vals = []
        for _ in range(4):
            v, stream = draw_rational(stream, height)
            vals.append(v)
        if len(set(vals)) == 4:
            return Quadruple(tuple(sorted(vals))), stream


def _draw_vec4(stream: RngStream, height: int) -> tuple[Quad, RngStream]:
    vals = []
    for _ in range(4):
        v, stream = draw_rational(stream, height)
        vals.append(v)
    return tuple(vals), stream


def _fmt(values) -> list[str]:
    return [str(v) for v in values]


def _trial_g2(stream: RngStream, height: int) -> dict | None:
    k, stream = draw_int(stream, 1, 3)
    num, stream = draw_int(stream, 1, height)
    den, stream = draw_int(stream, 1, height)
    S = Fraction(num, den)
    for lam, mu in g2_solve(k, S):
        linear = k * lam + (4 - k) * mu
        quadratic = k * lam.squared() + (4 - k) * mu.squared()
        if not linear.is_zero() or quadratic != S:
            return {"k": str(k), "S": str(S)}
    return None


def _trial_g3(stream: RngStream, height: int) -> dict | None:
    choice, stream = draw_int(stream, 0, 2)
    p, q, r = ((1, 1, 2), (1, 2, 1), (2, 1, 1))[choice]
    while True:
        vals = []
        for _ in range(3):
            v, stream = draw_rational(stream, height)
            vals.append(v)
        if len(set(vals)) == 3:
            break
    if g3_kernel(p, q, r, vals) != 0:
        return {"p": str(p), "q": str(q), "r": str(r), "lams": _fmt(vals)}
    return None


def _trial_vandermonde(stream: RngStream, height: int) -> dict | None:
    quad, stream = _draw_distinct_quadruple(stream, height)
    K_l, stream = draw_rational(stream, height)
    l, stream = draw_int(stream, 0, 3)
    K = tuple(K_l if m == l else Fraction(0) for m in range(4))
    expected = tuple(diag_from_K(quad, K)[i][l] for i in range(4))
    solved = diag_from_system(quad, K_l, l)
    if solved != expected:
        return {"lam": _fmt(quad.lam), "K_l": str(K_l), "l": str(l)}
    return None


def _trial_i_closed(stream: RngStream, height: int) -> dict | None:
    quad, stream = _draw_distinct_quadruple(stream, height)
    K, stream = _draw_vec4(stream, height)
    direct = I_def(quad, diag_from_K(quad, K))
    closed = I_closed(quad, K)
    if direct != closed:
        return {"lam": _fmt(quad.lam), "K": _fmt(K)}
    return None


def _trial_i_sign(stream: RngStream, height: int) -> dict | None:
    quad, stream = _draw_distinct_quadruple(stream, height)
    K, stream = _draw_vec4(stream, height)
    if not sign_lemma(quad, K):
        return {"lam": _fmt(quad.lam), "K": _fmt(K)}
    return None


def _trial_dpsi(stream: RngStream, height: int) -> dict | None:
    quad, stream = _draw_distinct_quadruple(stream, height)
    K, stream = _draw_vec4(stream, height)
    mixed, stream = _draw_vec4(stream, height)
    table = DerivativeTable(lam=quad, K=K, mixed=mixed)
    lhs = dpsi_coeff(table)
    rhs = gauss_R(quad) / 2 - sum(I_closed(quad, K))
    if lhs != rhs:
        return {"lam": _fmt(quad.lam), "K": _fmt(K), "mixed": _fmt(mixed)}
    return None


def _trial_recover(stream: RngStream, height: int) -> dict | None:
    vals = []
    for _ in range(4):
        v, stream = draw_rational(stream, height)
        vals.append(v)
    vals.sort()
    p1 = sum(vals)
    p2 = sum(v * v for v in vals)
    p3 = sum(v**3 for v in vals)
    e4 = vals[0] * vals[1] * vals[2] * vals[3]
    roots = recover_curvatures(p1, p2, p3, e4)
    worst = max(abs(r - float(v)) for r, v in zip(roots, vals))
    if worst > 1e-9:
        return {"lam": _fmt(vals), "max_error": repr(worst)}
    return None


_TRIALS: dict[str, tuple[Callable[[RngStream, int], dict | None], bool]] = {
    "g2": (_trial_g2, True),
    "g3": (_trial_g3, True),
    "vandermonde": (_trial_vandermonde, True),
    "i-closed": (_trial_i_closed, True),
    "i-sign": (_trial_i_sign, True),
    "dpsi": (_trial_dpsi, True),
    "recover": (_trial_recover, False),
}

IDENTITY_NAMES = tuple(_TRIALS)


def _identity_chunk(
    name: str, seed: int, start: int, stop: int, height: int
) -> tuple[int, int | None, dict | None]:
    """(failure count, first failing index, its counterexample) on [start, stop)."""
    trial_fn, _ = _TRIALS[name]
    root = RngStream(seed)
    failures = 0
    first_idx: int | None = None
    first_cex: dict | None = None
    for idx in range(start, stop):
        cex = trial_fn(root.split(idx), height)
        if cex is not None:
            failures += 1
            if first_idx is None:
                first_idx = idx
                first_cex = dict(cex, trial=str(idx))
    return failures, first_idx, first_cex


def run_identity_sweep(
    name: str,
    trials: int,
    seed: int,
    height: int = 1000,
    workers: int = 1,
) -> IdentityVerdict:
    """Run `trials` independent random instances of one identity.

    Trial i draws its inputs from the child stream split(seed, i), so results
    are identical for any worker count and any partition of the index range.
    """
    if name not in _TRIALS:
        raise ValueError(f"unknown identity {name!r}; choose from {sorted(_TRIALS)}")
    if trials < 1:
        raise ValueError("trials must be positive")
    if workers <= 1:
        failures, _, cex = _identity_chunk(name, seed, 0, trials, height)
    else:
        from concurrent.futures import ProcessPoolExecutor

        bounds = [(trials * w // workers, trials * (w + 1) // workers) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _identity_chunk,
                    [name] * workers,
                    [seed] * workers,
                    [b[0] for b in bounds],
                    [b[1] for b in bounds],
                    [height] * workers,
                )
            )
        failures = sum(p[0] for p in parts)
        first = min((p for p in parts if p[1] is not None), key=lambda p: p[1], default=None)
        cex = first[2] if first else None
    return IdentityVerdict(
        identity=name,
        trials=trials,
        failures=failures,
        exact=_TRIALS[name][1],
        first_counterexample=cex,
    )
