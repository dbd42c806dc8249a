"""Exact verification layer: solvers, interaction sums, divergence coefficient.

Frozen oracles in this file were derived by hand before the implementation
existed:

  * diag_from_K at lam=(1,2,3,4), K=(1,0,0,0): denominators
    prod_{j!=i}(lam_j - lam_i) are (6, -2, 2, -6), so column 0 is
    (1/6, -1/2, 1/2, -1/6) and every other column is zero.
  * I_closed at lam=(1,2,3,4), K=(1,1,1,1): the pair-difference product is
    D = 1*2*3*1*2*1 = 12 and each bracket evaluates to 16, so every
    I_l = -16/144 = -1/9.
  * gauss_R(1,2,3,4) = 12 + 2*e2 = 12 + 2*35 = 82.
  * dpsi at the same data with mixed = 0: gauss_R/2 - sum(I_l)
    = 41 + 4/9 = 373/9.
  * g2_solve(1, 4): radicand 1*3*4 = 12, lam = (1/2)sqrt(12) = sqrt(3),
    mu = -(1/6)sqrt(12) = -sqrt(1/3). g2_solve(2, 4): radicand 16 folds,
    lam = 1, mu = -1.
  * g3 determinant at (p,q,r)=(1,1,2), lams (0,1,2):
    1*1*2*(1-0)(2-0)(2-1) = 4.
"""

import math
from fractions import Fraction

import mpmath as mp
import pytest

from spherecurv import (
    DerivativeTable,
    IDENTITY_NAMES,
    IdentityVerdict,
    Quadruple,
    RngStream,
    Surd,
    diag_from_K,
    diag_from_system,
    dpsi_coeff,
    draw_rational,
    g2_solve,
    g3_kernel,
    g3_matrix,
    gauss_R,
    I_closed,
    I_def,
    recover_curvatures,
    run_identity_sweep,
    sign_lemma,
)

F = Fraction
LAM_1234 = Quadruple((F(1), F(2), F(3), F(4)))


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


class TestQuadruple:
    def test_sorted_and_exact(self):
        q = Quadruple((F(-1), F(0), F(1, 2), F(7)))
        assert q.lam == (F(-1), F(0), F(1, 2), F(7))

    def test_coercion(self):
        q = Quadruple((1, 2, "7/2", F(9)))
        assert q.lam == (F(1), F(2), F(7, 2), F(9))

    def test_rejects_non_increasing(self):
        with pytest.raises(ValueError):
            Quadruple((F(1), F(1), F(2), F(3)))
        with pytest.raises(ValueError):
            Quadruple((F(4), F(3), F(2), F(1)))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Quadruple((1.0, 2, 3, 4))

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            Quadruple((F(1), F(2), F(3)))


class TestTwoCurvatures:
    def test_k1_s4_closed_form(self):
        (lam, mu), (nlam, nmu) = g2_solve(1, 4)
        assert lam == Surd(F(1), F(3))
        assert mu == Surd(F(-1), F(1, 3))
        assert nlam == -lam and nmu == -mu
        assert float(lam) == pytest.approx(math.sqrt(3), abs=1e-15)
        assert float(mu) == pytest.approx(-1 / math.sqrt(3), abs=1e-15)

    def test_k2_s4_is_rational(self):
        (lam, mu), _ = g2_solve(2, 4)
        assert lam == Surd(F(1)) and lam.radicand == 1
        assert mu == Surd(F(-1))

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("S", [F(4), F(7, 5), F(12), F(1, 3)])
    def test_branches_satisfy_system_exactly(self, k, S):
        for lam, mu in g2_solve(k, S):
            assert (k * lam + (4 - k) * mu).is_zero()
            assert k * lam.squared() + (4 - k) * mu.squared() == S
        first_lam = g2_solve(k, S)[0][0]
        assert first_lam.coef > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            g2_solve(0, 4)
        with pytest.raises(ValueError):
            g2_solve(4, 4)
        with pytest.raises(ValueError):
            g2_solve(1, 0)
        with pytest.raises(ValueError):
            g2_solve(1, -3)


class TestThreeCurvatures:
    def test_matrix_determinant_frozen(self):
        m = g3_matrix(1, 1, 2, (F(0), F(1), F(2)))
        assert _det3(m) == 4

    def test_kernel_always_trivial(self):
        assert g3_kernel(1, 1, 2, (F(0), F(1), F(2))) == 0
        assert g3_kernel(2, 1, 1, (F(-5), F(1, 3), F(2))) == 0
        assert g3_kernel(1, 2, 1, ("1/7", "2/7", "3/7")) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            g3_kernel(0, 2, 2, (F(0), F(1), F(2)))
        with pytest.raises(ValueError):
            g3_kernel(1, 1, 1, (F(0), F(1), F(2)))
        with pytest.raises(ValueError):
            g3_kernel(1, 1, 2, (F(1), F(1), F(2)))


class TestDiagonalTable:
    def test_frozen_column(self):
        diag = diag_from_K(LAM_1234, (F(1), F(0), F(0), F(0)))
        col0 = tuple(diag[i][0] for i in range(4))
        assert col0 == (F(1, 6), F(-1, 2), F(1, 2), F(-1, 6))
        for l in (1, 2, 3):
            assert all(diag[i][l] == 0 for i in range(4))

    def test_moment_constraints_hold(self):
        ls = (F(-2), F(-1, 3), F(1), F(5, 2))
        quad = Quadruple(ls)
        diag = diag_from_K(quad, (F(3), F(-1), F(2, 7), F(5)))
        for l in range(4):
            col = [diag[i][l] for i in range(4)]
            assert sum(col) == 0
            assert sum(ls[i] * col[i] for i in range(4)) == 0
            assert sum(ls[i] ** 2 * col[i] for i in range(4)) == 0

    def test_agrees_with_first_principles_solve(self):
        quad = Quadruple((F(-3, 2), F(0), F(2, 3), F(4)))
        for l in range(4):
            K_l = F(l + 1, 3)
            K = tuple(K_l if m == l else F(0) for m in range(4))
            expected = tuple(diag_from_K(quad, K)[i][l] for i in range(4))
            assert diag_from_system(quad, K_l, l) == expected

    def test_system_column_validation(self):
        with pytest.raises(ValueError):
            diag_from_system(LAM_1234, F(1), 4)

    def test_k_arity_validation(self):
        with pytest.raises(ValueError):
            diag_from_K(LAM_1234, (F(1), F(0), F(0)))


class TestInteractionSums:
    K_ONES = (F(1), F(1), F(1), F(1))

    def test_frozen_value(self):
        assert I_closed(LAM_1234, self.K_ONES) == (F(-1, 9),) * 4

    def test_closed_matches_definition(self):
        cases = [
            (LAM_1234, self.K_ONES),
            (LAM_1234, (F(2), F(-1), F(1, 3), F(0))),
            (Quadruple((F(-5, 2), F(-1), F(0), F(7, 3))), (F(1, 2), F(3), F(-2), F(1))),
        ]
        for quad, K in cases:
            assert I_closed(quad, K) == I_def(quad, diag_from_K(quad, K))

    def test_scale_covariance(self):
        K = (F(2), F(-1), F(1, 3), F(5))
        base = I_closed(LAM_1234, K)
        for c in (F(3), F(-1, 2), F(7, 4)):
            scaled = I_closed(LAM_1234, tuple(c * v for v in K))
            assert scaled == tuple(c * c * v for v in base)

    def test_sign_lemma_on_samples(self):
        assert sign_lemma(LAM_1234, self.K_ONES)
        assert sign_lemma(LAM_1234, (F(-7), F(0), F(2, 3), F(100)))
        stream = RngStream(5)
        for _ in range(50):
            vals = []
            for _ in range(4):
                v, stream = draw_rational(stream, 50)
                vals.append(v)
            if len(set(vals)) < 4:
                continue
            quad = Quadruple(tuple(sorted(vals)))
            K = []
            for _ in range(4):
                v, stream = draw_rational(stream, 50)
                K.append(v)
            assert sign_lemma(quad, tuple(K))

    def test_zero_k_gives_zero_sums(self):
        zeros = (F(0),) * 4
        assert I_closed(LAM_1234, zeros) == zeros


def test_gauss_r_frozen():
    assert gauss_R(LAM_1234) == 82


def test_gauss_r_small_cases():
    # 12 + 2*e2 with e2 = -5 and e2 = 11 respectively
    assert gauss_R(Quadruple((F(-2), F(-1), F(1), F(2)))) == 2
    assert gauss_R(Quadruple((F(0), F(1), F(2), F(3)))) == 34


class TestDerivativeTable:
    LAM = LAM_1234
    K = (F(1), F(2), F(3), F(4))

    def test_mixed_component_lookup(self):
        table = DerivativeTable(self.LAM, self.K, (F(10), F(20), F(30), F(40)))
        assert table.mixed_component(2, 1, 0) == 10
        assert table.mixed_component(3, 1, 0) == 20
        assert table.mixed_component(0, 2, 3) == 30
        assert table.mixed_component(3, 2, 1) == 40

    def test_diag_is_cached_closed_form(self):
        table = DerivativeTable(self.LAM, self.K, (F(0),) * 4)
        assert table.diag == diag_from_K(self.LAM, self.K)

    def test_arity_validation(self):
        with pytest.raises(ValueError):
            DerivativeTable(self.LAM, (F(1),) * 3, (F(0),) * 4)
        with pytest.raises(ValueError):
            DerivativeTable(self.LAM, (F(1),) * 4, (F(0),) * 5)


class TestDivergenceCoefficient:
    def test_frozen_value_zero_mixed(self):
        table = DerivativeTable(LAM_1234, (F(1),) * 4, (F(0),) * 4)
        assert dpsi_coeff(table) == F(373, 9)

    def test_equals_curvature_minus_interactions(self):
        """The mixed second-form entries must cancel from the total."""
        stream = RngStream(9)
        for _ in range(25):
            vals = []
            for _ in range(4):
                v, stream = draw_rational(stream, 40)
                vals.append(v)
            if len(set(vals)) < 4:
                continue
            quad = Quadruple(tuple(sorted(vals)))
            K, mixed = [], []
            for _ in range(4):
                v, stream = draw_rational(stream, 40)
                K.append(v)
            for _ in range(4):
                v, stream = draw_rational(stream, 40)
                mixed.append(v)
            table = DerivativeTable(quad, tuple(K), tuple(mixed))
            expected = gauss_R(quad) / 2 - sum(I_closed(quad, tuple(K)))
            assert dpsi_coeff(table) == expected

    def test_mixed_data_does_not_change_total(self):
        base = DerivativeTable(LAM_1234, (F(1),) * 4, (F(0),) * 4)
        bumped = DerivativeTable(LAM_1234, (F(1),) * 4, (F(5), F(-3), F(1, 7), F(2)))
        assert dpsi_coeff(base) == dpsi_coeff(bumped)


class TestRecoverCurvatures:
    def test_symmetric_double_pair(self):
        """Roots {+-(sqrt(2)+1), +-(sqrt(2)-1)} give p1=p3=0, p2=12, e4=1."""
        roots = recover_curvatures(F(0), F(12), F(0), F(1))
        r2 = math.sqrt(2)
        expected = sorted([-(r2 + 1), -(r2 - 1), r2 - 1, r2 + 1])
        assert roots == pytest.approx(expected, abs=1e-9)

    def test_triple_root_with_high_precision_input(self):
        """Triple root -1/sqrt(3) next to sqrt(3) needs precise p3."""
        with mp.workdps(60):
            p3 = 8 * mp.sqrt(3) / 3
            roots = recover_curvatures(F(0), F(4), p3, F(-1, 3), dps=60)
        s3 = math.sqrt(3)
        assert roots == pytest.approx([-1 / s3, -1 / s3, -1 / s3, s3], abs=1e-9)

    def test_rational_roundtrip(self):
        stream = RngStream(13)
        for _ in range(20):
            vals = []
            for _ in range(4):
                v, stream = draw_rational(stream, 30)
                vals.append(v)
            vals.sort()
            p1 = sum(vals)
            p2 = sum(v * v for v in vals)
            p3 = sum(v**3 for v in vals)
            e4 = vals[0] * vals[1] * vals[2] * vals[3]
            roots = recover_curvatures(p1, p2, p3, e4)
            assert roots == pytest.approx([float(v) for v in vals], abs=1e-9)

    def test_complex_roots_rejected(self):
        with pytest.raises(ValueError):
            recover_curvatures(F(0), F(0), F(0), F(1))

    def test_zero_root_deflation(self):
        roots = recover_curvatures(F(3), F(5), F(9), F(0))
        assert roots == pytest.approx([0.0, 0.0, 1.0, 2.0], abs=1e-9)

    def test_all_zero(self):
        assert recover_curvatures(F(0), F(0), F(0), F(0)) == (0.0, 0.0, 0.0, 0.0)


class TestSweeps:
    def test_identity_names(self):
        assert IDENTITY_NAMES == (
            "g2",
            "g3",
            "vandermonde",
            "i-closed",
            "i-sign",
            "dpsi",
            "recover",
        )

    def test_verdict_consistency_enforced(self):
        with pytest.raises(ValueError):
            IdentityVerdict("g2", 10, 0, True, {"k": "1"})
        with pytest.raises(ValueError):
            IdentityVerdict("g2", 10, 2, True, None)
        ok = IdentityVerdict("g2", 10, 0, True, None)
        assert ok.failures == 0

    def test_unknown_name_and_bad_trials(self):
        with pytest.raises(ValueError):
            run_identity_sweep("nope", 10, seed=0)
        with pytest.raises(ValueError):
            run_identity_sweep("g2", 0, seed=0)

    @pytest.mark.parametrize("name", IDENTITY_NAMES)
    def test_small_sweep_passes(self, name):
        verdict = run_identity_sweep(name, 40, seed=3)
        assert verdict.identity == name
        assert verdict.trials == 40
        assert verdict.failures == 0
        assert verdict.first_counterexample is None
        assert verdict.exact is (name != "recover")

    def test_worker_count_does_not_change_verdict(self):
        solo = run_identity_sweep("i-closed", 60, seed=11, workers=1)
        pooled = run_identity_sweep("i-closed", 60, seed=11, workers=2)
        assert solo == pooled

    def test_seed_controls_reproducibility(self):
        a = run_identity_sweep("dpsi", 30, seed=4)
        b = run_identity_sweep("dpsi", 30, seed=4)
        assert a == b
