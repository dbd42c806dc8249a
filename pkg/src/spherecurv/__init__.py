"""Curvature invariants of level surfaces in the unit 5-sphere, a catalog of
the closed-form constant-curvature models, and exact rational verification of
the algebraic identities behind their classification."""

from .catalog import (
    CheckResult,
    IsoModel,
    all_models,
    cartan_level,
    cartan_model,
    checks_passed,
    clifford_model,
    equator_model,
    model_check,
)
from .eigen import SymMat4, sym_eigen
from .exact import Surd, as_rational, matrix_rank, solve_linear
from .fields import (
    ScalarField,
    cartan_field,
    coordinate_field,
    eval1,
    eval2,
    polynomial_field,
    polynomial_product,
)
from .identities import (
    IDENTITY_NAMES,
    DerivativeTable,
    IdentityVerdict,
    Quadruple,
    I_closed,
    I_def,
    diag_from_K,
    diag_from_system,
    dpsi_coeff,
    g2_solve,
    g3_kernel,
    g3_matrix,
    gauss_R,
    recover_curvatures,
    run_identity_sweep,
    sign_lemma,
)
from .jets import (
    N_VARS,
    Jet1,
    Jet2,
    jet1_constant,
    jet1_variable,
    jet_constant,
    jet_variable,
)
from .report import REPORT_SCHEMA, SCHEMA_VERSION, build_report, to_csv, to_json
from .rng import (
    RngStream,
    draw_float,
    draw_gaussian,
    draw_int,
    draw_rational,
    draw_u64,
)
from .shape import (
    VERDICTS,
    CurvatureReport,
    SurfaceStats,
    SweepTolerances,
    curvature_report,
    fit_theta0,
    second_form,
    sweep_analyze,
)
from .sphere import (
    FocalPointError,
    LevelSpec,
    ProjectionError,
    SpherePoint,
    TangentFrame,
    frame_at,
    project_to_level,
    sample_level_point,
    sample_on_sphere,
    surface_normal,
    tangent_basis,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CurvatureReport",
    "DerivativeTable",
    "FocalPointError",
    "IDENTITY_NAMES",
    "I_closed",
    "I_def",
    "IdentityVerdict",
    "IsoModel",
    "Jet1",
    "Jet2",
    "LevelSpec",
    "N_VARS",
    "ProjectionError",
    "Quadruple",
    "REPORT_SCHEMA",
    "RngStream",
    "SCHEMA_VERSION",
    "ScalarField",
    "SpherePoint",
    "Surd",
    "SurfaceStats",
    "SweepTolerances",
    "SymMat4",
    "TangentFrame",
    "VERDICTS",
    "all_models",
    "as_rational",
    "build_report",
    "cartan_field",
    "cartan_level",
    "cartan_model",
    "checks_passed",
    "clifford_model",
    "coordinate_field",
    "curvature_report",
    "diag_from_K",
    "diag_from_system",
    "dpsi_coeff",
    "draw_float",
    "draw_gaussian",
    "draw_int",
    "draw_rational",
    "draw_u64",
    "equator_model",
    "eval1",
    "eval2",
    "fit_theta0",
    "frame_at",
    "g2_solve",
    "g3_kernel",
    "g3_matrix",
    "gauss_R",
    "jet1_constant",
    "jet1_variable",
    "jet_constant",
    "jet_variable",
    "matrix_rank",
    "model_check",
    "polynomial_field",
    "polynomial_product",
    "project_to_level",
    "recover_curvatures",
    "run_identity_sweep",
    "sample_level_point",
    "sample_on_sphere",
    "second_form",
    "sign_lemma",
    "solve_linear",
    "surface_normal",
    "sweep_analyze",
    "sym_eigen",
    "tangent_basis",
    "to_csv",
    "to_json",
    "__version__",
]
