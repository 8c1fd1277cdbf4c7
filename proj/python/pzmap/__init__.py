"""Discrete plankton map analysis: fixed points, stability, normal form,
global convergence and simulation utilities backed by the C++ core."""

from ._core import (
    Branch,
    CharPoly,
    CheckedStep,
    ConvergenceCase,
    ConvergenceReport,
    ConvergenceRun,
    CurveDirection,
    FixedPointRecord,
    Jacobian2,
    Kind,
    KPolyMin,
    NonnegVerdict,
    NormalFormReport,
    NsSearchResult,
    Params,
    PhasePortrait,
    Region,
    RegionLabel,
    RootLocation,
    ScanOutcome,
    ScanRegion,
    ScanResult,
    State,
    SweepPoint,
    SweepResult,
    TaylorCoeffs,
    TrajectoryResult,
    TrajectoryStatus,
    beta_grid,
    betaeq_real_roots,
    bifurcation_sweep,
    boundary_classification,
    boundary_lambda2,
    char_poly_at,
    classify_region,
    convergence_hypotheses,
    convergence_scan,
    eigen_at,
    find_ns_beta,
    gammaeq_positive_roots,
    h_poly,
    iterate_to_convergence,
    jacobian,
    jacobian_at_fixed,
    jury_classify,
    kpoly,
    kpoly_coeffs,
    kpoly_min,
    limit_radius_about,
    max_lyapunov,
    nonneg_case,
    normal_form_at_critical,
    normal_form_L,
    omega,
    omega_critical,
    p_one_factored,
    phase_portrait,
    positive_fixed_points,
    psi,
    rho,
    step,
    step_checked,
    taylor_coeffs,
    trace_at_fixed,
    trajectory,
    transversality,
    u_hat,
    v_of_u,
)

__all__ = [
    "Branch",
    "CharPoly",
    "CheckedStep",
    "ConvergenceCase",
    "ConvergenceReport",
    "ConvergenceRun",
    "CurveDirection",
    "FixedPointRecord",
    "Jacobian2",
    "Kind",
    "KPolyMin",
    "NonnegVerdict",
    "NormalFormReport",
    "NsSearchResult",
    "Params",
    "PhasePortrait",
    "Region",
    "RegionLabel",
    "RootLocation",
    "ScanOutcome",
    "ScanRegion",
    "ScanResult",
    "State",
    "SweepPoint",
    "SweepResult",
    "TaylorCoeffs",
    "TrajectoryResult",
    "TrajectoryStatus",
    "beta_grid",
    "betaeq_real_roots",
    "bifurcation_sweep",
    "boundary_classification",
    "boundary_lambda2",
    "char_poly_at",
    "classify_region",
    "convergence_hypotheses",
    "convergence_scan",
    "eigen_at",
    "find_ns_beta",
    "gammaeq_positive_roots",
    "h_poly",
    "iterate_to_convergence",
    "jacobian",
    "jacobian_at_fixed",
    "jury_classify",
    "kpoly",
    "kpoly_coeffs",
    "kpoly_min",
    "limit_radius_about",
    "max_lyapunov",
    "nonneg_case",
    "normal_form_at_critical",
    "normal_form_L",
    "omega",
    "omega_critical",
    "p_one_factored",
    "phase_portrait",
    "positive_fixed_points",
    "psi",
    "rho",
    "step",
    "step_checked",
    "taylor_coeffs",
    "trace_at_fixed",
    "trajectory",
    "transversality",
    "u_hat",
    "v_of_u",
]
