import math

import numpy as np
import pytest
from scipy.special import erf

from meltfront import (
    BCKind,
    ConvergenceError,
    Neumann,
    SolverSettings,
    bracket,
    build_dimensionless,
    constant_model,
    constant_problem,
    front_flux_residual,
    linear_problem,
    solve_lambda,
    v_value,
)
from meltfront.lambda_solver import v1_curve, v2_curve

from conftest import bisect_ref

DIRICHLET_PE0_STE1 = 0.620062633313595  # root of sqrt(pi) x erf(x) exp(x^2) = 1
NEUMANN_LOAD_HALF = 0.419364824019131  # root of x exp(x^2) = 1/2


def test_v_matches_constant_coefficient_closed_form():
    prob = constant_problem(BCKind.DIRICHLET, Pe=0.0, Ste=1.0, T_star=2.0, T_m=1.0)
    lam = 0.5
    value, inner = v_value(prob, lam)
    assert inner.converged
    expected = 1.0 * math.exp(-(lam**2)) / (math.sqrt(math.pi) * erf(lam))
    assert value == pytest.approx(expected, abs=5e-7)


def test_robin_v_vanishes_with_biot():
    prob = constant_problem(BCKind.ROBIN, Pe=0.5, Ste=1.0, Bi=1e-9, T_star=2.0, T_m=1.0)
    value, _ = v_value(prob, 0.5)
    assert 0.0 < value < 1e-8


def test_bracket_dirichlet_lower_root(linear_dirichlet):
    br = bracket(linear_dirichlet)
    assert br.provenance == "analytic"
    assert abs(v1_curve(linear_dirichlet, br.lambda1) - br.lambda1) <= 1e-10
    assert abs(v2_curve(linear_dirichlet, br.lambda2) - br.lambda2) <= 1e-10
    assert br.lambda1 < br.lambda2


def test_bracket_zero_lower_end_for_robin_and_radiative():
    pr = linear_problem(BCKind.ROBIN, alpha=0.1, beta=0.1, Pe=0.5, Ste=1.0, Bi=0.7)
    assert bracket(pr).lambda1 == 0.0
    prad = constant_problem(BCKind.RADIATIVE, Pe=0.5, Ste=1.0, Bi=0.1, r=0.01, T_star=2.0, T_m=1.0)
    assert bracket(prad).lambda1 == 0.0


def test_bracket_neumann_lower_root_frozen():
    # q*/(M L_M) = 0.3 with L_M = N_M = 1: lambda1 solves 0.3 exp(-x^2) = x
    prob = constant_problem(BCKind.NEUMANN, Pe=0.0, q_star=0.6, M=2.0, T_m=1.0)
    br = bracket(prob)
    oracle = bisect_ref(lambda x: 0.3 * math.exp(-(x**2)) - x, 0.0, 1.0)
    assert oracle == pytest.approx(0.27772978417882754, abs=1e-12)
    assert br.lambda1 == pytest.approx(oracle, abs=1e-9)


def test_solve_dirichlet_classical_value():
    prob = constant_problem(BCKind.DIRICHLET, Pe=0.0, Ste=1.0, T_star=2.0, T_m=1.0)
    settings = SolverSettings(n=4096, outer_tol=1e-12)
    report = solve_lambda(prob, settings)
    assert report.lambda_tilde == pytest.approx(DIRICHLET_PE0_STE1, abs=1e-8)


def test_solve_neumann_through_dimensional_route():
    # q/(rho0 ell sqrt(alpha0)) = 0.5 -> x exp(x^2) = 1/2
    model = constant_model(1.0, 1.0, 1.0, 1.0, Pe=0.0)
    prob = build_dimensionless(model, Neumann(q=0.5, T_m=1.0))
    report = solve_lambda(prob, SolverSettings(n=4096, outer_tol=1e-12))
    assert report.lambda_tilde == pytest.approx(NEUMANN_LOAD_HALF, abs=1e-8)


def test_robin_large_biot_approaches_dirichlet():
    pd = constant_problem(BCKind.DIRICHLET, Pe=0.5, Ste=1.0, T_star=2.0, T_m=1.0)
    ph = constant_problem(BCKind.ROBIN, Pe=0.5, Ste=1.0, Bi=1e4, T_star=2.0, T_m=1.0)
    lam_d = solve_lambda(pd).lambda_tilde
    lam_h = solve_lambda(ph).lambda_tilde
    assert lam_h < lam_d
    assert abs(lam_h - lam_d) <= 1e-3


@pytest.mark.parametrize(
    "prob",
    [
        constant_problem(BCKind.DIRICHLET, Pe=0.5, Ste=1.0, T_star=2.0, T_m=1.0),
        linear_problem(BCKind.DIRICHLET, alpha=0.1, beta=0.1, Pe=0.5, Ste=1.0),
        constant_problem(BCKind.NEUMANN, Pe=0.5, q_star=1.0, M=2.0, T_m=1.0),
        linear_problem(BCKind.ROBIN, alpha=0.1, beta=0.1, Pe=0.5, Ste=1.0, Bi=0.7),
        linear_problem(
            BCKind.RADIATIVE, alpha=0.05, beta=0.05, Pe=0.3, Ste=0.5, Bi=0.05, r=0.005, T_star=2.0, T_m=1.0
        ),
    ],
)
def test_sandwich_inside_bracket(prob):
    br = bracket(prob)
    settings = SolverSettings(n=256)
    lams = np.linspace(max(br.lambda1, br.lambda2 * 1e-3), br.lambda2, 18)[1:-1]
    for lam in lams:
        value, _ = v_value(prob, float(lam), settings)
        lo = v1_curve(prob, float(lam))
        hi = v2_curve(prob, float(lam))
        assert lo - 1e-6 < value < hi + 1e-6


def test_root_quality_and_bracket_containment(linear_dirichlet):
    report = solve_lambda(linear_dirichlet)
    assert report.outer_residual <= report.settings.outer_tol
    assert report.bracket.lambda1 <= report.lambda_tilde
    # the search interval is widened a hair past lambda2 for degenerate
    # (envelope-tight) problems
    assert report.lambda_tilde <= report.bracket.lambda2 * (1.0 + 1e-4)
    assert report.v_at_lambda == pytest.approx(report.lambda_tilde, abs=report.settings.outer_tol)


def test_lambda_increases_with_stefan_number():
    lams = []
    for Ste in np.linspace(0.1, 2.0, 6):
        prob = constant_problem(BCKind.DIRICHLET, Pe=0.0, Ste=float(Ste), T_star=2.0, T_m=1.0)
        lams.append(solve_lambda(prob).lambda_tilde)
    assert np.all(np.diff(lams) > 0.0)


def test_no_sign_change_diagnostics():
    # zero exchange: V is identically 0, so no front coefficient exists
    prob = constant_problem(BCKind.RADIATIVE, Pe=0.5, Ste=1.0, Bi=0.0, r=0.0, T_star=2.0, T_m=1.0)
    with pytest.raises(ConvergenceError, match="no sign change"):
        solve_lambda(prob, SolverSettings(n=64, scan_points=128))


def test_inner_failure_carries_lambda(linear_dirichlet):
    with pytest.raises(ConvergenceError) as exc:
        v_value(linear_dirichlet, 0.4, SolverSettings(max_iter=1, inner_tol=1e-14))
    assert exc.value.lam == pytest.approx(0.4)


def test_front_flux_residual_small_on_converged_profile():
    prob = constant_problem(BCKind.DIRICHLET, Pe=0.5, Ste=1.0, T_star=2.0, T_m=1.0)
    report = solve_lambda(prob)
    assert report.front_flux_residual <= 1e-3
    assert front_flux_residual(prob, report.profile) == report.front_flux_residual


def test_report_payload_is_json_ready():
    import json

    from meltfront.lambda_solver import report_as_dict

    prob = constant_problem(BCKind.DIRICHLET, Pe=0.0, Ste=1.0, T_star=2.0, T_m=1.0)
    payload = report_as_dict(solve_lambda(prob))
    text = json.dumps(payload, sort_keys=True)
    assert "existence" in payload
    assert json.loads(text)["lambda"] == payload["lambda"]
