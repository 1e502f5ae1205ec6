import csv

import numpy as np
import pytest
from scipy.special import erf

from meltfront import (
    Dirichlet,
    Neumann,
    ProfileGrid,
    SolverSettings,
    build_dimensionless,
    constant_model,
    export_field_csv,
    export_front_csv,
    front_position,
    physical_solution,
    solve_lambda,
    stefan_residual,
    temperature_at,
)
from meltfront.reconstruct import PhysicalSolution


@pytest.fixture(scope="module")
def dirichlet_case():
    model = constant_model(1.0, 1.0, 1.0, 1.0, Pe=0.0)  # Ste = 1
    bc = Dirichlet(T_star=2.0, T_m=1.0)
    report = solve_lambda(build_dimensionless(model, bc))
    return model, bc, physical_solution(report, model, bc)


def test_front_temperature_is_melting_temperature(dirichlet_case):
    model, bc, sol = dirichlet_case
    for t in (0.5, 1.0, 4.0):
        s = front_position(sol, t)
        assert temperature_at(sol, s, t) == pytest.approx(bc.T_m, abs=1e-12)


def test_neumann_front_temperature():
    model = constant_model(1.0, 1.0, 1.0, 1.0)
    bc = Neumann(q=0.5, T_m=1.0)
    report = solve_lambda(build_dimensionless(model, bc))
    sol = physical_solution(report, model, bc)
    s = front_position(sol, 2.0)
    assert temperature_at(sol, s, 2.0) == pytest.approx(bc.T_m, abs=1e-12)


def test_fixed_face_temperature(dirichlet_case):
    _, bc, sol = dirichlet_case
    assert temperature_at(sol, 0.0, 1.0) == pytest.approx(bc.T_star, abs=1e-12)


def test_interior_matches_erf_solution(dirichlet_case):
    _, bc, sol = dirichlet_case
    t = 1.0
    x = front_position(sol, t) / 2.0
    lam = sol.lambda_tilde
    xi = lam / 2.0
    expected = (bc.T_m - bc.T_star) * erf(xi) / erf(lam) + bc.T_star
    assert temperature_at(sol, x, t) == pytest.approx(expected, abs=1e-6)


def test_front_position_values():
    sol = PhysicalSolution(
        lambda_tilde=0.5,
        alpha0=1.0,
        bc=Dirichlet(T_star=2.0, T_m=1.0),
        profile=ProfileGrid.linear(0.5, 32),
    )
    assert front_position(sol, 0.0) == 0.0
    assert front_position(sol, 1.0) == pytest.approx(1.0)
    assert front_position(sol, 4.0) == pytest.approx(2.0 * front_position(sol, 1.0))


def test_temperature_bounded_between_melting_and_face(dirichlet_case):
    _, bc, sol = dirichlet_case
    t = 2.0
    s = front_position(sol, t)
    for x in np.linspace(0.0, s, 37):
        T = temperature_at(sol, float(x), t)
        assert bc.T_m - 1e-12 <= T <= bc.T_star + 1e-12


def test_beyond_front_returns_none(dirichlet_case):
    _, _, sol = dirichlet_case
    s = front_position(sol, 1.0)
    assert temperature_at(sol, s * 1.01, 1.0) is None


def test_stefan_residual_refines_with_grid():
    model = constant_model(1.0, 1.0, 1.0, 1.0, Pe=0.0)
    bc = Dirichlet(T_star=2.0, T_m=1.0)
    prob = build_dimensionless(model, bc)
    coarse = physical_solution(solve_lambda(prob, SolverSettings(n=512)), model, bc)
    fine = physical_solution(solve_lambda(prob, SolverSettings(n=2048)), model, bc)
    r_coarse = stefan_residual(coarse, model, 1.0)
    r_fine = stefan_residual(fine, model, 1.0)
    assert r_coarse <= 1e-3
    assert r_coarse / r_fine >= 3.0


def test_csv_exports(tmp_path, dirichlet_case):
    _, _, sol = dirichlet_case
    field = export_field_csv(sol, tmp_path / "field.csv", times=[1.0, 2.0], nx=11)
    front = export_front_csv(sol, tmp_path / "front.csv", times=[0.0, 1.0, 4.0])
    with field.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["x", "t", "T"]
    assert len(rows) == 1 + 2 * 11
    with front.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["t", "s"]
    assert float(rows[1][1]) == 0.0
    assert float(rows[3][1]) == pytest.approx(2.0 * float(rows[2][1]))
