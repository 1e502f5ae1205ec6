"""Physical temperature fields and the moving front from a similarity solution.

The dimensionless profile f on [0, lambda] maps back through

    T(x, t) = (T_m - T_star) f(xi) + T_star       (Dirichlet / Robin / radiative)
    T(x, t) = T_m f(xi) + T_m                      (Neumann)

with xi = x / (2 sqrt(alpha0 t)), and the front follows
s(t) = 2 lambda sqrt(alpha0 t).  Queries beyond the front return None: the
one-phase model defines no temperature there.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator

from .coefficients import BCKind, BoundaryCondition, ThermalModel
from .errors import ConfigError
from .kernels import ProfileGrid

__all__ = [
    "PhysicalSolution",
    "physical_solution",
    "temperature_at",
    "front_position",
    "front_speed",
    "stefan_residual",
    "export_field_csv",
    "export_front_csv",
]

# relative slack for "exactly at the front" queries
_FRONT_TOL = 1e-12


@dataclass(frozen=True)
class PhysicalSolution:
    """A solved similarity solution tied back to its dimensional data."""

    lambda_tilde: float
    alpha0: float
    bc: BoundaryCondition
    profile: ProfileGrid

    def __post_init__(self):
        if not (self.lambda_tilde > 0.0 and self.alpha0 > 0.0):
            raise ConfigError("lambda_tilde and alpha0 must be positive")
        if abs(self.profile.lam - self.lambda_tilde) > 1e-9 * self.lambda_tilde:
            raise ConfigError("profile grid must span [0, lambda_tilde]")

    @cached_property
    def _interp(self) -> PchipInterpolator:
        # monotone piecewise cubic: keeps the profile monotone and gives
        # accurate derivative queries at the front
        return PchipInterpolator(self.profile.xi, self.profile.f, extrapolate=False)

    def f_at(self, xi):
        return self._interp(np.clip(xi, 0.0, self.profile.lam))

    def temperature_of_f(self, f):
        f = np.asarray(f, dtype=float)
        if self.bc.kind is BCKind.NEUMANN:
            return self.bc.T_m * f + self.bc.T_m
        return (self.bc.T_m - self.bc.T_star) * f + self.bc.T_star


def physical_solution(report, model: ThermalModel, bc: BoundaryCondition) -> PhysicalSolution:
    """Tie a SolveReport back to its dimensional model and boundary condition."""
    return PhysicalSolution(
        lambda_tilde=report.lambda_tilde,
        alpha0=model.alpha0,
        bc=bc,
        profile=report.profile,
    )


def front_position(sol: PhysicalSolution, t: float) -> float:
    """s(t) = 2 lambda sqrt(alpha0 t)."""
    if t < 0.0:
        raise ConfigError(f"t must be non-negative, got {t}")
    return 2.0 * sol.lambda_tilde * math.sqrt(sol.alpha0 * t)


def front_speed(sol: PhysicalSolution, t: float) -> float:
    if not t > 0.0:
        raise ConfigError(f"front speed needs t > 0, got {t}")
    return sol.lambda_tilde * math.sqrt(sol.alpha0 / t)


def temperature_at(sol: PhysicalSolution, x: float, t: float) -> float | None:
    """Temperature at (x, t), or None beyond the front."""
    if not t > 0.0:
        raise ConfigError(f"temperature queries need t > 0, got {t}")
    if x < 0.0:
        raise ConfigError(f"x must be non-negative, got {x}")
    xi = x / (2.0 * math.sqrt(sol.alpha0 * t))
    if xi > sol.lambda_tilde * (1.0 + _FRONT_TOL):
        return None
    return float(sol.temperature_of_f(sol.f_at(xi)))


def stefan_residual(sol: PhysicalSolution, model: ThermalModel, t: float) -> float:
    """Relative defect of the front energy balance k T_x + rho0 ell s_dot = 0 at time t.

    The face-side temperature gradient is taken by a one-sided three-point
    finite difference of the reconstructed field at the grid's own spacing,
    independent of the integral identities used by the solver.
    """
    s = front_position(sol, t)
    h = s * sol.profile.step / sol.profile.lam
    T0 = sol.temperature_of_f(sol.f_at(sol.profile.lam))
    T1 = temperature_at(sol, s - h, t)
    T2 = temperature_at(sol, s - 2.0 * h, t)
    T_x = (3.0 * float(T0) - 4.0 * T1 + T2) / (2.0 * h)
    k_front = float(np.asarray(model.k(np.asarray([sol.bc.T_m])), dtype=float).ravel()[0])
    latent = model.rho0 * model.ell * front_speed(sol, t)
    return abs(k_front * T_x + latent) / latent


def export_field_csv(sol: PhysicalSolution, path: str | Path, times: Sequence[float], nx: int = 101) -> Path:
    """Write `x,t,T` rows over [0, s(t)] for each time (liquid region only)."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "t", "T"])
        for t in times:
            s = front_position(sol, t)
            for x in np.linspace(0.0, s, nx):
                T = temperature_at(sol, float(x), float(t))
                writer.writerow([repr(float(x)), repr(float(t)), repr(float(T))])
    return path


def export_front_csv(sol: PhysicalSolution, path: str | Path, times: Sequence[float]) -> Path:
    """Write `t,s` rows of the front trajectory."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "s"])
        for t in times:
            writer.writerow([repr(float(t)), repr(front_position(sol, float(t)))])
    return path
