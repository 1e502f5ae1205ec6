"""Independent finite-difference cross-check of a similarity solution.

The moving domain [0, s(t)] is immobilized with y = x / s(t), giving

    T_t = (k(T) T_y)_y / (gamma(T) s^2) + y (s'/s) T_y - mu(T) T_y / (gamma(T) sqrt(t) s)

on the fixed strip y in [0, 1], coupled to the front energy balance
s' = -k(T_m) T_y(1) / (s rho0 ell).  An explicit first-order step with
centered space differences marches this from similarity initial data at t0;
agreement with the similarity field and front over [t0, t1] is a consistency
check of the whole pipeline, not an initial-value solver for t -> 0 (the
similarity solution is singular there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import (
    BCKind,
    BoundaryCondition,
    ThermalModel,
    _default_estimate_range,
    estimate_bounds,
    eval_coefficient,
)
from .errors import ConfigError, ConvergenceError
from .reconstruct import PhysicalSolution, front_position

__all__ = ["FrontFixedScheme", "PdeDiscrepancy", "verify"]


@dataclass(frozen=True)
class FrontFixedScheme:
    """Discretization of the front-fixed strip.

    ``dt=None`` selects the diffusive stability step
    safety * dy^2 * s^2 * gamma_m / k_M, recomputed as the front advances.
    An explicit ``dt`` must respect the hard limit (safety 0.5) at t0.
    """

    n_space: int = 200
    t0: float = 1.0
    t1: float = 2.0
    safety: float = 0.4
    dt: float | None = None
    sample_every: int = 16

    def __post_init__(self):
        if self.n_space < 8:
            raise ConfigError(f"need at least 8 space intervals, got {self.n_space}")
        if not (self.t0 > 0.0 and self.t1 >= self.t0):
            raise ConfigError(f"need 0 < t0 <= t1, got t0={self.t0}, t1={self.t1}")
        if not (0.0 < self.safety <= 0.5):
            raise ConfigError(f"safety factor must lie in (0, 0.5], got {self.safety}")
        if self.dt is not None and not self.dt > 0.0:
            raise ConfigError(f"explicit dt must be positive, got {self.dt}")
        if self.sample_every < 1:
            raise ConfigError("sample_every must be >= 1")


@dataclass(frozen=True)
class PdeDiscrepancy:
    """Largest relative deviations of the marched field from the similarity solution."""

    s_rel_max: float
    s_rel_final: float
    T_rel_max: float
    steps: int
    t_final: float


def _face_temperature(bc: BoundaryCondition, model, T1, T2, T0_prev, dy, s, t):
    """Face value from the flux condition, one-sided second-order in y."""
    kind = bc.kind
    if kind is BCKind.DIRICHLET:
        return bc.T_star
    T0 = T0_prev
    for _ in range(8):
        k0 = float(eval_coefficient(model.k, np.asarray([T0]))[0])
        c = 2.0 * dy * s / (k0 * math.sqrt(t))
        if kind is BCKind.NEUMANN:
            new = (4.0 * T1 - T2 + c * bc.q) / 3.0
        elif kind is BCKind.ROBIN:
            new = (4.0 * T1 - T2 + c * bc.h * bc.T_star) / (3.0 + c * bc.h)
        else:
            # radiative: one Newton step on the quartic balance per sweep
            g = 3.0 * T0 - 4.0 * T1 + T2 + c * (bc.h * (T0 - bc.T_star) + bc.sigma * bc.epsilon * (T0**4 - bc.T_star**4))
            gp = 3.0 + c * (bc.h + 4.0 * bc.sigma * bc.epsilon * T0**3)
            new = T0 - g / gp
        if abs(new - T0) <= 1e-12 * max(1.0, abs(new)):
            T0 = new
            break
        T0 = new
    return T0


def verify(
    sol: PhysicalSolution,
    model: ThermalModel,
    bc: BoundaryCondition,
    scheme: FrontFixedScheme = FrontFixedScheme(),
) -> PdeDiscrepancy:
    """March the front-fixed scheme from similarity data at t0 and measure drift.

    Raises ConvergenceError if the field blows up (growth beyond ten times
    the initial temperature range or non-finite values).
    """
    bounds = model.bounds or estimate_bounds(model, _default_estimate_range(bc))
    n = scheme.n_space
    y = np.linspace(0.0, 1.0, n + 1)
    dy = 1.0 / n

    t = scheme.t0
    s = front_position(sol, t)
    lam = sol.lambda_tilde
    alpha0 = sol.alpha0

    def similarity_T(y_nodes, s_now, t_now):
        xi = y_nodes * s_now / (2.0 * math.sqrt(alpha0 * t_now))
        return np.asarray(sol.temperature_of_f(sol.f_at(np.minimum(xi, lam))), dtype=float)

    T = similarity_T(y, s, t)
    T[-1] = bc.T_m
    amp = max(float(np.max(T) - np.min(T)), 1e-300)
    T_lo0, T_hi0 = float(np.min(T)), float(np.max(T))

    hard_dt = 0.5 * dy**2 * s**2 * bounds.gamma_m / bounds.k_M
    if scheme.dt is not None and scheme.dt > hard_dt:
        raise ConfigError(
            f"explicit dt={scheme.dt:g} violates the diffusive stability limit {hard_dt:g} at t0"
        )

    k_front = float(eval_coefficient(model.k, np.asarray([bc.T_m]))[0])
    rho_ell = model.rho0 * model.ell

    s_rel_max = 0.0
    T_rel_max = 0.0
    steps = 0

    def record_T():
        nonlocal T_rel_max
        T_rel = float(np.max(np.abs(T - similarity_T(y, s, t)))) / amp
        T_rel_max = max(T_rel_max, T_rel)

    record_T()
    while t < scheme.t1 - 1e-15 * scheme.t1:
        dt = scheme.dt if scheme.dt is not None else scheme.safety * dy**2 * s**2 * bounds.gamma_m / bounds.k_M
        dt = min(dt, scheme.t1 - t)

        k = eval_coefficient(model.k, T)
        gam = eval_coefficient(model.rho_c, T)
        mu = eval_coefficient(model.mu, T)

        sdot = -k_front * (T[-1] - T[-2]) / (dy * s * rho_ell)

        kp = 0.5 * (k[1:-1] + k[2:])
        km = 0.5 * (k[1:-1] + k[:-2])
        diff = (kp * (T[2:] - T[1:-1]) - km * (T[1:-1] - T[:-2])) / (dy**2 * s**2)
        Ty = (T[2:] - T[:-2]) / (2.0 * dy)
        rhs = diff / gam[1:-1] + y[1:-1] * (sdot / s) * Ty - mu[1:-1] * Ty / (gam[1:-1] * math.sqrt(t) * s)

        T0_prev = T[0]
        T[1:-1] += dt * rhs
        s += dt * sdot
        t += dt
        T[-1] = bc.T_m
        T[0] = _face_temperature(bc, model, T[1], T[2], T0_prev, dy, s, t)
        steps += 1

        if not np.all(np.isfinite(T)) or np.max(T) - np.min(T) > 10.0 * amp or s <= 0.0:
            raise ConvergenceError(
                f"front-fixed scheme unstable at step {steps} (t={t:.6g}): field range "
                f"[{np.min(T):.3g}, {np.max(T):.3g}] vs initial [{T_lo0:.3g}, {T_hi0:.3g}], s={s:.6g}"
            )

        s_rel = abs(s - front_position(sol, t)) / front_position(sol, t)
        s_rel_max = max(s_rel_max, s_rel)
        if steps % scheme.sample_every == 0:
            record_T()

    record_T()
    s_rel_final = abs(s - front_position(sol, t)) / front_position(sol, t) if steps else 0.0
    return PdeDiscrepancy(
        s_rel_max=s_rel_max,
        s_rel_final=s_rel_final,
        T_rel_max=T_rel_max,
        steps=steps,
        t_final=t,
    )
