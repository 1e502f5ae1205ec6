"""Outer fixed point for the front coefficient: bracket and bisect V(lambda) = lambda.

V(lambda) evaluates the front condition on the inner fixed-point profile:

    Dirichlet:  V = Ste/2 * E(f)(lambda) / Phi(f)(lambda)
    Neumann:    V = q* / (M L*(f(lambda))) * E(f)(lambda)
    Robin:      V = Ste Bi E(f)(lambda) / (1 + 2 Bi Phi(f)(lambda))
    radiative:  V = Ste G(f)(0) / 2 * E(f)(lambda)

Sandwich curves V1 <= V <= V2 (V1 = 0 for Robin/radiative) provide a
bracket (lambda1, lambda2) with a guaranteed sign change of V(lambda) -
lambda whenever the existence hypotheses hold; bisection then finds the
front coefficient.  Bisection is deliberate: V is only known continuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erf

from .coefficients import BCKind, DimensionlessProblem, eval_coefficient
from .errors import ConfigError, ConvergenceError
from .fixed_point import InnerResult, _radiative_g0, solve_profile
from .kernels import DEFAULT_GRID_N, ProfileGrid
from .rootfind import bisect_root, refine_roots, sign_change_intervals

__all__ = [
    "SolverSettings",
    "DEFAULT_SETTINGS",
    "Bracket",
    "SolveReport",
    "v1_curve",
    "v2_curve",
    "v_value",
    "bracket",
    "front_flux_residual",
    "solve_lambda",
    "report_as_dict",
]

_FALLBACK_EPS = 1e-6


@dataclass(frozen=True)
class SolverSettings:
    """Numerical knobs shared by the inner and outer iterations."""

    n: int = DEFAULT_GRID_N
    inner_tol: float = 1e-10
    max_iter: int = 200
    outer_tol: float = 1e-9
    lambda_max: float = 10.0
    scan_points: int = 1024

    def __post_init__(self):
        if self.n < 16:
            raise ConfigError(f"grid must have at least 16 intervals, got {self.n}")
        if min(self.inner_tol, self.outer_tol) <= 0.0:
            raise ConfigError("tolerances must be positive")
        if self.max_iter < 1 or self.scan_points < 8 or self.lambda_max <= 0.0:
            raise ConfigError("invalid solver settings")


DEFAULT_SETTINGS = SolverSettings()


@dataclass(frozen=True)
class Bracket:
    """Search interval for the front coefficient.

    ``analytic`` brackets come from the sandwich curves: lambda1 solves
    V1(lambda) = lambda (0 for Robin/radiative) and lambda2 is the smallest
    root of V2(lambda) = lambda at or beyond it.  Coefficients sitting
    exactly on their bounds collapse the sandwich, so lambda1 = lambda2 is
    possible; the solver widens its search a hair around such brackets.
    When the lambda2 search fails the fallback interval [1e-6, lambda_max]
    is used instead.
    """

    lambda1: float
    lambda2: float
    provenance: str
    extra_sign_changes: int = 0

    def __post_init__(self):
        if not self.lambda1 <= self.lambda2:
            raise ConfigError(f"bracket needs lambda1 <= lambda2, got [{self.lambda1}, {self.lambda2}]")
        if self.provenance not in ("analytic", "fallback"):
            raise ConfigError(f"unknown bracket provenance {self.provenance!r}")


def v1_curve(prob: DimensionlessProblem, lam: float) -> float:
    """Lower sandwich curve (identically 0 for Robin/radiative problems)."""
    kind = prob.bc_kind
    if kind is BCKind.DIRICHLET:
        return prob.Ste * prob.mu_M * math.exp(-2.0 * lam * prob.mu_M / prob.L_m - 2.0 * lam**2 * prob.N_M / prob.L_m)
    if kind is BCKind.NEUMANN:
        return prob.q_star / (prob.M * prob.L_M) * math.exp(-(lam**2) * prob.N_M / prob.L_M)
    return 0.0


def v2_curve(prob: DimensionlessProblem, lam: float) -> float:
    """Upper sandwich curve for the boundary condition in play."""
    kind = prob.bc_kind
    if kind is BCKind.NEUMANN:
        return prob.q_star / (prob.M * prob.L_m) * math.exp(
            2.0 * lam * prob.mu_M / prob.L_m - lam**2 * prob.N_M / prob.L_m
        )
    if kind is BCKind.RADIATIVE:
        amp = prob.Ste * (2.0 * prob.Bi + prob.r * prob.T_star**4) / 2.0
        return amp * math.exp(2.0 * lam * prob.mu_M / prob.L_m - lam**2 * prob.N_m / prob.L_M)
    # Dirichlet and Robin share the erf-based envelope
    scale = prob.Ste / math.sqrt(math.pi) * math.sqrt(prob.N_M / prob.L_m) * prob.L_M
    denom = erf(math.sqrt(prob.N_M / prob.L_m) * lam)
    if denom == 0.0:
        return math.inf
    return scale * math.exp(2.0 * lam * prob.mu_M / prob.L_m - lam**2 * prob.N_m / prob.L_M) / denom


def v_value(
    prob: DimensionlessProblem,
    lam: float,
    settings: SolverSettings = DEFAULT_SETTINGS,
    f0: ProfileGrid | None = None,
) -> tuple[float, InnerResult]:
    """Solve the inner profile at lam and evaluate the front condition.

    Inner non-convergence propagates as ConvergenceError with the offending
    lambda attached.
    """
    inner = solve_profile(
        prob, lam, tol=settings.inner_tol, max_iter=settings.max_iter, f0=f0, n=settings.n
    )
    if not inner.converged:
        raise ConvergenceError(
            f"inner iteration did not reach tol={settings.inner_tol:g} within "
            f"{settings.max_iter} iterations at lambda={lam!r} (residual {inner.residual:.3g})",
            lam=lam,
        )
    ke = inner.kernels
    E_lam = float(ke.E[-1])
    phi_lam = ke.phi_lam
    kind = prob.bc_kind
    if kind is BCKind.DIRICHLET:
        value = 0.5 * prob.Ste * E_lam / phi_lam
    elif kind is BCKind.NEUMANN:
        L_end = float(eval_coefficient(prob.L_star, np.asarray([inner.profile.f[-1]]))[0])
        value = prob.q_star / (prob.M * L_end) * E_lam
    elif kind is BCKind.ROBIN:
        value = prob.Ste * prob.Bi * E_lam / (1.0 + 2.0 * prob.Bi * phi_lam)
    else:
        g0 = _radiative_g0(prob, float(inner.profile.f[0]))
        value = 0.5 * prob.Ste * g0 * E_lam
    return value, inner


def _lambda1(prob: DimensionlessProblem) -> float:
    kind = prob.bc_kind
    if kind in (BCKind.ROBIN, BCKind.RADIATIVE):
        return 0.0
    v0 = v1_curve(prob, 0.0)
    if v0 <= 0.0:
        return 0.0
    # v1 decreases from v0 while the identity grows, so the root is in (0, v0]
    return bisect_root(lambda x: v1_curve(prob, x) - x, 0.0, v0, xtol=1e-14)


def bracket(prob: DimensionlessProblem, settings: SolverSettings = DEFAULT_SETTINGS) -> Bracket:
    """Compute the sandwich bracket, falling back to [1e-6, lambda_max] if needed.

    The upper curve sits above the identity everywhere below lambda1, so the
    scan starts near zero: its first crossing is the smallest admissible
    lambda2 and coincides with lambda1 when the sandwich is degenerate.
    """
    lam1 = _lambda1(prob)
    g2 = lambda x: v2_curve(prob, x) - x
    lo = settings.lambda_max * 1e-9
    intervals = sign_change_intervals(g2, lo, settings.lambda_max, settings.scan_points)
    if not intervals:
        return Bracket(min(lam1, _FALLBACK_EPS), settings.lambda_max, "fallback", 0)
    roots = refine_roots(g2, intervals[:1], xtol=1e-14)
    return Bracket(lam1, max(roots[0], lam1), "analytic", max(len(intervals) - 1, 0))


def front_flux_residual(prob: DimensionlessProblem, profile: ProfileGrid) -> float:
    """Relative defect of the front flux condition, via a one-sided difference.

    The profile derivative at the front is estimated with the second-order
    backward three-point formula, independently of the integral identities
    the solver itself uses.
    """
    f = profile.f
    n = profile.n
    if n < 2:
        raise ConfigError("front flux residual needs at least 3 nodes")
    h = profile.step
    fp = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h)
    if prob.bc_kind is BCKind.NEUMANN:
        target = -prob.M * profile.lam
        return abs(fp - target) / abs(target)
    L_end = float(eval_coefficient(prob.L_star, np.asarray([f[n]]))[0])
    target = 2.0 * profile.lam / prob.Ste
    return abs(L_end * fp - target) / abs(target)


@dataclass(frozen=True)
class SolveReport:
    """Full outcome of one front-coefficient solve."""

    lambda_tilde: float
    bc_kind: BCKind
    profile: ProfileGrid
    inner: InnerResult
    v_at_lambda: float
    outer_residual: float
    outer_iterations: int
    bracket: Bracket
    front_flux_residual: float
    profile_max: float
    existence: "ExistenceReport"
    settings: SolverSettings


def solve_lambda(prob: DimensionlessProblem, settings: SolverSettings = DEFAULT_SETTINGS) -> SolveReport:
    """Find lambda with |V(lambda) - lambda| <= outer_tol by bisection over the bracket.

    Each V evaluation re-solves the inner problem warm-started from the
    previous profile (the inner fixed point is unique, so the start only
    affects iteration counts).  If the bracket endpoints do not show a sign
    change, the bracket is scanned at 64 points before giving up.
    """
    from .existence import certify  # deferred: existence builds on this module's bracket

    cert = certify(prob, settings)
    br = cert.bracket
    # widen both ends a hair: with coefficients sitting exactly on their
    # bounds the sandwich is tight and the root can coincide with either
    # bracket end, where quadrature bias leaves the residual barely one-signed
    lo = max(br.lambda1 * (1.0 - 1e-4), br.lambda2 * 1e-8)
    hi = br.lambda2 * (1.0 + 1e-4)

    warm: dict[str, np.ndarray | None] = {"f": None}

    def g(lam: float) -> tuple[float, InnerResult]:
        f0 = None
        if warm["f"] is not None:
            f0 = ProfileGrid.from_values(lam, warm["f"])
        value, inner = v_value(prob, lam, settings, f0=f0)
        warm["f"] = inner.profile.f
        return value - lam, inner

    ga, inner_a = g(lo)
    gb, inner_b = g(hi)
    a, b = lo, hi
    if np.sign(ga) == np.sign(gb):
        # no sign change at the endpoints: hypotheses are likely violated,
        # scan the bracket before failing
        xs = np.linspace(lo, hi, 64)
        prev_x, prev_val, prev_inner = lo, ga, inner_a
        found = False
        for x in xs[1:]:
            val, inner_x = g(float(x))
            if np.sign(val) != np.sign(prev_val):
                a, ga, inner_a = prev_x, prev_val, prev_inner
                b, gb, inner_b = float(x), val, inner_x
                found = True
                break
            prev_x, prev_val, prev_inner = float(x), val, inner_x
        if not found:
            raise ConvergenceError(
                f"V(lambda) - lambda has no sign change over the {br.provenance} bracket "
                f"[{br.lambda1:.6g}, {br.lambda2:.6g}] sampled at 64 points "
                f"(endpoint values {ga:.3g}, {gb:.3g}); existence hypotheses are likely violated",
                lam=None,
            )

    best = (a, ga, inner_a) if abs(ga) <= abs(gb) else (b, gb, inner_b)
    outer_iterations = 0
    while abs(best[1]) > settings.outer_tol and outer_iterations < 200:
        mid = 0.5 * (a + b)
        if b - a <= 1e-15 * max(1.0, b):
            break
        gm, inner_m = g(mid)
        if abs(gm) < abs(best[1]):
            best = (mid, gm, inner_m)
        if np.sign(gm) == np.sign(ga):
            a, ga = mid, gm
        else:
            b = mid
        outer_iterations += 1

    lam_tilde, g_best, inner_best = best
    profile = inner_best.profile
    return SolveReport(
        lambda_tilde=lam_tilde,
        bc_kind=prob.bc_kind,
        profile=profile,
        inner=inner_best,
        v_at_lambda=g_best + lam_tilde,
        outer_residual=abs(g_best),
        outer_iterations=outer_iterations,
        bracket=br,
        front_flux_residual=front_flux_residual(prob, profile),
        profile_max=float(np.max(profile.f)),
        existence=cert,
        settings=settings,
    )


def report_as_dict(report: SolveReport) -> dict:
    """JSON-ready view of a SolveReport (deterministic, no timestamps)."""
    from .existence import report_as_dict as existence_as_dict

    inner = report.inner
    return {
        "lambda": report.lambda_tilde,
        "bc_kind": report.bc_kind.value,
        "v_at_lambda": report.v_at_lambda,
        "outer_residual": report.outer_residual,
        "outer_iterations": report.outer_iterations,
        "bracket": {
            "lambda1": report.bracket.lambda1,
            "lambda2": report.bracket.lambda2,
            "provenance": report.bracket.provenance,
            "extra_sign_changes": report.bracket.extra_sign_changes,
        },
        "inner": {
            "iterations": inner.iterations,
            "residual": inner.residual,
            "converged": inner.converged,
            "contraction_observed": inner.contraction_observed,
            "theoretical_rate": inner.theoretical_rate,
            "clamped": inner.clamped,
            "escaped_unit_interval": inner.escaped_unit_interval,
        },
        "front_flux_residual": report.front_flux_residual,
        "profile_max": report.profile_max,
        "grid_n": report.settings.n,
        "existence": existence_as_dict(report.existence),
    }
