"""Shared test helpers: independent oracles kept deliberately separate
from the library's own numerics."""

from __future__ import annotations

import numpy as np
import pytest

from meltfront import BCKind, ProfileGrid, linear_problem


def cumtrapz_ref(y: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Independent cumulative trapezoid (plain cumsum, no scipy)."""
    dx = np.diff(x)
    return np.concatenate([[0.0], np.cumsum(0.5 * dx * (y[1:] + y[:-1]))])


def bisect_ref(fn, a: float, b: float, tol: float = 1e-14, it: int = 200) -> float:
    """Independent scalar bisection."""
    fa, fb = fn(a), fn(b)
    assert fa * fb <= 0.0, (fa, fb)
    for _ in range(it):
        m = 0.5 * (a + b)
        fm = fn(m)
        if fa * fm <= 0.0:
            b = m
        else:
            a, fa = m, fm
        if b - a < tol:
            break
    return 0.5 * (a + b)


def random_profile(rng: np.random.Generator, lam: float, n: int, lo: float = 0.0, hi: float = 1.0) -> ProfileGrid:
    return ProfileGrid.from_values(lam, rng.uniform(lo, hi, n + 1))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)


@pytest.fixture
def linear_dirichlet():
    """Workhorse problem: linear family alpha = beta = 0.1, Pe = 0.5."""
    return linear_problem(BCKind.DIRICHLET, alpha=0.1, beta=0.1, Pe=0.5, Ste=1.0)
