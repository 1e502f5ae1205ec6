"""Scalar root helpers: plain bisection and sign-change scanning.

Bisection is used throughout instead of faster root finders because the
functions involved are only known to be continuous, and a residual-based
stopping rule is needed for the outer front-coefficient equation.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import BracketError


def bisect_root(
    fn: Callable[[float], float],
    a: float,
    b: float,
    *,
    xtol: float = 1e-13,
    ftol: float = 0.0,
    max_iter: int = 256,
) -> float:
    """Bisection on [a, b]; fn(a) and fn(b) must not have the same strict sign.

    Stops when the interval width drops below ``xtol`` or the midpoint
    residual magnitude drops to ``ftol``.
    """
    fa = fn(a)
    fb = fn(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if np.sign(fa) == np.sign(fb):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]: f(a)={fa!r}, f(b)={fb!r}")
    mid = 0.5 * (a + b)
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        fm = fn(mid)
        if fm == 0.0 or (ftol > 0.0 and abs(fm) <= ftol):
            return mid
        if np.sign(fa) == np.sign(fm):
            a, fa = mid, fm
        else:
            b = mid
        if b - a <= xtol:
            break
    return 0.5 * (a + b)


def sign_change_intervals(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    points: int,
) -> list[tuple[float, float]]:
    """All bracketing sub-intervals of a uniform scan of fn over (lo, hi].

    Non-finite values (the scan may touch a pole) are treated by their sign;
    NaN samples are skipped.
    """
    xs = np.linspace(lo, hi, points)
    brackets: list[tuple[float, float]] = []
    prev_x: float | None = None
    prev_s = 0.0
    for x in xs:
        v = fn(float(x))
        if np.isnan(v):
            continue
        s = np.sign(v)
        if prev_x is not None and s != 0.0 and prev_s != 0.0 and s != prev_s:
            brackets.append((prev_x, float(x)))
        if s != 0.0:
            prev_x, prev_s = float(x), s
        else:
            # exact zero at a scan point: record a degenerate bracket
            brackets.append((float(x), float(x)))
            prev_x, prev_s = float(x), 0.0
    return brackets


def refine_roots(
    fn: Callable[[float], float],
    brackets: Sequence[tuple[float, float]],
    *,
    xtol: float = 1e-13,
) -> list[float]:
    roots = []
    for a, b in brackets:
        if a == b:
            roots.append(a)
        else:
            roots.append(bisect_root(fn, a, b, xtol=xtol))
    return roots
