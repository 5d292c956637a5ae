"""
src/numerics/scalar.py
One-dimensional kernels: golden-section search, periodic minimisation and
bracketed bisection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from src.utils.config import bisection_max_iter, golden_settings
from src.utils.errors import BadBracketError

INV_PHI = (math.sqrt(5) - 1) / 2         # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise BadBracketError(f"Bracket needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float | None = None,
    max_iter: int | None = None,
) -> tuple[float, float]:
    """
    Golden-section search for a minimum of f on [a, b].

    Returns (x, f(x)) for the best point evaluated. Stops when the bracket is
    narrower than tol or after max_iter shrinks.
    """
    default_tol, default_iter = golden_settings()
    tol = default_tol if tol is None else tol
    max_iter = default_iter if max_iter is None else max_iter

    a, b = min(a, b), max(a, b)
    h = b - a
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc, yd = f(c), f(d)
    best_x, best_y = (c, yc) if yc <= yd else (d, yd)

    for _ in range(max_iter):
        if h <= tol:
            break
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
            if yc < best_y:
                best_x, best_y = c, yc
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)
            if yd < best_y:
                best_x, best_y = d, yd
    return best_x, best_y


def minimize_periodic(f: Callable[[np.ndarray], np.ndarray], grid_n: int) -> tuple[float, float]:
    """
    Global minimum of a continuous 2π-periodic f.

    f must accept an array of angles. Coarse scan on grid_n equispaced angles,
    then golden-section on the two grid cells around the best one. The
    returned value never exceeds the coarse-grid minimum.
    """
    if grid_n < 8:
        raise ValueError(f"grid_n must be at least 8, got {grid_n}")
    h = TWO_PI / grid_n
    thetas = h * np.arange(grid_n)
    values = np.asarray(f(thetas), dtype=float)
    k = int(np.argmin(values))
    grid_theta, grid_value = float(thetas[k]), float(values[k])

    def scalar(t: float) -> float:
        return float(np.asarray(f(np.array([t])))[0])

    theta, value = golden_section(scalar, grid_theta - h, grid_theta + h)
    if value > grid_value:
        theta, value = grid_theta, grid_value
    return theta % TWO_PI, value


def bisect_root(f: Callable[[float], float], b: Bracket, tol: float) -> float:
    """
    Root of f inside b by bisection.

    Returns the evaluated point with the smallest |f| seen; the sequence of
    midpoints is fixed by the bracket, so a smaller tol only extends it.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = b.lo, b.hi
    f_lo, f_hi = f(lo), f(hi)
    if f_lo * f_hi > 0:
        raise BadBracketError(f"f has the same sign at both ends of [{lo}, {hi}]")
    best_t, best_abs = (lo, abs(f_lo)) if abs(f_lo) <= abs(f_hi) else (hi, abs(f_hi))
    if best_abs == 0.0:
        return best_t

    for _ in range(bisection_max_iter()):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # no representable midpoint left
        f_mid = f(mid)
        if abs(f_mid) < best_abs:
            best_t, best_abs = mid, abs(f_mid)
        if f_mid == 0.0:
            break
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return best_t
