"""
src/barrlund/boundary_scan.py
Supremum over the boundary by dense sampling plus golden-section refinement
on the boundary parameter. Used as the fallback for (domain, p) pairs with
no closed form and, through validation.oracle, as the independent oracle.
"""
from __future__ import annotations

import numpy as np

from src.barrlund.exponent import PExponent
from src.geometry.boundary import BoundaryWindow, PointCurve, boundary_curve
from src.geometry.domains import Domain
from src.metrics.result import MetricResult, Method
from src.numerics.scalar import golden_section


def _p_norm_scalar(a: float, b: float, p: PExponent) -> float:
    m = max(a, b)
    if p.is_infinite:
        return m
    if m <= 0.0:
        return 0.0
    q = p.value
    return m * ((a / m) ** q + (b / m) ** q) ** (1.0 / q)


def p_norm(a: np.ndarray, b: np.ndarray, p: PExponent) -> np.ndarray:
    """(a^p + b^p)^{1/p}, or max(a, b) for p = ∞; scaled to avoid overflow."""
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        return _p_norm_scalar(float(a), float(b), p)
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    m = np.maximum(a, b)
    if p.is_infinite:
        return m
    with np.errstate(divide="ignore", invalid="ignore"):
        out = m * ((a / m) ** p.value + (b / m) ** p.value) ** (1.0 / p.value)
    return np.where(m > 0, out, 0.0)


def scan_sup(
    d: Domain,
    p: PExponent,
    z1: complex,
    z2: complex,
    samples: int,
    window: BoundaryWindow | None = None,
) -> MetricResult:
    """
    sup over boundary points w of |z1 - z2| / ‖(|z1 - w|, |z2 - w|)‖_p.

    No membership check: the expression is defined for any pair of points
    off the boundary, which the level-set grid relies on.
    """
    if z1 == z2:
        return MetricResult(0.0, None, Method.SCAN, 0.0)
    curve = boundary_curve(d, window)
    if isinstance(curve, PointCurve):
        w = curve.center
        den = float(p_norm(abs(z1 - w), abs(z2 - w), p))
        return MetricResult(abs(z1 - z2) / den, w, Method.SCAN, 0.0)

    s = curve.grid(samples)
    pts = curve.at(s)
    dens = p_norm(np.abs(z1 - pts), np.abs(z2 - pts), p)
    k = int(np.argmin(dens))
    grid_s, grid_den = float(s[k]), float(dens[k])

    h = (curve.hi - curve.lo) / samples if curve.periodic else float(s[1] - s[0])
    lo, hi = grid_s - h, grid_s + h
    if not curve.periodic:
        lo, hi = max(lo, curve.lo), min(hi, curve.hi)

    def den_at(t: float) -> float:
        w = curve.point(t)
        return float(p_norm(abs(z1 - w), abs(z2 - w), p))

    t, den = golden_section(den_at, lo, hi)
    if den > grid_den:
        t, den = grid_s, grid_den
    w = curve.point(t)
    return MetricResult(abs(z1 - z2) / den, w, Method.SCAN, 0.0)
