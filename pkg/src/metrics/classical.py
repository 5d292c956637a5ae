"""
src/metrics/classical.py
Hyperbolic metric, triangular ratio metric, point-pair function and the
disk majorant m_D.
"""
from __future__ import annotations

import math

import numpy as np

from src.geometry.domains import (
    Domain,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    require_inside,
)
from src.metrics.result import MetricResult, Method, coincident
from src.numerics.quartic import QuarticCoefficients, solve_quartic
from src.numerics.scalar import TWO_PI, minimize_periodic
from src.utils.config import numerics_value
from src.utils.logger import get_logger

log = get_logger("metrics")

DISK = UnitDisk()
HALFPLANE = UpperHalfPlane()


# ── Hyperbolic metric ─────────────────────────────────────────────

def hyperbolic_disk(z1: complex, z2: complex) -> float:
    z1, z2 = require_inside(DISK, z1, z2)
    if z1 == z2:
        return 0.0
    # sinh(ρ/2) = |z1−z2| / √((1−|z1|²)(1−|z2|²)); avoids atanh near 1
    r1, r2 = abs(z1), abs(z2)
    gap = math.sqrt((1.0 - r1) * (1.0 + r1) * (1.0 - r2) * (1.0 + r2))
    return 2.0 * math.asinh(abs(z1 - z2) / gap)


def hyperbolic_halfplane(z1: complex, z2: complex) -> float:
    """tanh(ρ/2) = |z1−z2| / |z1−conj z2|, evaluated as sinh(ρ/2) = |z1−z2| / (2√(y1·y2))."""
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    if z1 == z2:
        return 0.0
    return 2.0 * math.asinh(abs(z1 - z2) / (2.0 * math.sqrt(z1.imag * z2.imag)))


# ── Triangular ratio metric ───────────────────────────────────────

def s_halfplane(z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    if z1 == z2:
        return coincident()
    lam = z1.imag / (z1.imag + z2.imag)
    foot = complex(z1.real + lam * (z2.real - z1.real), 0.0)
    value = abs(z1 - z2) / abs(z1 - z2.conjugate())
    return MetricResult(value, foot, Method.CLOSED_FORM, 0.0)


def reflection_residual(z1: complex, z2: complex, u: complex) -> float:
    """|Im(u·conj(w))| with w the sum of unit vectors from the foci to u."""
    w = (u - z1) / abs(u - z1) + (u - z2) / abs(u - z2)
    return abs((u * w.conjugate()).imag)


def s_disk(z1: complex, z2: complex) -> MetricResult:
    """
    Triangular ratio metric of the unit disk.

    Candidate boundary points are the unit-circle roots of the reflection
    quartic; the one with the smallest focal-distance sum wins. A coarse
    grid cross-checks the winner. The dense scan runs only when no root
    lands on the circle or the coarse grid beats every root.
    """
    z1, z2 = require_inside(DISK, z1, z2)
    if z1 == z2:
        return coincident()

    def focal_sum(thetas: np.ndarray) -> np.ndarray:
        u = np.exp(1j * thetas)
        return np.abs(z1 - u) + np.abs(z2 - u)

    unit_tol = float(numerics_value("quartic")["unit_circle_tol"])
    roots = solve_quartic(QuarticCoefficients.alhazen(z1, z2))
    candidates = [complex(r) / abs(r) for r in roots if abs(abs(r) - 1.0) <= unit_tol]
    sums = [abs(z1 - u) + abs(z2 - u) for u in candidates]

    check_n = int(numerics_value("s_disk_check_grid"))
    coarse = float(np.min(focal_sum(TWO_PI * np.arange(check_n) / check_n)))
    if not sums or coarse < min(sums) * (1.0 - 1e-12):
        log.debug(f"s_disk({z1}, {z2}): {len(sums)} circle roots, falling back to the dense scan")
        theta, _ = minimize_periodic(focal_sum, int(numerics_value("s_disk_scan_grid")))
        candidates.append(complex(math.cos(theta), math.sin(theta)))
        sums.append(abs(z1 - candidates[-1]) + abs(z2 - candidates[-1]))

    best = min(range(len(sums)), key=sums.__getitem__)
    u = candidates[best]
    return MetricResult(
        float(abs(z1 - z2) / sums[best]),
        u,
        Method.QUARTIC_SOLVE,
        float(reflection_residual(z1, z2, u)),
    )


# ── Point-pair function and m_D ───────────────────────────────────

def point_pair(d: Domain, z1: complex, z2: complex) -> float:
    z1, z2 = require_inside(d, z1, z2)
    if z1 == z2:
        return 0.0
    dist = abs(z1 - z2)
    return dist / math.sqrt(dist * dist + 4.0 * boundary_distance(d, z1) * boundary_distance(d, z2))


def m_disk(z1: complex, z2: complex) -> float:
    z1, z2 = require_inside(DISK, z1, z2)
    if z1 == z2:
        return 0.0
    return abs(z1 - z2) / (2.0 - abs(z1 + z2))
