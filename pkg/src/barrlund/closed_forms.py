"""
src/barrlund/closed_forms.py
Exact and semi-analytic evaluators of the Barrlund distance on the disk,
its exterior, the upper half-plane and the punctured plane.
"""
from __future__ import annotations

import math

import numpy as np

from src.barrlund.exponent import PExponent
from src.barrlund.boundary_scan import p_norm
from src.geometry.domains import (
    Domain,
    ExteriorUnitDisk,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    nearest_boundary_point,
    require_inside,
)
from src.metrics.result import MetricResult, Method, coincident
from src.numerics.scalar import Bracket, bisect_root, minimize_periodic
from src.utils.config import numerics_value
from src.utils.errors import OutOfRangeError

DISK = UnitDisk()
EXTERIOR = ExteriorUnitDisk()
HALFPLANE = UpperHalfPlane()


def _finite_p(p: float) -> float:
    p = float(p)
    if not (p >= 1.0 and math.isfinite(p)):
        raise OutOfRangeError(f"Expected finite p >= 1, got {p}")
    return p


# ── p = 2 ─────────────────────────────────────────────────────────

def b_p2_midpoint(d: Domain, z1: complex, z2: complex) -> MetricResult:
    """|z1−z2| / √(2·d(m)² + ½|z1−z2|²) with m the midpoint; exact on every domain."""
    z1, z2 = require_inside(d, z1, z2)
    if z1 == z2:
        return coincident()
    m = 0.5 * (z1 + z2)
    dm = boundary_distance(d, m)
    dist = abs(z1 - z2)
    value = dist / math.sqrt(2.0 * dm * dm + 0.5 * dist * dist)
    return MetricResult(value, nearest_boundary_point(d, m), Method.CLOSED_FORM, 0.0)


def b_disk_p2_closed(z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(DISK, z1, z2)
    if z1 == z2:
        return coincident()
    s = abs(z1 + z2)
    value = abs(z1 - z2) / math.sqrt(2.0 + abs(z1) ** 2 + abs(z2) ** 2 - 2.0 * s)
    u = (z1 + z2) / s if s > 0 else 1 + 0j
    return MetricResult(value, u, Method.CLOSED_FORM, 0.0)


def b_halfplane_p2_closed(z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    if z1 == z2:
        return coincident()
    dist = abs(z1 - z2)
    value = math.sqrt(2.0) * dist / math.hypot(dist, (z1 + z2).imag)
    return MetricResult(value, complex(0.5 * (z1 + z2).real, 0.0), Method.CLOSED_FORM, 0.0)


# ── Half-plane, finite p ──────────────────────────────────────────

def _halfplane_slope(p: float, z1: complex, z2: complex):
    """S_p'(t)/p = Σ (t − Re z_k)·|t − z_k|^{p−2}."""
    def slope(t: float) -> float:
        return sum((t - z.real) * abs(t - z) ** (p - 2.0) for z in (z1, z2))
    return slope


def b_halfplane_p(p: float, z1: complex, z2: complex) -> MetricResult:
    p = _finite_p(p)
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    if z1 == z2:
        return coincident()
    if z1.real == z2.real:
        t0 = z1.real
        value = abs(z1.imag - z2.imag) / (z1.imag ** p + z2.imag ** p) ** (1.0 / p)
        return MetricResult(value, complex(t0, 0.0), Method.CLOSED_FORM, 0.0)

    slope = _halfplane_slope(p, z1, z2)
    bracket = Bracket(min(z1.real, z2.real), max(z1.real, z2.real))
    t0 = bisect_root(slope, bracket, float(numerics_value("halfplane_bisect_tol")))
    den = float(p_norm(abs(t0 - z1), abs(t0 - z2), PExponent(p)))
    return MetricResult(abs(z1 - z2) / den, complex(t0, 0.0), Method.ROOT_SOLVE, abs(p * slope(t0)))


def halfplane_lambda(p: float, z1: complex, z2: complex) -> float:
    """
    λ₀ ∈ [0, 1] with t₀ = Re z1 + λ₀·Re(z2 − z1), from
    λ·|λ·Re(z2−z1) − i·Im z1|^{p−2} = (1−λ)·|(1−λ)·Re(z2−z1) + i·Im z2|^{p−2}.
    """
    p = _finite_p(p)
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    delta = (z2 - z1).real

    def balance(lam: float) -> float:
        left = lam * abs(complex(lam * delta, -z1.imag)) ** (p - 2.0)
        right = (1.0 - lam) * abs(complex((1.0 - lam) * delta, z2.imag)) ** (p - 2.0)
        return left - right

    return bisect_root(balance, Bracket(0.0, 1.0), float(numerics_value("halfplane_bisect_tol")))


# ── Circle, finite p ──────────────────────────────────────────────

def critical_point_residual(p: float, z1: complex, z2: complex, u: complex) -> float:
    """
    |Σ A_k^{p/2−1}·(conj(z_k)·u² − z_k)| with A_k = (|z_k|²+1)·u − conj(z_k)·u² − z_k,
    principal branch; vanishes at critical points of the circle objective.
    """
    q = 0.5 * p - 1.0
    total = 0j
    for z in (z1, z2):
        a = (abs(z) ** 2 + 1.0) * u - z.conjugate() * u * u - z
        total += (a ** q if a != 0 else 0j) * (z.conjugate() * u * u - z)
    return abs(total)


def b_circle_p(exterior: bool, p: float, z1: complex, z2: complex) -> MetricResult:
    """Distance for the unit disk (exterior=False) or its exterior (exterior=True)."""
    p = _finite_p(p)
    z1, z2 = require_inside(EXTERIOR if exterior else DISK, z1, z2)
    if z1 == z2:
        return coincident()

    def objective(thetas: np.ndarray) -> np.ndarray:
        u = np.exp(1j * thetas)
        return np.abs(z1 - u) ** p + np.abs(z2 - u) ** p

    theta, g = minimize_periodic(objective, int(numerics_value("circle_scan_grid")))
    u = complex(math.cos(theta), math.sin(theta))
    return MetricResult(
        abs(z1 - z2) / g ** (1.0 / p),
        u,
        Method.SCAN,
        critical_point_residual(p, z1, z2, u),
    )


def b_disk_radial(p: PExponent, r: float, s: float) -> float:
    """Distance between r·e^{it} and s·e^{it} for 0 ≤ r, s < 1."""
    if not (0.0 <= r < 1.0 and 0.0 <= s < 1.0):
        raise OutOfRangeError(f"Radial moduli must lie in [0, 1), got {r}, {s}")
    if r == s:
        return 0.0
    return abs(s - r) / float(p_norm(1.0 - r, 1.0 - s, p))


# ── p = ∞ ─────────────────────────────────────────────────────────

def b_halfplane_inf(z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    if z1 == z2:
        return coincident()
    if z1.real != z2.real:
        x_tilde = (abs(z1) ** 2 - abs(z2) ** 2) / (2.0 * (z1 - z2).real)
        if min(z1.real, z2.real) < x_tilde < max(z1.real, z2.real):
            value = 2.0 * abs((z1 - z2).real) / abs(z1 - z2.conjugate())
            return MetricResult(value, complex(x_tilde, 0.0), Method.CLOSED_FORM, 0.0)
    top = z1 if z1.imag >= z2.imag else z2
    return MetricResult(abs(z1 - z2) / top.imag, complex(top.real, 0.0), Method.CLOSED_FORM, 0.0)


def b_disk_inf(z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(DISK, z1, z2)
    if z1 == z2:
        return coincident()
    dist = abs(z1 - z2)
    if z1 == 0 or z2 == 0:
        other = z2 if z1 == 0 else z1
        return MetricResult(dist, other / abs(other), Method.CLOSED_FORM, 0.0)

    r1, r2 = abs(z1), abs(z2)
    u1, u2 = z1 / r1, z2 / r2
    # tangency: the smaller circle about z_k touches the unit circle inside the larger one
    if r1 <= 1.0 - abs(z2 - u1):
        return MetricResult(dist / (1.0 - min(r1, r2)), u1, Method.CLOSED_FORM, 0.0)
    if r2 <= 1.0 - abs(z1 - u2):
        return MetricResult(dist / (1.0 - min(r1, r2)), u2, Method.CLOSED_FORM, 0.0)

    # perpendicular bisector meets the unit circle at z', z''
    e = (z1 - z2) / dist
    k = (r1 * r1 - r2 * r2) / (2.0 * dist)
    h = math.sqrt(max(0.0, 1.0 - k * k))
    z_plus, z_minus = e * complex(k, h), e * complex(k, -h)
    d_plus, d_minus = abs(z_plus - z1), abs(z_minus - z1)
    orientation = (z1.conjugate() * z2).imag
    if orientation > 0:
        u = z_plus
    elif orientation < 0:
        u = z_minus
    else:
        u = z_plus if d_plus <= d_minus else z_minus
    return MetricResult(dist / min(d_plus, d_minus), u, Method.CLOSED_FORM, 0.0)


# ── Punctured plane ───────────────────────────────────────────────

def b_punctured(d: PuncturedPlane, p: PExponent, z1: complex, z2: complex) -> MetricResult:
    z1, z2 = require_inside(d, z1, z2)
    if z1 == z2:
        return coincident()
    c = d.center
    den = float(p_norm(abs(z1 - c), abs(z2 - c), p))
    return MetricResult(abs(z1 - z2) / den, c, Method.CLOSED_FORM, 0.0)
