"""
src/barrlund/dispatcher.py
b_{G,p}(z1, z2): route each (domain, p) pair to its evaluator.
"""
from __future__ import annotations

from enum import Enum

from src.barrlund.boundary_scan import scan_sup
from src.barrlund.closed_forms import (
    b_circle_p,
    b_disk_inf,
    b_halfplane_inf,
    b_halfplane_p,
    b_p2_midpoint,
    b_punctured,
)
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.boundary import BoundaryWindow
from src.geometry.domains import (
    Disk,
    Domain,
    ExteriorUnitDisk,
    HalfPlane,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    contains,
    require_inside,
    segment_meets_boundary,
)
from src.metrics.classical import s_disk, s_halfplane
from src.metrics.result import MetricResult, Method, coincident
from src.utils.config import numerics_value, validation_value
from src.utils.logger import get_logger

log = get_logger("barrlund")


class BoundaryMode(str, Enum):
    BOUNDARY = "boundary"      # sup over ∂G
    COMPLEMENT = "complement"  # sup over the plane minus G


def _fallback_window(z1: complex, z2: complex) -> BoundaryWindow:
    factor = float(validation_value("window_factor"))
    return BoundaryWindow(0.5 * (z1 + z2), factor * (1.0 + abs(z1) + abs(z2) + abs(z1 - z2)))


def _boundary_b(d: Domain, p: PExponent, z1: complex, z2: complex) -> MetricResult:
    match d:
        case Disk(center=c, radius=r):
            inner = _boundary_b(UnitDisk(), p, (z1 - c) / r, (z2 - c) / r)
            return _rescaled(inner, r, c)
        case HalfPlane(level=h):
            inner = _boundary_b(UpperHalfPlane(), p, z1 - 1j * h, z2 - 1j * h)
            return _rescaled(inner, 1.0, 1j * h)
    if p.value == 1.0 and isinstance(d, UnitDisk):
        return s_disk(z1, z2)
    if p.value == 1.0 and isinstance(d, UpperHalfPlane):
        return s_halfplane(z1, z2)
    if p.value == 2.0:
        return b_p2_midpoint(d, z1, z2)
    if isinstance(d, UpperHalfPlane):
        return b_halfplane_inf(z1, z2) if p.is_infinite else b_halfplane_p(p.value, z1, z2)
    if isinstance(d, (UnitDisk, ExteriorUnitDisk)) and not p.is_infinite:
        return b_circle_p(isinstance(d, ExteriorUnitDisk), p.value, z1, z2)
    if isinstance(d, UnitDisk):
        return b_disk_inf(z1, z2)
    if isinstance(d, PuncturedPlane):
        return b_punctured(d, p, z1, z2)

    log.debug(f"No closed form for ({d.name}, p={p}); boundary scan fallback")
    return scan_sup(d, p, z1, z2, int(numerics_value("fallback_samples")), _fallback_window(z1, z2))


def _rescaled(result: MetricResult, scale: float, shift: complex) -> MetricResult:
    z = result.extremal_point
    return MetricResult(
        result.value,
        None if z is None else scale * z + shift,
        result.method,
        result.residual,
    )


def b(
    d: Domain,
    p: PExponent | float | str,
    z1: complex,
    z2: complex,
    mode: BoundaryMode = BoundaryMode.BOUNDARY,
) -> MetricResult:
    """Barrlund distance b_{d,p}(z1, z2)."""
    p = as_exponent(p)
    z1, z2 = require_inside(d, z1, z2)
    if z1 == z2:
        return coincident()
    if mode is BoundaryMode.COMPLEMENT and _complement_saturates(d, p, z1, z2):
        return MetricResult(p.sup_bound, None, Method.CLOSED_FORM, 0.0)
    return _boundary_b(d, p, z1, z2)


def _complement_saturates(d: Domain, p: PExponent, z1: complex, z2: complex) -> bool:
    """
    The complement supremum reaches 2^{1−1/p} exactly when the unconstrained
    minimiser of the denominator leaves G: the midpoint for p > 1, any point
    of the segment for p = 1.
    """
    if p.value == 1.0:
        return segment_meets_boundary(d, z1, z2)
    return not contains(d, 0.5 * (z1 + z2))
