"""
src/validation/oracle.py
Brute-force evaluation of the distance straight from its definition.
"""
from __future__ import annotations

from src.barrlund.boundary_scan import scan_sup
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.boundary import BoundaryWindow
from src.geometry.domains import Domain, require_inside
from src.metrics.result import MetricResult
from src.utils.config import validation_value


def standard_window(z1: complex, z2: complex) -> BoundaryWindow:
    """Centred at the midpoint, radius 8·(1 + |z1| + |z2| + |z1 − z2|)."""
    factor = float(validation_value("window_factor"))
    return BoundaryWindow(0.5 * (z1 + z2), factor * (1.0 + abs(z1) + abs(z2) + abs(z1 - z2)))


def oracle_b(
    d: Domain,
    p: PExponent | float | str,
    z1: complex,
    z2: complex,
    samples: int | None = None,
) -> MetricResult:
    p = as_exponent(p)
    samples = int(validation_value("oracle_samples")) if samples is None else samples
    if samples < 64:
        raise ValueError(f"Oracle needs at least 64 samples, got {samples}")
    z1, z2 = require_inside(d, z1, z2)
    return scan_sup(d, p, z1, z2, samples, standard_window(z1, z2))
