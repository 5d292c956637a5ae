"""
src/numerics/elliptic.py
Arithmetic-geometric mean and the complete elliptic integral of the first kind.
"""
from __future__ import annotations

import math

from src.utils.config import numerics_value


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0 and b > 0):
        raise ValueError(f"agm needs positive arguments, got {a}, {b}")
    cfg = numerics_value("agm")
    rtol, max_iter = float(cfg["rtol"]), int(cfg["max_iter"])
    for _ in range(max_iter):
        if abs(a - b) <= rtol * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellipk(r: float) -> float:
    """K(r) = ∫₀^{π/2} dθ / √(1 − r² sin² θ), for 0 ≤ r < 1 (r is the modulus)."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"ellipk needs 0 <= r < 1, got {r}")
    return math.pi / (2.0 * agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))
