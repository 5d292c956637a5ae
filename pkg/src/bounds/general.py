"""
src/bounds/general.py
Bounds that hold on every proper subdomain, in terms of boundary distances.
"""
from __future__ import annotations

from src.barrlund.boundary_scan import p_norm
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.domains import Domain, boundary_distance, require_inside


def distance_bounds(d: Domain, p: PExponent | float, z1: complex, z2: complex) -> tuple[float, float]:
    """
    (lower, upper) with
    |z1−z2| / (|z1−z2| + 2·min d(z_k))  ≤  b  ≤  |z1−z2| / ‖(d(z1), d(z2))‖_p.
    """
    p = as_exponent(p)
    z1, z2 = require_inside(d, z1, z2)
    if z1 == z2:
        return 0.0, 0.0
    dist = abs(z1 - z2)
    d1, d2 = boundary_distance(d, z1), boundary_distance(d, z2)
    lower = dist / (dist + 2.0 * min(d1, d2))
    upper = dist / float(p_norm(d1, d2, p))
    return lower, upper
