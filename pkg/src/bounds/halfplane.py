"""
src/bounds/halfplane.py
Explicit lower bounds T_p, U_p and the upper bound |z1−z2|/max Im for the
half-plane distance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from src.barrlund.boundary_scan import p_norm
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.domains import UpperHalfPlane, require_inside

HALFPLANE = UpperHalfPlane()


@dataclass(frozen=True)
class HalfplaneBoundInputs:
    alpha: float  # Im z1 / (Im z1 + Im z2)
    c: float      # |Re(z1 − z2)| / 2
    leg_a: float  # √(Im z1² + c²)
    leg_b: float  # √(Im z2² + c²)

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")

    @classmethod
    def from_points(cls, z1: complex, z2: complex) -> "HalfplaneBoundInputs":
        z1, z2 = require_inside(HALFPLANE, z1, z2)
        c = 0.5 * abs((z1 - z2).real)
        return cls(
            alpha=z1.imag / (z1.imag + z2.imag),
            c=c,
            leg_a=math.hypot(z1.imag, c),
            leg_b=math.hypot(z2.imag, c),
        )


def t_bound(p: PExponent | float, z1: complex, z2: complex) -> float:
    """T_p: the candidate point is where [z1, conj z2] crosses the real axis."""
    p = as_exponent(p)
    inputs = HalfplaneBoundInputs.from_points(z1, z2)
    if z1 == z2:
        return 0.0
    weight = float(p_norm(inputs.alpha, 1.0 - inputs.alpha, p))
    return abs(z1 - z2) / (abs(z1 - complex(z2).conjugate()) * weight)


def u_bound(p: PExponent | float, z1: complex, z2: complex) -> float:
    """U_p: the candidate point is Re(z1 + z2)/2."""
    p = as_exponent(p)
    inputs = HalfplaneBoundInputs.from_points(z1, z2)
    if z1 == z2:
        return 0.0
    return abs(z1 - z2) / float(p_norm(inputs.leg_a, inputs.leg_b, p))


def halfplane_upper_bound(z1: complex, z2: complex) -> float:
    z1, z2 = require_inside(HALFPLANE, z1, z2)
    return abs(z1 - z2) / max(z1.imag, z2.imag)
