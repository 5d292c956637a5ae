"""
src/mobius_qc/distortion.py
Grötzsch ring modulus μ(r), the distortion function φ_K and its explicit
upper bound 4^{1−1/K}·r^{1/K}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from src.numerics.elliptic import agm
from src.numerics.scalar import Bracket, bisect_root
from src.utils.config import numerics_value
from src.utils.errors import OutOfRangeError


def _guard() -> tuple[float, float]:
    cfg = numerics_value("grotzsch")
    return float(cfg["r_min"]), float(cfg["r_max"])


@dataclass(frozen=True)
class DistortionQuery:
    K: float
    r: float

    def __post_init__(self) -> None:
        if not self.K >= 1.0:
            raise OutOfRangeError(f"K must be >= 1, got {self.K}")
        if not 0.0 < self.r < 1.0:
            raise OutOfRangeError(f"r must lie in (0, 1), got {self.r}")

    @property
    def phi(self) -> float:
        return phi_K(self.K, self.r)

    @property
    def bound(self) -> float:
        return schwarz_bound(self.K, self.r)


def grotzsch_mu(r: float) -> float:
    """μ(r) = (π/2)·K(r′)/K(r), r′ = √(1 − r²)."""
    r_min, r_max = _guard()
    if not r_min <= r <= r_max:
        raise OutOfRangeError(f"μ(r) is evaluated on [{r_min}, {r_max}], got {r}")
    r_prime = math.sqrt((1.0 - r) * (1.0 + r))
    # K(x) = π / (2·agm(1, x′))
    return 0.5 * math.pi * agm(1.0, r_prime) / agm(1.0, r)


def phi_K(K: float, r: float) -> float:
    """φ_K(r) = μ⁻¹(μ(r)/K)."""
    query = DistortionQuery(K, r)
    if query.K == 1.0:
        return r
    target = grotzsch_mu(r) / K
    _, r_max = _guard()
    cfg = numerics_value("grotzsch")

    def gap(x: float) -> float:
        return grotzsch_mu(x) - target

    if gap(r_max) > 0:
        raise OutOfRangeError(f"φ_{K}({r}) exceeds the evaluation range of μ")
    lo = max(r, _guard()[0])
    if lo >= r_max:
        raise OutOfRangeError(f"r = {r} is outside the evaluation range of μ")
    return bisect_root(gap, Bracket(lo, r_max), float(cfg["phi_tol"]))


def schwarz_bound(K: float, r: float) -> float:
    """4^{1−1/K}·r^{1/K}, an upper bound for φ_K(r)."""
    DistortionQuery(K, r)
    return 4.0 ** (1.0 - 1.0 / K) * r ** (1.0 / K)
