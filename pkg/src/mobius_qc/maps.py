"""
src/mobius_qc/maps.py
Quasiconformal self-maps of the half-plane used to test the distortion
bound b(f z1, f z2) ≤ 2^{1−1/p}·4^{1−1/K}·b(z1, z2)^{1/K}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.domains import UpperHalfPlane, as_point
from src.mobius_qc.mobius import halfplane_automorphism
from src.utils.errors import OutOfRangeError, ZeroInputError

HALFPLANE = UpperHalfPlane()


def radial_stretch(K: float, z: complex) -> complex:
    """|z|^{1/K − 1}·z; preserves arguments."""
    if not K >= 1.0:
        raise OutOfRangeError(f"K must be >= 1, got {K}")
    z = as_point(z)
    if z == 0:
        raise ZeroInputError("radial_stretch is undefined at 0")
    return abs(z) ** (1.0 / K - 1.0) * z


def inversion(z: complex) -> complex:
    """z / |z|² (anticonformal, maps H onto itself)."""
    z = as_point(z)
    if z == 0:
        raise ZeroInputError("inversion is undefined at 0")
    return z / abs(z) ** 2


@dataclass(frozen=True)
class QcMap:
    name: str
    K: float
    apply: Callable[[complex], complex]


def map_zoo(stretch_K: list[float]) -> list[QcMap]:
    zoo = [
        QcMap("identity", 1.0, lambda z: z),
        QcMap("mobius-affine", 1.0, lambda z: halfplane_automorphism((2.0, 1.0, 0.0, 1.0), z)),
        QcMap("mobius-rotation", 1.0, lambda z: halfplane_automorphism((1.0, -1.0, 1.0, 1.0), z)),
        QcMap("inversion", 1.0, inversion),
    ]
    for K in stretch_K:
        zoo.append(QcMap(f"radial-stretch-{K:g}", K, lambda z, K=K: radial_stretch(K, z)))
    return zoo


def qc_bound(p: PExponent | float, K: float, distance: float) -> float:
    p = as_exponent(p)
    return p.sup_bound * 4.0 ** (1.0 - 1.0 / K) * distance ** (1.0 / K)


def inversion_sharpness_ratio(p: PExponent | float, c: float, t: float) -> float:
    """
    b(ic, 2+it) / b(h(ic), h(2+it)) for the inversion h; tends to 2^{1−1/p}
    as c, t → 0, so the K = 1 constant of the distortion bound is attained.
    """
    p = as_exponent(p)
    z1, z2 = complex(0.0, c), complex(2.0, t)
    return b(HALFPLANE, p, z1, z2).value / b(HALFPLANE, p, inversion(z1), inversion(z2)).value
