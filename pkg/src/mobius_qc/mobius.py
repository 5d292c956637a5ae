"""
src/mobius_qc/mobius.py
Möbius self-maps of the disk and the half-plane, and the Cayley map between them.
"""
from __future__ import annotations

from src.geometry.domains import UnitDisk, UpperHalfPlane, as_point, require_inside
from src.utils.errors import OutOfDomainError

DISK = UnitDisk()
HALFPLANE = UpperHalfPlane()


def mobius_disk(a: complex, z: complex) -> complex:
    """T_a(z) = (z − a) / (1 − conj(a)·z); T_a(a) = 0."""
    a = as_point(a)
    if not abs(a) < 1.0:
        raise OutOfDomainError(f"Möbius parameter must lie in the unit disk, got {a}")
    (z,) = require_inside(DISK, z)
    return (z - a) / (1.0 - a.conjugate() * z)


def halfplane_automorphism(coeffs: tuple[float, float, float, float], z: complex) -> complex:
    """(a·z + b) / (c·z + d) with real coefficients and a·d − b·c > 0."""
    a, b, c, d = (float(v) for v in coeffs)
    if not a * d - b * c > 0:
        raise ValueError(f"Half-plane automorphism needs ad − bc > 0, got {coeffs}")
    (z,) = require_inside(HALFPLANE, z)
    return (a * z + b) / (c * z + d)


def cayley(z: complex, inverse: bool = False) -> complex:
    """Forward: H → D, z ↦ (z − i)/(z + i). Inverse: D → H, w ↦ i(1 + w)/(1 − w)."""
    if inverse:
        (w,) = require_inside(DISK, z)
        return 1j * (1.0 + w) / (1.0 - w)
    (z,) = require_inside(HALFPLANE, z)
    return (z - 1j) / (z + 1j)
