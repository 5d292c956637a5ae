"""
src/geometry/boundary.py
Boundary parametrisations and sampling. Each boundary is a curve
s -> point on a parameter interval; sampling and the local refinement in
the boundary scan both work on that parameter.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from src.geometry.domains import (
    Disk,
    Domain,
    ExteriorUnitDisk,
    HalfPlane,
    PolygonWithHoles,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    as_point,
)
from src.utils.errors import InvalidDomainError, MissingWindowError


@dataclass(frozen=True)
class BoundaryWindow:
    """Finite piece of an unbounded boundary: anchor.re ± radius."""
    anchor: complex
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchor", as_point(self.anchor))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"Window radius must be positive, got {self.radius}")


# ── Curves ────────────────────────────────────────────────────────

class BoundaryCurve:
    """A boundary component parametrised on [lo, hi)."""

    lo: float = 0.0
    hi: float = 1.0
    periodic: bool = True

    def at(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def point(self, s: float) -> complex:
        return complex(self.at(np.array([s]))[0])

    def grid(self, n: int) -> np.ndarray:
        if self.periodic:
            return self.lo + (self.hi - self.lo) * np.arange(n) / n
        return np.linspace(self.lo, self.hi, n)

    def sample(self, n: int) -> np.ndarray:
        return self.at(self.grid(n))


class CircleCurve(BoundaryCurve):
    def __init__(self, center: complex = 0j, radius: float = 1.0):
        self.center = center
        self.radius = radius
        self.lo, self.hi = 0.0, 2.0 * math.pi

    def at(self, s: np.ndarray) -> np.ndarray:
        return self.center + self.radius * np.exp(1j * np.asarray(s, dtype=float))

    def point(self, s: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * s)


class LineCurve(BoundaryCurve):
    """Horizontal line Im z = level restricted to [lo, hi]."""

    periodic = False

    def __init__(self, level: float, lo: float, hi: float):
        self.level = level
        self.lo, self.hi = lo, hi

    def at(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        return s + 1j * self.level

    def point(self, s: float) -> complex:
        return complex(s, self.level)


class PointCurve(BoundaryCurve):
    """Single boundary point; sampling ignores n."""

    def __init__(self, center: complex):
        self.center = center
        self.lo, self.hi = 0.0, 0.0

    def at(self, s: np.ndarray) -> np.ndarray:
        return np.full(np.shape(s), self.center, dtype=complex)

    def sample(self, n: int) -> np.ndarray:
        return np.array([self.center], dtype=complex)


class PolylineCurve(BoundaryCurve):
    """All rings of a polygon, concatenated by arc length."""

    def __init__(self, rings: list[tuple[complex, ...]]):
        self._rings = []
        offsets = [0.0]
        for ring in rings:
            pts = np.array([*ring, ring[0]], dtype=complex)
            seg = np.abs(np.diff(pts))
            cum = np.concatenate([[0.0], np.cumsum(seg)])
            self._rings.append((pts, cum))
            offsets.append(offsets[-1] + cum[-1])
        self._offsets = np.array(offsets)
        self.lo, self.hi = 0.0, float(self._offsets[-1])

    def at(self, s: np.ndarray) -> np.ndarray:
        s = np.mod(np.asarray(s, dtype=float), self.hi)
        idx = np.clip(np.searchsorted(self._offsets, s, side="right") - 1, 0, len(self._rings) - 1)
        out = np.empty(s.shape, dtype=complex)
        for k, (pts, cum) in enumerate(self._rings):
            mask = idx == k
            if not np.any(mask):
                continue
            local = s[mask] - self._offsets[k]
            out[mask] = np.interp(local, cum, pts.real) + 1j * np.interp(local, cum, pts.imag)
        return out


def boundary_curve(d: Domain, window: BoundaryWindow | None = None) -> BoundaryCurve:
    match d:
        case UnitDisk() | ExteriorUnitDisk():
            return CircleCurve()
        case Disk(center=c, radius=r):
            return CircleCurve(c, r)
        case PuncturedPlane(center=c):
            return PointCurve(c)
        case PolygonWithHoles():
            return PolylineCurve(d.rings)
        case UpperHalfPlane() | HalfPlane():
            if window is None:
                raise MissingWindowError(f"Sampling the boundary of {d.name} needs a window")
            level = d.level if isinstance(d, HalfPlane) else 0.0
            a = window.anchor.real
            return LineCurve(level, a - window.radius, a + window.radius)
    raise InvalidDomainError(f"Unknown domain: {d!r}")


def sample_boundary(d: Domain, n: int, window: BoundaryWindow | None = None) -> np.ndarray:
    """n boundary points: equispaced on circles and windowed lines, by arc length on polygons."""
    if n < 2:
        raise ValueError(f"Need at least 2 boundary samples, got {n}")
    return boundary_curve(d, window).sample(n)
