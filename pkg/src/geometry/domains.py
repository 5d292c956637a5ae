"""
src/geometry/domains.py
Planar domains: membership, distance to the boundary, nearest boundary
point, similarity maps and polygon loading.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Union

import numpy as np
import shapely
from shapely.geometry import LinearRing, Point, Polygon
from shapely.ops import nearest_points

from src.utils.errors import (
    InvalidDomainError,
    InvalidPointError,
    OutOfDomainError,
    UnsupportedDomainError,
)


def as_point(z: complex | float) -> complex:
    """Coerce to complex and reject NaN/inf coordinates."""
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise InvalidPointError(f"Non-finite point: {z}")
    return w


def parse_point(text: str) -> complex:
    """Parse an "x,y" pair."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidPointError(f"Expected 'x,y', got {text!r}")
    try:
        return as_point(complex(float(parts[0]), float(parts[1])))
    except ValueError as e:
        raise InvalidPointError(f"Cannot parse point {text!r}: {e}") from e


# ── Domain variants ───────────────────────────────────────────────

@dataclass(frozen=True)
class UnitDisk:
    name: str = field(default="disk", init=False)


@dataclass(frozen=True)
class UpperHalfPlane:
    name: str = field(default="halfplane", init=False)


@dataclass(frozen=True)
class ExteriorUnitDisk:
    name: str = field(default="exterior", init=False)


@dataclass(frozen=True)
class PuncturedPlane:
    center: complex = 0j
    name: str = field(default="punctured", init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", as_point(self.center))


@dataclass(frozen=True)
class Disk:
    """Open disk |z - center| < radius."""
    center: complex
    radius: float
    name: str = field(default="round-disk", init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", as_point(self.center))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InvalidDomainError(f"Disk radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class HalfPlane:
    """Open half-plane Im z > level."""
    level: float
    name: str = field(default="shifted-halfplane", init=False)

    def __post_init__(self) -> None:
        if not math.isfinite(self.level):
            raise InvalidDomainError(f"Half-plane level must be finite, got {self.level}")


@dataclass(frozen=True)
class PolygonWithHoles:
    outer: tuple[complex, ...]
    holes: tuple[tuple[complex, ...], ...] = ()
    name: str = field(default="polygon", init=False)

    def __post_init__(self) -> None:
        outer = tuple(as_point(v) for v in self.outer)
        holes = tuple(tuple(as_point(v) for v in h) for h in self.holes)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "holes", holes)
        _validate_rings(outer, holes)

    @cached_property
    def shape(self) -> Polygon:
        return Polygon(_xy(self.outer), [_xy(h) for h in self.holes])

    @cached_property
    def boundary(self):
        return self.shape.boundary

    @property
    def rings(self) -> list[tuple[complex, ...]]:
        return [self.outer, *self.holes]


Domain = Union[
    UnitDisk, UpperHalfPlane, ExteriorUnitDisk, PuncturedPlane, Disk, HalfPlane, PolygonWithHoles
]

BOUNDED_BOUNDARY = (UnitDisk, ExteriorUnitDisk, PuncturedPlane, Disk, PolygonWithHoles)


def _xy(ring: tuple[complex, ...]) -> list[tuple[float, float]]:
    return [(v.real, v.imag) for v in ring]


def _validate_rings(outer: tuple[complex, ...], holes: tuple[tuple[complex, ...], ...]) -> None:
    for ring in (outer, *holes):
        if len(ring) < 3:
            raise InvalidDomainError(f"Ring needs at least 3 vertices, got {len(ring)}")
    outer_ring = LinearRing(_xy(outer))
    if not outer_ring.is_simple:
        raise InvalidDomainError("Outer ring is not simple")
    if not outer_ring.is_ccw:
        raise InvalidDomainError("Outer ring must be counterclockwise")
    outer_poly = Polygon(outer_ring)
    hole_polys = []
    for k, hole in enumerate(holes):
        ring = LinearRing(_xy(hole))
        if not ring.is_simple:
            raise InvalidDomainError(f"Hole {k} is not simple")
        if not outer_poly.contains(ring) or outer_ring.distance(ring) == 0:
            raise InvalidDomainError(f"Hole {k} is not strictly inside the outer ring")
        hole_polys.append(Polygon(ring))
    for i in range(len(hole_polys)):
        for j in range(i + 1, len(hole_polys)):
            if not hole_polys[i].disjoint(hole_polys[j]):
                raise InvalidDomainError(f"Holes {i} and {j} intersect")


# ── Membership and distance ───────────────────────────────────────

def contains(d: Domain, z: complex) -> bool:
    """True iff z lies in the open set d; boundary points return False."""
    z = as_point(z)
    match d:
        case UnitDisk():
            return abs(z) < 1.0
        case UpperHalfPlane():
            return z.imag > 0.0
        case ExteriorUnitDisk():
            return abs(z) > 1.0
        case PuncturedPlane(center=c):
            return z != c
        case Disk(center=c, radius=r):
            return abs(z - c) < r
        case HalfPlane(level=h):
            return z.imag > h
        case PolygonWithHoles():
            return bool(shapely.contains_xy(d.shape, z.real, z.imag))
    raise InvalidDomainError(f"Unknown domain: {d!r}")


def contains_many(d: Domain, zs: np.ndarray) -> np.ndarray:
    """Vectorised contains over an array of complex points."""
    zs = np.asarray(zs, dtype=complex)
    match d:
        case UnitDisk():
            return np.abs(zs) < 1.0
        case UpperHalfPlane():
            return zs.imag > 0.0
        case ExteriorUnitDisk():
            return np.abs(zs) > 1.0
        case PuncturedPlane(center=c):
            return zs != c
        case Disk(center=c, radius=r):
            return np.abs(zs - c) < r
        case HalfPlane(level=h):
            return zs.imag > h
        case PolygonWithHoles():
            return shapely.contains_xy(d.shape, zs.real, zs.imag)
    raise InvalidDomainError(f"Unknown domain: {d!r}")


def require_inside(d: Domain, *points: complex) -> tuple[complex, ...]:
    """Validate that every point lies in d, returning them as complex."""
    checked = []
    for z in points:
        w = as_point(z)
        if not contains(d, w):
            raise OutOfDomainError(f"Point {w} is not in {d.name}")
        checked.append(w)
    return tuple(checked)


def boundary_distance(d: Domain, z: complex) -> float:
    """Euclidean distance from z to the boundary of d (z need not lie in d)."""
    z = as_point(z)
    match d:
        case UnitDisk() | ExteriorUnitDisk():
            return abs(1.0 - abs(z))
        case UpperHalfPlane():
            return abs(z.imag)
        case PuncturedPlane(center=c):
            return abs(z - c)
        case Disk(center=c, radius=r):
            return abs(r - abs(z - c))
        case HalfPlane(level=h):
            return abs(z.imag - h)
        case PolygonWithHoles():
            return float(d.boundary.distance(Point(z.real, z.imag)))
    raise InvalidDomainError(f"Unknown domain: {d!r}")


def nearest_boundary_point(d: Domain, z: complex) -> complex:
    """A boundary point realising boundary_distance(d, z)."""
    z = as_point(z)
    match d:
        case UnitDisk() | ExteriorUnitDisk():
            return z / abs(z) if z != 0 else 1 + 0j
        case UpperHalfPlane():
            return complex(z.real, 0.0)
        case PuncturedPlane(center=c):
            return c
        case Disk(center=c, radius=r):
            return c + r * (z - c) / abs(z - c) if z != c else c + r
        case HalfPlane(level=h):
            return complex(z.real, h)
        case PolygonWithHoles():
            q = nearest_points(d.boundary, Point(z.real, z.imag))[0]
            return complex(q.x, q.y)
    raise InvalidDomainError(f"Unknown domain: {d!r}")


def segment_meets_boundary(d: Domain, z1: complex, z2: complex) -> bool:
    """True iff the closed segment [z1, z2] touches the boundary of d."""
    match d:
        case UnitDisk() | UpperHalfPlane() | Disk() | HalfPlane():
            return False  # convex, endpoints inside
        case ExteriorUnitDisk():
            # distance from the origin to the segment
            dz = z2 - z1
            t = 0.0 if dz == 0 else min(1.0, max(0.0, -(z1 * dz.conjugate()).real / abs(dz) ** 2))
            return abs(z1 + t * dz) <= 1.0
        case PuncturedPlane(center=c):
            if z1 == z2:
                return z1 == c
            cross = ((c - z1) * (z2 - z1).conjugate()).imag
            t = ((c - z1) * (z2 - z1).conjugate()).real / abs(z2 - z1) ** 2
            return cross == 0.0 and 0.0 <= t <= 1.0
        case PolygonWithHoles():
            seg = shapely.LineString([(z1.real, z1.imag), (z2.real, z2.imag)])
            return bool(seg.intersects(d.boundary))
    raise InvalidDomainError(f"Unknown domain: {d!r}")


# ── Similarities ──────────────────────────────────────────────────

def similarity_apply(scale: float, shift: complex, z: complex) -> complex:
    """h(z) = scale*z + shift."""
    if not scale > 0:
        raise ValueError(f"Similarity scale must be positive, got {scale}")
    return scale * as_point(z) + complex(shift)


def similarity_image(d: Domain, scale: float, shift: complex) -> Domain:
    """Image of d under z -> scale*z + shift."""
    if not scale > 0:
        raise ValueError(f"Similarity scale must be positive, got {scale}")
    shift = as_point(shift)
    match d:
        case UnitDisk():
            return Disk(center=shift, radius=scale)
        case Disk(center=c, radius=r):
            return Disk(center=scale * c + shift, radius=scale * r)
        case UpperHalfPlane():
            return HalfPlane(level=shift.imag)
        case HalfPlane(level=h):
            return HalfPlane(level=scale * h + shift.imag)
        case PuncturedPlane(center=c):
            return PuncturedPlane(center=scale * c + shift)
        case PolygonWithHoles():
            return PolygonWithHoles(
                outer=tuple(scale * v + shift for v in d.outer),
                holes=tuple(tuple(scale * v + shift for v in h) for h in d.holes),
            )
        case ExteriorUnitDisk():
            if scale == 1.0 and shift == 0:
                return d
            raise UnsupportedDomainError("Exterior of a general disk is not representable")
    raise InvalidDomainError(f"Unknown domain: {d!r}")


# ── Polygon helpers ───────────────────────────────────────────────

def polygon_from_dict(doc: dict[str, Any]) -> PolygonWithHoles:
    """Build a polygon from {"outer": [[x,y],...], "holes": [[[x,y],...],...]}."""
    try:
        outer = tuple(complex(float(x), float(y)) for x, y in doc["outer"])
        holes = tuple(
            tuple(complex(float(x), float(y)) for x, y in ring) for ring in doc.get("holes", [])
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDomainError(f"Malformed polygon document: {e}") from e
    return PolygonWithHoles(outer=outer, holes=holes)


def load_polygon(path: str | Path) -> PolygonWithHoles:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Polygon file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidDomainError(f"Polygon file {path} is not JSON: {e}") from e
    return polygon_from_dict(doc)


def square(half_side: float, clockwise: bool = False) -> tuple[complex, ...]:
    h = float(half_side)
    ring = (complex(-h, -h), complex(h, -h), complex(h, h), complex(-h, h))
    return tuple(reversed(ring)) if clockwise else ring


def square_annulus(outer_half: float, inner_half: float) -> PolygonWithHoles:
    """Open square S_outer minus the closed square S_inner, both centred at 0."""
    return PolygonWithHoles(outer=square(outer_half), holes=(square(inner_half, clockwise=True),))
