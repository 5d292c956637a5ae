"""
src/cli/levelset.py
Level sets z ↦ metric(center, z) as polylines: grid evaluation, marching
squares, clipping at the boundary of the domain, CSV output.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, TextIO

import numpy as np
from skimage import measure

from src.barrlund.boundary_scan import scan_sup
from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent
from src.geometry.domains import (
    Disk,
    Domain,
    ExteriorUnitDisk,
    HalfPlane,
    PolygonWithHoles,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    contains,
    require_inside,
)
from src.metrics.classical import (
    hyperbolic_disk,
    hyperbolic_halfplane,
    m_disk,
    point_pair,
    s_disk,
    s_halfplane,
)
from src.metrics.result import MetricResult, Method
from src.utils.errors import BadConfigurationError, UnsupportedDomainError
from src.utils.logger import get_logger
from src.validation.oracle import standard_window

log = get_logger("cli")

METRICS = ("b", "s", "rho", "pp", "m")
EXTENSION_SAMPLES = 1024

Evaluator = Callable[[complex, complex], MetricResult]


def _plain(value: float) -> MetricResult:
    return MetricResult(value, None, Method.CLOSED_FORM, 0.0)


def metric_evaluator(metric: str, d: Domain, p: PExponent) -> Evaluator:
    """Callable (z1, z2) -> MetricResult for a metric id on d."""
    match metric, d:
        case "b", _:
            return lambda z1, z2: b(d, p, z1, z2)
        case "s", UnitDisk():
            return s_disk
        case "s", UpperHalfPlane():
            return s_halfplane
        case "s", _:
            return lambda z1, z2: b(d, 1.0, z1, z2)
        case "rho", UnitDisk():
            return lambda z1, z2: _plain(hyperbolic_disk(z1, z2))
        case "rho", UpperHalfPlane():
            return lambda z1, z2: _plain(hyperbolic_halfplane(z1, z2))
        case "pp", _:
            return lambda z1, z2: _plain(point_pair(d, z1, z2))
        case "m", UnitDisk():
            return lambda z1, z2: _plain(m_disk(z1, z2))
    if metric not in METRICS:
        raise BadConfigurationError(f"Unknown metric {metric!r}; expected one of {', '.join(METRICS)}")
    raise UnsupportedDomainError(f"Metric {metric!r} is not available on {d.name}")


@dataclass(frozen=True)
class LevelSetRequest:
    domain: Domain
    metric: str
    p: PExponent
    center: complex
    levels: tuple[float, ...]
    grid: int

    def __post_init__(self) -> None:
        if self.grid < 16:
            raise BadConfigurationError(f"grid must be >= 16, got {self.grid}")
        if not self.levels:
            raise BadConfigurationError("At least one level is required")
        if any(not (v > 0 and math.isfinite(v)) for v in self.levels):
            raise BadConfigurationError(f"Levels must be positive, got {self.levels}")
        if any(b_ <= a for a, b_ in zip(self.levels, self.levels[1:])):
            raise BadConfigurationError(f"Levels must be strictly increasing, got {self.levels}")
        require_inside(self.domain, self.center)
        metric_evaluator(self.metric, self.domain, self.p)


# ── Grid ──────────────────────────────────────────────────────────

def bounding_box(d: Domain, center: complex) -> tuple[float, float, float, float]:
    """(x0, x1, y0, y1) covering the part of d where the level sets live."""
    match d:
        case UnitDisk():
            return -1.0, 1.0, -1.0, 1.0
        case Disk(center=c, radius=r):
            return c.real - r, c.real + r, c.imag - r, c.imag + r
        case UpperHalfPlane() | HalfPlane():
            level = 0.0 if isinstance(d, UpperHalfPlane) else d.level
            w = 4.0 * max(1.0, center.imag - level)
            return center.real - w, center.real + w, level, level + 2.0 * w
        case ExteriorUnitDisk():
            w = 3.0 * max(1.0, abs(center))
            return -w, w, -w, w
        case PuncturedPlane(center=c):
            w = 3.0 * max(1.0, abs(center - c))
            return center.real - w, center.real + w, center.imag - w, center.imag + w
        case PolygonWithHoles():
            x0, y0, x1, y1 = d.shape.bounds
            return x0, x1, y0, y1
    raise UnsupportedDomainError(f"No bounding box for {d!r}")


def _extended(req: LevelSetRequest) -> Callable[[complex], float] | None:
    """
    The boundary supremum still makes sense off the domain; b and s use it
    for nodes just outside so contours reach the boundary. Others get none.
    """
    if req.metric not in ("b", "s"):
        return None
    p = PExponent(1.0) if req.metric == "s" else req.p

    def value(z: complex) -> float:
        if z == req.center:
            return 0.0
        window = standard_window(req.center, z)
        return scan_sup(req.domain, p, req.center, z, EXTENSION_SAMPLES, window).value

    return value


def evaluate_grid(req: LevelSetRequest) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Return (xs, ys, field, mask); field[i, j] belongs to xs[j] + i·ys[i]."""
    x0, x1, y0, y1 = bounding_box(req.domain, req.center)
    xs = np.linspace(x0, x1, req.grid)
    ys = np.linspace(y0, y1, req.grid)
    pitch = max(xs[1] - xs[0], ys[1] - ys[0])
    evaluate = metric_evaluator(req.metric, req.domain, req.p)
    extension = _extended(req)

    field = np.zeros((req.grid, req.grid))
    mask = np.zeros((req.grid, req.grid), dtype=bool)
    for i, y in enumerate(ys):
        for j, x in enumerate(xs):
            z = complex(float(x), float(y))
            if contains(req.domain, z):
                field[i, j] = evaluate(req.center, z).value
                mask[i, j] = True
            elif extension is not None and boundary_distance(req.domain, z) <= 2.0 * pitch:
                field[i, j] = extension(z)
                mask[i, j] = True
    log.debug(f"Evaluated {req.grid}x{req.grid} grid, {int(mask.sum())} nodes in use")
    return xs, ys, field, mask


# ── Contours ──────────────────────────────────────────────────────

def _crossing(d: Domain, inside: complex, outside: complex) -> complex:
    """Point of [inside, outside] just inside d, by bisection on membership."""
    lo, hi = inside, outside
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        if contains(d, mid):
            lo = mid
        else:
            hi = mid
    return lo


def clip_polyline(d: Domain, points: list[complex]) -> list[list[complex]]:
    """Split a polyline into the runs lying in d, closing each run at ∂d."""
    runs: list[list[complex]] = []
    current: list[complex] = []
    previous: complex | None = None
    previous_inside = False
    for z in points:
        inside = contains(d, z)
        if inside and not previous_inside and previous is not None:
            current = [_crossing(d, z, previous)]
        if inside:
            current.append(z)
        elif previous_inside and previous is not None:
            current.append(_crossing(d, previous, z))
            runs.append(current)
            current = []
        previous, previous_inside = z, inside
    if current:
        runs.append(current)
    return [run for run in runs if len(run) >= 2]


def level_polylines(req: LevelSetRequest) -> list[tuple[float, list[complex]]]:
    xs, ys, field, mask = evaluate_grid(req)
    x0, y0 = float(xs[0]), float(ys[0])
    dx, dy = float(xs[1] - xs[0]), float(ys[1] - ys[0])
    out: list[tuple[float, list[complex]]] = []
    for level in req.levels:
        for contour in measure.find_contours(field, level, mask=mask):
            points = [complex(x0 + col * dx, y0 + row * dy) for row, col in contour]
            for run in clip_polyline(req.domain, points):
                out.append((level, run))
    log.info(f"{len(out)} polylines for levels {list(req.levels)}")
    return out


def write_csv(polylines: list[tuple[float, list[complex]]], stream: TextIO) -> None:
    """CSV columns level,x,y; one blank line between polylines."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["level", "x", "y"])
    for k, (level, run) in enumerate(polylines):
        if k:
            stream.write("\n")
        for z in run:
            writer.writerow([f"{level:.10g}", f"{z.real:.10g}", f"{z.imag:.10g}"])
