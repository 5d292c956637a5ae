"""
src/validation/balls.py
Inclusions between Barrlund balls B_p(a; c) = {z ∈ D : b(a, z) < c} and
Euclidean disks, checked by dense sampling of the comparison circles.
"""
from __future__ import annotations

import math

import numpy as np

from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.domains import UnitDisk
from src.utils.config import suite_tolerance, validation_value
from src.utils.errors import BadConfigurationError
from src.utils.logger import get_logger
from src.validation.report import MarginTracker, VerificationReport

log = get_logger("validation")

DISK = UnitDisk()
SHRINK = 1.0 - 1e-6
GROW = 1.0 + 1e-6


def inclusion_radius(a: float, r: float) -> float:
    """R with b_2(a, a−R) = b_2(a, a+r) and −1 < a−R < a."""
    _require_config(a, r)
    if 2.0 * a * (1.0 - a) - r * (1.0 + a) >= 0.0:
        return r * (1.0 - a) / (1.0 - a - r)
    return r * (1.0 + a) / (1.0 - a)


def _require_config(a: float, r: float) -> None:
    if not 0.0 < a < a + r < 1.0:
        raise BadConfigurationError(f"Need 0 < a < a + r < 1, got a={a}, r={r}")


def _circle(center: complex, radius: float, n: int) -> np.ndarray:
    return center + radius * np.exp(2j * math.pi * np.arange(n) / n)


def check_ball_inclusions(
    a: float,
    r: float,
    p: PExponent | float | str,
    circle_samples: int | None = None,
) -> VerificationReport:
    """
    With c = b_p(a, a+r):
      |z−a| < r  ⊂  B_p(a; c)                     (every p > 1, and p = 2)
      B_2(a; c)  ⊂  {|z| < a+r} ∩ {|z−a| < R}     (p = 2 only)
    Inner circles must give b < c, outer circles (inside D) b ≥ c.
    """
    _require_config(a, r)
    p = as_exponent(p)
    if p.value == 1.0:
        raise BadConfigurationError("Ball inclusions are stated for p > 1")
    n = int(validation_value("circle_samples")) if circle_samples is None else circle_samples
    if n < 1:
        raise BadConfigurationError(f"circle_samples must be >= 1, got {n}")

    tracker = MarginTracker("ball-inclusions", n, 0, suite_tolerance())
    c = b(DISK, p, a, a + r).value
    tracker.details.update({"a": a, "r": r, "p": p, "c": c})

    for z in _circle(complex(a), r * SHRINK, n):
        tracker.observe(c - b(DISK, p, a, complex(z)).value, "inner", complex(z))

    if p.value == 2.0:
        R = inclusion_radius(a, r)
        tracker.details["R"] = R
        outer = [("origin-disk", z) for z in _circle(0j, (a + r) * GROW, n)]
        outer += [("R-disk", z) for z in _circle(complex(a), R * GROW, n)]
        for label, z in outer:
            z = complex(z)
            if abs(z) >= 1.0:
                continue
            tracker.observe(b(DISK, p, a, z).value - c, label, z)

    report = tracker.report()
    log.debug(f"ball inclusions a={a} r={r} p={p}: worst margin {report.worst_margin:.3e}")
    return report


def check_unit_ball_ellipse(a: float, samples: int = 360) -> VerificationReport:
    """The level-1 ball B_2(a; 1) is bounded by the ellipse x² + y²/(1−a²) = 1."""
    if not 0.0 < a < 1.0:
        raise BadConfigurationError(f"Need 0 < a < 1, got {a}")
    tracker = MarginTracker("unit-ball-ellipse", samples, 0, 0.0)
    minor = math.sqrt((1.0 - a) * (1.0 + a))
    for k in range(samples):
        theta = 2.0 * math.pi * (k + 0.5) / samples
        z = complex(math.cos(theta), minor * math.sin(theta))
        tracker.observe(1e-6 - abs(b(DISK, 2, a, z).value - 1.0), z)
    tracker.details["a"] = a
    return tracker.report()
