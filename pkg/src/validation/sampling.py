"""
src/validation/sampling.py
Seeded random points. Every trial draws from its own generator derived
from (seed, stream, index), so serial and parallel runs see the same points.
"""
from __future__ import annotations

import math
import zlib

import numpy as np

from src.utils.config import validation_value


def stream_id(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def trial_rng(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed % 2**64, stream, index])


def disk_point(rng: np.random.Generator, radius: float | None = None) -> complex:
    """Uniform over the disk |z| < radius (default from config)."""
    radius = float(validation_value("sampling")["disk_radius"]) if radius is None else radius
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(theta), r * math.sin(theta))


def halfplane_point(rng: np.random.Generator) -> complex:
    """Uniform over the configured box [x0, x1] × (y0, y1]."""
    cfg = validation_value("sampling")
    x0, x1 = cfg["halfplane_x"]
    y0, y1 = cfg["halfplane_y"]
    x = x0 + (x1 - x0) * rng.random()
    y = y1 - (y1 - y0) * rng.random()  # rng.random() ∈ [0, 1) keeps y > y0
    return complex(x, y)

