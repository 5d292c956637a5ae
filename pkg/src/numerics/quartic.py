"""
src/numerics/quartic.py
Roots of polynomials of degree ≤ 4 by Aberth simultaneous iteration plus a
Newton polishing round. Sweeps run on plain Python complex scalars.
"""
from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass

import numpy as np

from src.utils.config import numerics_value
from src.utils.errors import DegenerateInputError


@dataclass(frozen=True)
class QuarticCoefficients:
    """c4·u⁴ + c3·u³ + c2·u² + c1·u + c0."""
    c4: complex
    c3: complex
    c2: complex
    c1: complex
    c0: complex

    def __post_init__(self) -> None:
        if all(c == 0 for c in self.as_array()):
            raise DegenerateInputError("All quartic coefficients are zero")

    def as_array(self) -> np.ndarray:
        return np.array([self.c4, self.c3, self.c2, self.c1, self.c0], dtype=complex)

    @property
    def scale(self) -> float:
        return float(np.max(np.abs(self.as_array())))

    def evaluate(self, u: complex | np.ndarray) -> complex | np.ndarray:
        return np.polyval(self.as_array(), u)

    @classmethod
    def alhazen(cls, z1: complex, z2: complex) -> "QuarticCoefficients":
        """Reflection quartic for foci z1, z2 and the unit circle."""
        c1, c2 = z1.conjugate(), z2.conjugate()
        return cls(c4=c1 * c2, c3=-(c1 + c2), c2=0j, c1=z1 + z2, c0=-z1 * z2)


def _trimmed(q: QuarticCoefficients) -> list[complex]:
    coeffs = [complex(c) for c in (q.c4, q.c3, q.c2, q.c1, q.c0)]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) < 2:
        raise DegenerateInputError("Polynomial has degree 0 after dropping leading zeros")
    return coeffs


def _horner(coeffs: list[complex], u: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * u + c
    return acc


def _rounding_floor(moduli: list[float], r: float) -> float:
    """Bound on the rounding error of Horner's rule at a point of modulus r."""
    acc = 0.0
    for m in moduli:
        acc = acc * r + m
    return 4.0 * len(moduli) * sys.float_info.epsilon * acc


def _initial_guesses(coeffs: list[complex]) -> list[complex]:
    n = len(coeffs) - 1
    cauchy = 1.0 + max(abs(c / coeffs[0]) for c in coeffs[1:])
    # geometric mean of the root moduli when the constant term is nonzero
    mean = abs(coeffs[-1] / coeffs[0]) ** (1.0 / n) if coeffs[-1] != 0 else 1.0
    radius = min(max(mean, 1e-3), cauchy)
    return [cmath.rect(radius, 2.0 * math.pi * k / n + 0.4) for k in range(n)]


def solve_quartic(q: QuarticCoefficients) -> np.ndarray:
    """All roots with multiplicity of the polynomial q (degree ≤ 4)."""
    coeffs = _trimmed(q)
    if len(coeffs) == 2:
        return np.array([-coeffs[1] / coeffs[0]], dtype=complex)

    cfg = numerics_value("quartic")
    tol, max_iter = float(cfg["tol"]), int(cfg["max_iter"])
    n = len(coeffs) - 1
    deriv = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
    moduli = [abs(c) for c in coeffs]
    roots = _initial_guesses(coeffs)

    # Gauss–Seidel Aberth sweeps on plain complex scalars
    for _ in range(max_iter):
        max_step = 0.0
        for k in range(n):
            rk = roots[k]
            pk = _horner(coeffs, rk)
            if abs(pk) <= _rounding_floor(moduli, abs(rk)):
                continue
            diffs = [rk - roots[j] for j in range(n) if j != k]
            if any(d == 0 for d in diffs):
                roots[k] = rk + tol * (1.0 + abs(rk))  # split coincident iterates
                max_step = 1.0
                continue
            dpk = _horner(deriv, rk)
            ratio = pk / dpk if dpk != 0 else pk / tol
            denom = 1.0 - ratio * sum(1.0 / d for d in diffs)
            step = ratio / denom if denom != 0 else ratio
            roots[k] = rk - step
            max_step = max(max_step, abs(step) / (1.0 + abs(roots[k])))
        if max_step <= tol:
            break

    # Newton polish
    for k, r in enumerate(roots):
        p, dp = _horner(coeffs, r), _horner(deriv, r)
        if dp != 0:
            polished = r - p / dp
            if abs(_horner(coeffs, polished)) <= abs(p):
                roots[k] = polished
    return np.array(roots, dtype=complex)
