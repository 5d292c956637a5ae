"""
src/metrics/result.py
Result record shared by every metric evaluator.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Method(str, Enum):
    CLOSED_FORM = "closed-form"
    QUARTIC_SOLVE = "quartic-solve"
    ROOT_SOLVE = "root-solve"
    SCAN = "scan"


@dataclass(frozen=True)
class MetricResult:
    value: float
    extremal_point: complex | None
    method: Method
    residual: float = 0.0

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"Metric value must be nonnegative, got {self.value}")

    def __float__(self) -> float:
        return self.value

    def to_dict(self) -> dict[str, Any]:
        z = self.extremal_point
        return {
            "value":          self.value,
            "extremal_point": None if z is None else [z.real, z.imag],
            "method":         self.method.value,
            "residual":       self.residual,
        }


def coincident() -> MetricResult:
    """Result for z1 == z2."""
    return MetricResult(0.0, None, Method.CLOSED_FORM, 0.0)
