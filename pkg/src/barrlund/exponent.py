"""
src/barrlund/exponent.py
The exponent p ∈ [1, ∞].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from src.utils.errors import OutOfRangeError


@dataclass(frozen=True)
class PExponent:
    """Finite(p ≥ 1) or Infinity (stored as math.inf)."""
    value: float

    def __post_init__(self) -> None:
        v = float(self.value)
        if math.isnan(v) or v < 1.0:
            raise OutOfRangeError(f"p must satisfy 1 <= p <= inf, got {self.value}")
        object.__setattr__(self, "value", v)

    @classmethod
    def finite(cls, p: float) -> "PExponent":
        if math.isinf(p):
            raise OutOfRangeError("Finite exponent cannot be infinite")
        return cls(p)

    @classmethod
    def infinity(cls) -> "PExponent":
        return cls(math.inf)

    @classmethod
    def parse(cls, text: str) -> "PExponent":
        """Decimal literal or "inf"."""
        text = text.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return cls.infinity()
        try:
            return cls(float(text))
        except ValueError as e:
            raise OutOfRangeError(f"Cannot parse exponent {text!r}") from e

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    @property
    def sup_bound(self) -> float:
        """2^{1 - 1/p}, the largest value the distance can take."""
        return 2.0 if self.is_infinite else 2.0 ** (1.0 - 1.0 / self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.value:g}"


def as_exponent(p: PExponent | float | str) -> PExponent:
    if isinstance(p, PExponent):
        return p
    if isinstance(p, str):
        return PExponent.parse(p)
    return PExponent(p)
