"""
src/validation/report.py
VerificationReport and the margin tracker every suite feeds.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.barrlund.exponent import PExponent


def encode(obj: Any) -> Any:
    """JSON-friendly form: complex → [re, im], exponents → "inf" / float."""
    if isinstance(obj, np.ndarray):
        return encode(obj.tolist())
    if isinstance(obj, np.generic):
        return encode(obj.item())
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, PExponent):
        return "inf" if obj.is_infinite else obj.value
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


@dataclass
class VerificationReport:
    suite: str
    trials: int
    seed: int
    worst_margin: float
    witness: list[Any]
    passed: bool
    runtime_ms: int | None = None
    tolerance: float = 1e-9
    conjecture: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self, include_runtime: bool = True) -> dict[str, Any]:
        return {
            "suite":        self.suite,
            "trials":       self.trials,
            "seed":         self.seed,
            "worst_margin": encode(self.worst_margin),
            "witness":      encode(self.witness),
            "passed":       bool(self.passed),
            "runtime_ms":   self.runtime_ms if include_runtime else None,
            "tolerance":    self.tolerance,
            "conjecture":   self.conjecture,
            "details":      encode(self.details),
        }

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), ensure_ascii=False)


class MarginTracker:
    """Keeps the most negative slack seen and the inputs that produced it."""

    def __init__(self, suite: str, trials: int, seed: int, tolerance: float):
        self.suite = suite
        self.trials = trials
        self.seed = seed
        self.tolerance = tolerance
        self.worst = math.inf
        self.witness: list[Any] = []
        self.checks = 0
        self.details: dict[str, Any] = {}
        self._started = time.perf_counter()

    def observe(self, margin: float, *witness: Any) -> None:
        self.checks += 1
        if margin < self.worst or not self.witness:
            self.worst = min(self.worst, margin)
            self.witness = list(witness)

    def observe_strict(self, margin: float, *witness: Any) -> None:
        """Strict inequality: a margin within tolerance of zero is reported as a failure."""
        self.observe(margin - 2.0 * self.tolerance, *witness)

    def merge(self, other: VerificationReport, label: str) -> None:
        """Fold a sub-report in, keeping its witness if it is the new worst."""
        self.checks += 1
        if other.worst_margin < self.worst or not self.witness:
            self.worst = min(self.worst, other.worst_margin)
            self.witness = [label, *other.witness]

    def report(self, conjecture: bool = False) -> VerificationReport:
        worst = self.worst if self.checks else 0.0
        self.details.setdefault("checks", self.checks)
        return VerificationReport(
            suite=self.suite,
            trials=self.trials,
            seed=self.seed,
            worst_margin=float(worst),
            witness=self.witness,
            passed=bool(worst >= -self.tolerance),
            runtime_ms=int(round(1000.0 * (time.perf_counter() - self._started))),
            tolerance=self.tolerance,
            conjecture=conjecture,
            details=self.details,
        )
