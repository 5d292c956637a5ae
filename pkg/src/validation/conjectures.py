"""
src/validation/conjectures.py
Counterexample searches for two open statements:
  - artanh s_D satisfies the triangle inequality;
  - R(p, a) ≤ 1 + |a| for p ∈ {1, 2}.
Reports are flagged conjecture=True: a pass is evidence, never a proof.
"""
from __future__ import annotations

import math

from src.barrlund.exponent import PExponent
from src.metrics.classical import s_disk
from src.mobius_qc.lipschitz import lipschitz_sup_estimate
from src.utils.config import suite_tolerance, validation_value
from src.utils.logger import get_logger
from src.validation.report import MarginTracker, VerificationReport
from src.validation.sampling import disk_point, stream_id, trial_rng

log = get_logger("validation")

COLLINEAR_TRIPLE = (0.1, 0.4, 0.7)


def artanh_s(z1: complex, z2: complex) -> float:
    return math.atanh(s_disk(z1, z2).value)


def radial_artanh(r: float, s: float) -> float:
    """artanh s_D(r, s) = ½·log((1−r)/(1−s)) for 0 ≤ r ≤ s < 1."""
    return 0.5 * math.log((1.0 - r) / (1.0 - s))


def search_artanh_triangle(trials: int, seed: int) -> VerificationReport:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    tracker = MarginTracker("conjecture-artanh", trials, seed, suite_tolerance())
    stream = stream_id("conjecture-artanh")
    violations = 0
    for i in range(trials):
        rng = trial_rng(seed, i, stream)
        x, y, z = disk_point(rng), disk_point(rng), disk_point(rng)
        if x == z:
            continue
        slack = artanh_s(x, y) + artanh_s(y, z) - artanh_s(x, z)
        tracker.observe(slack, "random", x, y, z)
        if slack < -suite_tolerance():
            violations += 1

    r, s, t = COLLINEAR_TRIPLE
    addition = artanh_s(r, t) - (artanh_s(r, s) + artanh_s(s, t))
    tracker.observe(-abs(addition), "collinear-addition", r, s, t)
    for a, c in ((r, s), (s, t), (r, t)):
        tracker.observe(-abs(artanh_s(a, c) - radial_artanh(a, c)), "radial-formula", a, c)
    tracker.observe(artanh_s(s, s) + artanh_s(s, t) - artanh_s(s, t), "degenerate", s, s, t)

    tracker.details.update({"violations": violations, "collinear_slack": addition})
    report = tracker.report(conjecture=True)
    log.info(f"artanh triangle search: {violations} violations in {trials} triples")
    return report


def search_mobius_lipschitz(trials: int, seed: int) -> VerificationReport:
    """Compare the observed sup of b(T_a z1, T_a z2)/b(z1, z2) with 1 + |a|."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    tracker = MarginTracker("conjecture-mobius", trials, seed, suite_tolerance())
    a_grid = validation_value("mobius_a_grid")
    exponents = (PExponent(1.0), PExponent(2.0))
    each = max(1, trials // (len(a_grid) * len(exponents)))
    observed = {}
    for p in exponents:
        for a_abs in a_grid:
            exp = lipschitz_sup_estimate(p, complex(a_abs), each, seed)
            tracker.observe(exp.conjectured_bound - exp.observed_sup, p, a_abs, *exp.witness)
            observed[f"p={p},a={a_abs:g}"] = {
                "observed_sup": exp.observed_sup,
                "conjectured": exp.conjectured_bound,
                "radial_sup": exp.radial_sup,
                "pairs": exp.ratios_checked,
            }
    tracker.details["estimates"] = observed
    return tracker.report(conjecture=True)
