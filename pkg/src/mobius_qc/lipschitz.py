"""
src/mobius_qc/lipschitz.py
How much a Möbius self-map T_a of the disk can stretch the distance:
random search for the least constant R(p, a), seeded with the radial
family that forces R(p, a) ≥ 1 + |a|.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from src.barrlund.boundary_scan import p_norm
from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent, as_exponent
from src.geometry.domains import UnitDisk, as_point
from src.mobius_qc.mobius import mobius_disk
from src.utils.errors import OutOfDomainError
from src.utils.logger import get_logger
from src.validation.sampling import disk_point, stream_id, trial_rng

log = get_logger("mobius_qc")

DISK = UnitDisk()
RADIAL_STEPS = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


@dataclass
class LipschitzExperiment:
    p: PExponent
    a: complex
    trials: int
    seed: int
    observed_sup: float = 0.0
    witness: tuple[complex, complex] | None = None
    radial_sup: float = 0.0
    ratios_checked: int = field(default=0)

    @property
    def ceiling(self) -> float:
        """(1+|a|)/(1−|a|): T_a is bilipschitz with this constant."""
        return (1.0 + abs(self.a)) / (1.0 - abs(self.a))

    @property
    def conjectured_bound(self) -> float:
        return 1.0 + abs(self.a)


def lipschitz_ratio(p: PExponent, a: complex, z1: complex, z2: complex) -> float:
    base = b(DISK, p, z1, z2).value
    if base == 0.0:
        return 1.0
    return b(DISK, p, mobius_disk(a, z1), mobius_disk(a, z2)).value / base


def radial_family_lower_bound(p: PExponent | float, a_abs: float, r: float, s: float) -> float:
    """
    Exact ratio for the pair r·e^{iα}, s·e^{iα} with α = arg(−a):
    (1+|a|)·‖(1−r, 1−s)‖_p / ‖((1+s|a|)(1−r), (1+r|a|)(1−s))‖_p.
    """
    p = as_exponent(p)
    num = float(p_norm(1.0 - r, 1.0 - s, p))
    den = float(p_norm((1.0 + s * a_abs) * (1.0 - r), (1.0 + r * a_abs) * (1.0 - s), p))
    return (1.0 + a_abs) * num / den


def radial_pairs(a: complex) -> list[tuple[complex, complex]]:
    if a == 0:
        return []
    direction = cmath.exp(1j * cmath.phase(-a))
    pairs = []
    for s in RADIAL_STEPS:
        pairs.append((0j, s * direction))
        pairs.append((0.5 * s * direction, s * direction))
    return pairs


def lipschitz_sup_estimate(
    p: PExponent | float | str,
    a: complex,
    trials: int,
    seed: int,
) -> LipschitzExperiment:
    p = as_exponent(p)
    a = as_point(a)
    if not abs(a) < 1.0:
        raise OutOfDomainError(f"Möbius parameter must lie in the unit disk, got {a}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    exp = LipschitzExperiment(p=p, a=a, trials=trials, seed=seed)
    for z1, z2 in radial_pairs(a):
        ratio = lipschitz_ratio(p, a, z1, z2)
        exp.radial_sup = max(exp.radial_sup, ratio)
        if ratio > exp.observed_sup:
            exp.observed_sup, exp.witness = ratio, (z1, z2)
        exp.ratios_checked += 1

    stream = stream_id(f"lipschitz:{p}:{a}")
    for i in range(trials):
        rng = trial_rng(seed, i, stream)
        z1, z2 = disk_point(rng), disk_point(rng)
        ratio = lipschitz_ratio(p, a, z1, z2)
        exp.ratios_checked += 1
        if ratio > exp.observed_sup or exp.witness is None:
            exp.observed_sup, exp.witness = ratio, (z1, z2)

    log.debug(f"R(p={p}, a={a}) ≥ {exp.observed_sup:.9f} over {exp.ratios_checked} pairs")
    return exp
