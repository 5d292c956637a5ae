"""
src/validation/suites.py
Named inequality suites.

Every suite draws its points from per-trial generators keyed by
(seed, suite name, trial index) and reports the most negative slack it saw,
so a suite run is a pure function of (trials, seed).
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from src.barrlund.closed_forms import (
    b_disk_inf,
    b_disk_p2_closed,
    b_halfplane_inf,
    b_halfplane_p,
    b_halfplane_p2_closed,
    b_punctured,
)
from src.barrlund.dispatcher import BoundaryMode, b
from src.barrlund.exponent import PExponent, as_exponent
from src.bounds.general import distance_bounds
from src.bounds.halfplane import halfplane_upper_bound, t_bound, u_bound
from src.geometry.domains import (
    Domain,
    ExteriorUnitDisk,
    HalfPlane,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    nearest_boundary_point,
    similarity_apply,
    similarity_image,
    square_annulus,
)
from src.metrics.classical import (
    hyperbolic_disk,
    hyperbolic_halfplane,
    m_disk,
    point_pair,
    s_disk,
    s_halfplane,
)
from src.metrics.result import MetricResult
from src.mobius_qc.distortion import grotzsch_mu, phi_K, schwarz_bound
from src.mobius_qc.lipschitz import (
    lipschitz_ratio,
    lipschitz_sup_estimate,
    radial_family_lower_bound,
)
from src.mobius_qc.maps import inversion_sharpness_ratio, map_zoo, qc_bound
from src.mobius_qc.mobius import cayley, halfplane_automorphism, mobius_disk
from src.utils.config import p_values, suite_tolerance, validation_value
from src.utils.errors import OutOfRangeError
from src.utils.logger import get_logger
from src.validation.balls import check_ball_inclusions, check_unit_ball_ellipse
from src.validation.conjectures import search_artanh_triangle, search_mobius_lipschitz
from src.validation.oracle import oracle_b
from src.validation.report import MarginTracker, VerificationReport
from src.validation.sampling import disk_point, halfplane_point, stream_id, trial_rng

log = get_logger("validation")

DISK = UnitDisk()
HALFPLANE = UpperHalfPlane()
EXTERIOR = ExteriorUnitDisk()
PUNCTURED = PuncturedPlane(center=0.3 + 0.2j)
INF = PExponent.infinity()

CANONICAL: dict[str, Domain] = {"disk": DISK, "halfplane": HALFPLANE}

SuiteFn = Callable[[int, int], VerificationReport]
SUITES: dict[str, SuiteFn] = {}
CONJECTURE_SUITES: set[str] = set()


def register(name: str, conjecture: bool = False) -> Callable[[SuiteFn], SuiteFn]:
    def wrap(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        if conjecture:
            CONJECTURE_SUITES.add(name)
        return fn
    return wrap


# ── Helpers ───────────────────────────────────────────────────────

def _trial_rngs(name: str, trials: int, seed: int):
    stream = stream_id(name)
    for i in range(trials):
        yield trial_rng(seed, i, stream)


def _tracker(name: str, trials: int, seed: int, kind: str = "closed_form") -> MarginTracker:
    return MarginTracker(name, trials, seed, suite_tolerance(kind))


def _grid(key: str) -> list[PExponent]:
    return [as_exponent(p) for p in p_values(key)]


def _point(rng: np.random.Generator, kind: str) -> complex:
    return disk_point(rng) if kind == "disk" else halfplane_point(rng)


def _s(kind: str, z1: complex, z2: complex) -> float:
    return (s_disk(z1, z2) if kind == "disk" else s_halfplane(z1, z2)).value


def _rel(a: float, b_: float) -> float:
    return abs(a - b_) / max(abs(b_), 1e-300)


def _annulus_point(rng: np.random.Generator, outer: float, inner: float) -> complex:
    while True:
        z = complex(outer * (2.0 * rng.random() - 1.0), outer * (2.0 * rng.random() - 1.0))
        if max(abs(z.real), abs(z.imag)) > inner and max(abs(z.real), abs(z.imag)) < outer:
            return z


def supremum_family(x: complex, alpha: float) -> tuple[complex, complex]:
    """
    Pair straddling the boundary point w nearest to x: separation 2α, midpoint
    at depth α². b_{D,p} of the pair tends to 2^{1−1/p} as α → 0.
    """
    if not 0.0 < alpha < 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1), got {alpha}")
    w = nearest_boundary_point(DISK, x)
    depth = 1.0 - alpha * alpha
    return w * complex(depth, alpha), w * complex(depth, -alpha)


# ── Comparison with the triangular ratio metric ───────────────────

@register("sandwich")
def sandwich_suite(trials: int, seed: int) -> VerificationReport:
    """s_G ≤ b_{G,p} ≤ 2^{1−1/p}·s_G on D and H."""
    tracker = _tracker("sandwich", trials, seed)
    grid = _grid("p_grid")
    for rng in _trial_rngs("sandwich", trials, seed):
        for kind, d in CANONICAL.items():
            z1, z2 = _point(rng, kind), _point(rng, kind)
            s = _s(kind, z1, z2)
            for p in grid:
                value = b(d, p, z1, z2).value
                tracker.observe(value - s, kind, p, z1, z2)
                tracker.observe(p.sup_bound * s - value, kind, p, z1, z2)
    return tracker.report()


@register("p-monotonicity")
def p_monotonicity_suite(trials: int, seed: int) -> VerificationReport:
    """b_{G,r} ≤ b_{G,p} ≤ 2^{1/r−1/p}·b_{G,r} for r < p."""
    tracker = _tracker("p-monotonicity", trials, seed)
    grid = sorted(_grid("p_grid"), key=lambda p: p.value)
    pairs = list(zip(grid, grid[1:]))
    for rng in _trial_rngs("p-monotonicity", trials, seed):
        for kind, d in CANONICAL.items():
            z1, z2 = _point(rng, kind), _point(rng, kind)
            values = {p: b(d, p, z1, z2).value for p in grid}
            for r, p in pairs:
                factor = 2.0 ** (1.0 / r.value - 1.0 / p.value)
                tracker.observe(values[p] - values[r], kind, r, p, z1, z2)
                tracker.observe(factor * values[r] - values[p], kind, r, p, z1, z2)
    return tracker.report()


@register("inf-bracketing")
def inf_bracketing_suite(trials: int, seed: int) -> VerificationReport:
    """b_{G,p} ≤ b_{G,∞} ≤ 2^{1/p}·b_{G,p}."""
    tracker = _tracker("inf-bracketing", trials, seed)
    grid = _grid("p_grid")
    for rng in _trial_rngs("inf-bracketing", trials, seed):
        for kind, d in CANONICAL.items():
            z1, z2 = _point(rng, kind), _point(rng, kind)
            top = b(d, INF, z1, z2).value
            for p in grid:
                value = b(d, p, z1, z2).value
                tracker.observe(top - value, kind, p, z1, z2)
                tracker.observe(2.0 ** (1.0 / p.value) * value - top, kind, p, z1, z2)
    return tracker.report()


# ── Classical metrics on the disk ─────────────────────────────────

@register("m-disk")
def m_disk_suite(trials: int, seed: int) -> VerificationReport:
    """s_D ≤ m_D, with equality for pairs collinear with the origin."""
    tracker = _tracker("m-disk", trials, seed)
    radius = float(validation_value("sampling")["disk_radius"])
    near_equal = 0
    for rng in _trial_rngs("m-disk", trials, seed):
        z1, z2 = disk_point(rng), disk_point(rng)
        gap = m_disk(z1, z2) - s_disk(z1, z2).value
        tracker.observe(gap, "random", z1, z2)
        if gap < 1e-12:
            near_equal += 1

        theta = 2.0 * math.pi * rng.random()
        w = complex(math.cos(theta), math.sin(theta))
        sign = 1.0 if rng.random() < 0.5 else -1.0
        x, y = radius * rng.random() * w, sign * radius * rng.random() * w
        if x != y:
            tracker.observe(-abs(m_disk(x, y) - s_disk(x, y).value), "collinear", x, y)
    tracker.details["near_equal_random_pairs"] = near_equal
    return tracker.report()


@register("m-disk-non-metric")
def m_disk_non_metric_suite(trials: int, seed: int) -> VerificationReport:
    """m_D(t, it) > m_D(0, t) + m_D(0, it) on the configured t-range."""
    tracker = _tracker("m-disk-non-metric", trials, seed)
    lo, hi = validation_value("m_disk_witness_t")
    for t in np.linspace(lo, hi, 100):
        t = float(t)
        violation = m_disk(t, 1j * t) - (m_disk(0, t) + m_disk(0, 1j * t))
        tracker.observe(violation, t)
    tracker.details["onset_t"] = 2.0 * math.sqrt(2.0) - 2.0
    return tracker.report()


@register("hyperbolic-bound")
def hyperbolic_bound_suite(trials: int, seed: int) -> VerificationReport:
    """tanh(ρ_D/4) ≤ s_D ≤ tanh(ρ_D/2)."""
    tracker = _tracker("hyperbolic-bound", trials, seed)
    for rng in _trial_rngs("hyperbolic-bound", trials, seed):
        z1, z2 = disk_point(rng), disk_point(rng)
        rho = hyperbolic_disk(z1, z2)
        s = s_disk(z1, z2).value
        tracker.observe(s - math.tanh(0.25 * rho), "lower", z1, z2)
        tracker.observe(math.tanh(0.5 * rho) - s, "upper", z1, z2)
    return tracker.report()


@register("hyperbolic-consistency")
def hyperbolic_consistency_suite(trials: int, seed: int) -> VerificationReport:
    """ρ_H agrees with ρ_D through the Cayley map; s_H = tanh(ρ_H/2)."""
    tracker = _tracker("hyperbolic-consistency", trials, seed)
    for rng in _trial_rngs("hyperbolic-consistency", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        rho = hyperbolic_halfplane(z1, z2)
        tracker.observe(-_rel(hyperbolic_disk(cayley(z1), cayley(z2)), rho), "cayley", z1, z2)
        tracker.observe(-abs(s_halfplane(z1, z2).value - math.tanh(0.5 * rho)), "s-tanh", z1, z2)
    return tracker.report()


@register("point-pair")
def point_pair_suite(trials: int, seed: int) -> VerificationReport:
    """s_D ≤ p_D; p_H = tanh(ρ_H/2); p_D = m_D on a radius."""
    tracker = _tracker("point-pair", trials, seed)
    for rng in _trial_rngs("point-pair", trials, seed):
        z1, z2 = disk_point(rng), disk_point(rng)
        tracker.observe(point_pair(DISK, z1, z2) - s_disk(z1, z2).value, "convex", z1, z2)

        w1, w2 = halfplane_point(rng), halfplane_point(rng)
        tanh_half = math.tanh(0.5 * hyperbolic_halfplane(w1, w2))
        tracker.observe(-abs(point_pair(HALFPLANE, w1, w2) - tanh_half), "halfplane", w1, w2)

        r, t = sorted(0.999 * rng.random(2))
        if r < t:
            tracker.observe(-abs(point_pair(DISK, r, t) - m_disk(r, t)), "radius", r, t)
    return tracker.report()


# ── Half-plane bounds ─────────────────────────────────────────────

@register("halfplane-lower-bounds")
def halfplane_lower_bounds_suite(trials: int, seed: int) -> VerificationReport:
    """s_H ≤ T_p ≤ b_{H,p}; U_p ≤ b_{H,p}; U_p ≥ T_p for p ≥ 2."""
    tracker = _tracker("halfplane-lower-bounds", trials, seed)
    grid = _grid("bound_p_grid")
    order: dict[str, dict[str, int]] = {}
    for rng in _trial_rngs("halfplane-lower-bounds", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        s = s_halfplane(z1, z2).value
        for p in grid:
            value = b(HALFPLANE, p, z1, z2).value
            t, u = t_bound(p, z1, z2), u_bound(p, z1, z2)
            tracker.observe(t - s, "T>=s", p, z1, z2)
            tracker.observe(value - t, "b>=T", p, z1, z2)
            tracker.observe(value - u, "b>=U", p, z1, z2)
            if p.value == 1.0:
                tracker.observe(-abs(t - s), "T1=s", z1, z2)
            elif p.value >= 2.0:
                tracker.observe(u - t, "U>=T", p, z1, z2)
            else:
                counts = order.setdefault(str(p), {"U>=T": 0, "U<T": 0})
                counts["U>=T" if u >= t else "U<T"] += 1
    tracker.details["order_between_1_and_2"] = order
    return tracker.report()


@register("halfplane-bound-equality")
def halfplane_bound_equality_suite(trials: int, seed: int) -> VerificationReport:
    """T_p = b_{H,p} iff the real parts or the imaginary parts agree."""
    tracker = MarginTracker("halfplane-bound-equality", trials, seed, 0.0)
    skipped = 0
    grid = _grid("equality_p_grid")
    for rng in _trial_rngs("halfplane-bound-equality", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        same_re = complex(z1.real, z2.imag)
        same_im = complex(z2.real, z1.imag)
        for p in grid:
            for label, w in (("re-equal", same_re), ("im-equal", same_im)):
                if w == z1:
                    continue
                gap = abs(b(HALFPLANE, p, z1, w).value - t_bound(p, z1, w))
                tracker.observe(1e-10 - gap, label, p, z1, w)

        if abs((z1 - z2).real) < 0.1 or abs((z1 - z2).imag) < 0.1:
            skipped += 1
            continue
        for p in (2.0, 3.0, 5.0):
            gap = b(HALFPLANE, p, z1, z2).value - t_bound(p, z1, z2)
            tracker.observe(gap - 1e-12, "strict", p, z1, z2)
    tracker.details["generic_pairs_skipped"] = skipped
    return tracker.report()


@register("halfplane-upper-bound")
def halfplane_upper_bound_suite(trials: int, seed: int) -> VerificationReport:
    """b_{H,p} ≤ |z1−z2| / max(Im z1, Im z2)."""
    tracker = _tracker("halfplane-upper-bound", trials, seed)
    grid = _grid("axiom_p_grid")
    for rng in _trial_rngs("halfplane-upper-bound", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        bound = halfplane_upper_bound(z1, z2)
        for p in grid:
            tracker.observe(bound - b(HALFPLANE, p, z1, z2).value, p, z1, z2)
    return tracker.report()


@register("inversion-comparison")
def inversion_comparison_suite(trials: int, seed: int) -> VerificationReport:
    """b_{D,p}(z1, z2) < b_{ext,p}(1/z1, 1/z2), strictly: equality fails. Margins are relative."""
    tracker = _tracker("inversion-comparison", trials, seed)
    for rng in _trial_rngs("inversion-comparison", trials, seed):
        z1, z2 = disk_point(rng), disk_point(rng)
        if z1 == 0 or z2 == 0 or z1 == z2:
            continue
        for p in (1.0, 1.5, 2.0, 3.0):
            inner = b(DISK, p, z1, z2).value
            outer = b(EXTERIOR, p, 1.0 / z1, 1.0 / z2).value
            tracker.observe_strict((outer - inner) / inner, p, z1, z2)
    return tracker.report()


# ── Metric axioms and equality cases ──────────────────────────────

@register("metric-axioms")
def metric_axioms_suite(trials: int, seed: int) -> VerificationReport:
    tracker = _tracker("metric-axioms", trials, seed)
    grid = _grid("axiom_p_grid")
    for rng in _trial_rngs("metric-axioms", trials, seed):
        for kind, d in CANONICAL.items():
            x, y, z = _point(rng, kind), _point(rng, kind), _point(rng, kind)
            for p in grid:
                xy, yx = b(d, p, x, y).value, b(d, p, y, x).value
                yz, xz = b(d, p, y, z).value, b(d, p, x, z).value
                tracker.observe(xy, "nonnegative", kind, p, x, y)
                tracker.observe(-b(d, p, x, x).value, "identity", kind, p, x)
                tracker.observe(-abs(xy - yx), "symmetry", kind, p, x, y)
                tracker.observe(xy + yz - xz, "triangle", kind, p, x, y, z)
    return tracker.report()


@register("equality-attainment")
def equality_attainment_suite(trials: int, seed: int) -> VerificationReport:
    """
    b_{H,p} = 2^{1−1/p}·s_H on pairs at equal height; the supremum family in D
    comes within 1e−3 of 2^{1−1/p}; the punctured plane attains it.
    """
    tracker = MarginTracker("equality-attainment", trials, seed, 1e-10)
    alpha = float(validation_value("supremum_alpha"))
    best_ratio: dict[str, float] = {}
    for rng in _trial_rngs("equality-attainment", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        z2 = complex(z2.real, z1.imag)
        x = disk_point(rng)
        u, v = supremum_family(x, alpha)
        t = 0.5 + 2.5 * rng.random()
        for p in _grid("equality_p_grid"):
            if z1 != z2:
                s = s_halfplane(z1, z2).value
                value = b(HALFPLANE, p, z1, z2).value
                tracker.observe(-abs(value - p.sup_bound * s), "equal-height", p, z1, z2)
                best_ratio[str(p)] = max(best_ratio.get(str(p), 0.0), value / s)
            tracker.observe(b(DISK, p, u, v).value - (p.sup_bound - 1e-3), "supremum", p, u, v)
            c = PUNCTURED.center
            pair = (c + t, c - t)
            tracker.observe(-abs(b(PUNCTURED, p, *pair).value - p.sup_bound), "punctured", p, *pair)
    tracker.details["max_b_over_s"] = best_ratio
    return tracker.report()


# ── Oracle agreement ──────────────────────────────────────────────

def _oracle_cases() -> list[tuple[str, Domain, PExponent, Callable[[complex, complex], MetricResult], str]]:
    return [
        ("s_disk", DISK, PExponent(1.0), s_disk, "disk"),
        ("s_halfplane", HALFPLANE, PExponent(1.0), s_halfplane, "halfplane"),
        ("b_disk_p2", DISK, PExponent(2.0), b_disk_p2_closed, "disk"),
        ("b_halfplane_p2", HALFPLANE, PExponent(2.0), b_halfplane_p2_closed, "halfplane"),
        ("b_halfplane_p3", HALFPLANE, PExponent(3.0), lambda z1, z2: b_halfplane_p(3.0, z1, z2), "halfplane"),
        ("b_disk_p3", DISK, PExponent(3.0), lambda z1, z2: b(DISK, 3.0, z1, z2), "disk"),
        ("b_halfplane_inf", HALFPLANE, INF, b_halfplane_inf, "halfplane"),
        ("b_disk_inf", DISK, INF, b_disk_inf, "disk"),
        ("b_punctured", PUNCTURED, PExponent(3.0),
         lambda z1, z2: b_punctured(PUNCTURED, PExponent(3.0), z1, z2), "punctured"),
    ]


@register("oracle-equivalence")
def oracle_equivalence_suite(trials: int, seed: int) -> VerificationReport:
    tracker = _tracker("oracle-equivalence", trials, seed, "oracle")
    for name, d, p, closed, kind in _oracle_cases():
        for rng in _trial_rngs(f"oracle-equivalence:{name}", trials, seed):
            if kind == "punctured":
                z1, z2 = disk_point(rng, 4.0), disk_point(rng, 4.0)
            else:
                z1, z2 = _point(rng, kind), _point(rng, kind)
            if z1 == z2:
                continue
            reference = oracle_b(d, p, z1, z2).value
            tracker.observe(-_rel(closed(z1, z2).value, reference), name, z1, z2)
    return tracker.report()


@register("tangency")
def tangency_suite(trials: int, seed: int) -> VerificationReport:
    """When |z2 − z1/|z1|| ≤ 1 − |z1| the extremal point of b_{D,∞} is z1/|z1|."""
    tracker = _tracker("tangency", trials, seed, "oracle")
    for rng in _trial_rngs("tangency", trials, seed):
        z1 = disk_point(rng)
        if z1 == 0:
            continue
        u1 = z1 / abs(z1)
        eps = 0.99 * rng.random() * (1.0 - abs(z1))
        phi = (2.0 * rng.random() - 1.0) * math.pi / 3.0
        z2 = u1 * (1.0 - eps * complex(math.cos(phi), math.sin(phi)))
        if z2 == z1 or abs(z2 - u1) > 1.0 - abs(z1):
            continue
        closed = b_disk_inf(z1, z2)
        reference = oracle_b(DISK, INF, z1, z2)
        tracker.observe(-abs(reference.extremal_point - u1), "oracle-point", z1, z2)
        tracker.observe(-abs(closed.extremal_point - u1), "closed-point", z1, z2)
        tracker.observe(-_rel(closed.value, reference.value), "value", z1, z2)
    return tracker.report()


# ── Balls, Möbius maps and quasiconformal distortion ──────────────

@register("ball-inclusions")
def ball_inclusions_suite(trials: int, seed: int) -> VerificationReport:
    """Circle density follows trials, capped by the configured circle_samples."""
    tracker = _tracker("ball-inclusions", trials, seed)
    n = min(int(validation_value("circle_samples")), max(360, 10 * trials))
    for a, r in validation_value("ball_cases"):
        for p in (2.0, 3.0):
            tracker.merge(check_ball_inclusions(a, r, p, circle_samples=n), f"a={a},r={r},p={p:g}")
    tracker.merge(check_unit_ball_ellipse(0.3), "ellipse a=0.3")
    return tracker.report()


@register("mobius-lipschitz")
def mobius_lipschitz_suite(trials: int, seed: int) -> VerificationReport:
    """
    b(T_a z1, T_a z2) ≤ 2^{2−1/p}·s/(1+s²); the same with b in place of s
    wherever b ≤ 1; the bilipschitz envelope (1±|a|)/(1∓|a|); ρ_D invariance;
    the D ↔ H Lipschitz constants; R(p, a) ≥ 1 + |a| from the radial family.
    """
    tracker = _tracker("mobius-lipschitz", trials, seed)
    above_one = 0
    for rng in _trial_rngs("mobius-lipschitz", trials, seed):
        a, z1, z2 = disk_point(rng), disk_point(rng), disk_point(rng)
        w1, w2 = mobius_disk(a, z1), mobius_disk(a, z2)
        s = s_disk(z1, z2).value
        for p in (PExponent(1.0), PExponent(2.0), PExponent(3.0)):
            base = b(DISK, p, z1, z2).value
            image = b(DISK, p, w1, w2).value
            scale = 2.0 ** (2.0 - 1.0 / p.value)
            tracker.observe(scale * s / (1.0 + s * s) - image, "T_a via s", p, a, z1, z2)
            if base <= 1.0:
                tracker.observe(scale * base / (1.0 + base * base) - image, "T_a via b", p, a, z1, z2)
            else:
                above_one += 1

        lo, hi = (1.0 - abs(a)) / (1.0 + abs(a)), (1.0 + abs(a)) / (1.0 - abs(a))
        for p in (PExponent(1.0), PExponent(2.0), INF):
            base = b(DISK, p, z1, z2).value
            image = b(DISK, p, w1, w2).value
            tracker.observe(image - lo * base, "bilipschitz-low", p, a, z1, z2)
            tracker.observe(hi * base - image, "bilipschitz-high", p, a, z1, z2)

        rho = hyperbolic_disk(z1, z2)
        tracker.observe(-_rel(hyperbolic_disk(w1, w2), rho), "isometry", a, z1, z2)

        h1, h2 = halfplane_point(rng), halfplane_point(rng)
        for p in (PExponent(1.0), PExponent(2.0), INF):
            from_disk = 2.0 * p.sup_bound
            from_half = p.sup_bound
            b_d, b_h = b(DISK, p, z1, z2).value, b(HALFPLANE, p, h1, h2).value
            tracker.observe(
                from_half * b_h - b(DISK, p, cayley(h1), cayley(h2)).value, "H->D", p, h1, h2)
            tracker.observe(
                from_disk * b_d - b(HALFPLANE, p, cayley(z1, inverse=True), cayley(z2, inverse=True)).value,
                "D->H", p, z1, z2)
            coeffs = (2.0, 1.0, 0.0, 1.0)
            tracker.observe(
                from_half * b_h
                - b(HALFPLANE, p, halfplane_automorphism(coeffs, h1), halfplane_automorphism(coeffs, h2)).value,
                "H->H", p, h1, h2)
    tracker.details["pairs_with_b_above_one"] = above_one

    each = max(1, trials // 10)
    estimates = {}
    for p in (PExponent(1.0), PExponent(2.0), INF):
        identity = lipschitz_sup_estimate(p, 0j, 1, seed)
        tracker.observe(-abs(identity.observed_sup - 1.0), "R(p,0)", p)
        for a_abs in validation_value("mobius_a_grid"):
            exp = lipschitz_sup_estimate(p, complex(a_abs), each, seed)
            tracker.observe(exp.observed_sup - (exp.conjectured_bound - 1e-3), "radial-lower", p, a_abs)
            tracker.observe(exp.ceiling - exp.observed_sup, "ceiling", p, a_abs, *exp.witness)
            estimates[f"p={p},a={a_abs:g}"] = exp.observed_sup

            direction = -1.0
            for r, s_ in ((0.1, 0.3), (0.05, 0.5), (0.3, 0.31)):
                ratio = lipschitz_ratio(p, complex(a_abs), r * direction, s_ * direction)
                formula = radial_family_lower_bound(p, a_abs, r, s_)
                tracker.observe(-_rel(ratio, formula), "radial-formula", p, a_abs, r, s_)
    tracker.details["observed_sup"] = estimates
    return tracker.report()


@register("distortion")
def distortion_suite(trials: int, seed: int) -> VerificationReport:
    """φ_K(r) ≤ 4^{1−1/K}·r^{1/K}; μ(φ_K(r)) = μ(r)/K; μ(1/√2) = π/2."""
    tracker = _tracker("distortion", trials, seed)
    for K in validation_value("distortion_K_grid"):
        for r in validation_value("distortion_r_grid"):
            phi = phi_K(K, r)
            tracker.observe(schwarz_bound(K, r) - phi, "schwarz", K, r)
            if K == 1.0:
                tracker.observe(-abs(phi - r), "identity", K, r)
            else:
                tracker.observe(1e-10 - abs(grotzsch_mu(phi) - grotzsch_mu(r) / K), "inverse", K, r)
    tracker.observe(-abs(grotzsch_mu(1.0 / math.sqrt(2.0)) - 0.5 * math.pi), "mu-symmetric")
    r = 0.6
    product = grotzsch_mu(r) * grotzsch_mu(math.sqrt(1.0 - r * r))
    tracker.observe(-abs(product - 0.25 * math.pi ** 2), "mu-product", r)
    return tracker.report()


@register("quasiconformal")
def quasiconformal_suite(trials: int, seed: int) -> VerificationReport:
    """b(f z1, f z2) ≤ 2^{1−1/p}·4^{1−1/K}·b(z1, z2)^{1/K} for every map in the zoo."""
    tracker = _tracker("quasiconformal", trials, seed)
    zoo = map_zoo(validation_value("qc_K_grid"))
    grid = (PExponent(1.0), PExponent(2.0), PExponent(3.0))
    for rng in _trial_rngs("quasiconformal", trials, seed):
        z1, z2 = halfplane_point(rng), halfplane_point(rng)
        for p in grid:
            base = b(HALFPLANE, p, z1, z2).value
            for f in zoo:
                image = b(HALFPLANE, p, f.apply(z1), f.apply(z2)).value
                tracker.observe(qc_bound(p, f.K, base) - image, f.name, p, z1, z2)

    sharpness = {}
    for p in grid:
        ratio = inversion_sharpness_ratio(p, 1e-4, 1e-4)
        tracker.observe(ratio - (p.sup_bound - 1e-3), "inversion-sharpness", p)
        sharpness[str(p)] = ratio
    tracker.details["inversion_ratio"] = sharpness
    return tracker.report()


# ── Domain dependence ─────────────────────────────────────────────

@register("domain-monotonicity")
def domain_monotonicity_suite(trials: int, seed: int) -> VerificationReport:
    """
    D ⊂ {Im z > −1} is midpoint convex, so b_D ≥ b_G there. The square annuli
    S4 \\ S̄2 ⊂ S4 \\ S̄1 reverse the order; the complement variant does not.
    """
    tracker = _tracker("domain-monotonicity", trials, seed)
    larger = HalfPlane(level=-1.0)
    grid = _grid("p_grid")
    small_annulus, large_annulus = square_annulus(4.0, 2.0), square_annulus(4.0, 1.0)
    for rng in _trial_rngs("domain-monotonicity", trials, seed):
        x, y = disk_point(rng), disk_point(rng)
        for p in grid:
            tracker.observe(b(DISK, p, x, y).value - b(larger, p, x, y).value, "midpoint-convex", p, x, y)

        u, v = _annulus_point(rng, 4.0, 2.0), _annulus_point(rng, 4.0, 2.0)
        if u != v:
            inner = b(small_annulus, 2, u, v, mode=BoundaryMode.COMPLEMENT).value
            outer = b(large_annulus, 2, u, v, mode=BoundaryMode.COMPLEMENT).value
            tracker.observe(inner - outer, "complement", u, v)

    in_small = b(small_annulus, 2, 3, -3).value
    in_large = b(large_annulus, 2, 3, -3).value
    tracker.observe(-abs(in_small - 6.0 / math.sqrt(26.0)), "annulus-S2", 3, -3)
    tracker.observe(-abs(in_large - 6.0 / math.sqrt(20.0)), "annulus-S1", 3, -3)
    tracker.observe(in_large - in_small, "strict-reversal", 3, -3)
    tracker.details["annulus_values"] = {"S4-S2": in_small, "S4-S1": in_large}
    return tracker.report()


@register("similarity")
def similarity_suite(trials: int, seed: int) -> VerificationReport:
    """b and p_G are invariant under z ↦ λz + c when the domain moves with the points."""
    tracker = _tracker("similarity", trials, seed)
    annulus = square_annulus(4.0, 2.0)
    cases: list[tuple[str, Domain, tuple[float, ...]]] = [
        ("disk", DISK, (1.0, 2.0, 3.0, math.inf)),
        ("halfplane", HALFPLANE, (1.0, 2.0, 3.0, math.inf)),
        ("punctured", PUNCTURED, (1.0, 2.0, 3.0, math.inf)),
        ("polygon", annulus, (2.0,)),
    ]
    for rng in _trial_rngs("similarity", trials, seed):
        scale = 0.5 + 2.5 * rng.random()
        shift = complex(4.0 * rng.random() - 2.0, 4.0 * rng.random() - 2.0)
        for name, d, grid in cases:
            if name == "punctured":
                z1, z2 = PUNCTURED.center + disk_point(rng, 2.0), PUNCTURED.center + disk_point(rng, 2.0)
            elif name == "polygon":
                z1, z2 = _annulus_point(rng, 4.0, 2.0), _annulus_point(rng, 4.0, 2.0)
            else:
                z1, z2 = _point(rng, name), _point(rng, name)
            if z1 == z2:
                continue
            image = similarity_image(d, scale, shift)
            h1, h2 = similarity_apply(scale, shift, z1), similarity_apply(scale, shift, z2)
            for p in grid:
                before, after = b(d, p, z1, z2).value, b(image, p, h1, h2).value
                tracker.observe(-_rel(after, before), name, p, scale, shift, z1, z2)
            pp = point_pair(d, z1, z2)
            tracker.observe(-_rel(point_pair(image, h1, h2), pp), f"{name}-point-pair", scale, shift, z1, z2)
    return tracker.report()


@register("distance-bounds")
def distance_bounds_suite(trials: int, seed: int) -> VerificationReport:
    """|z1−z2|/(|z1−z2| + 2·min d) ≤ b ≤ |z1−z2|/‖(d(z1), d(z2))‖_p."""
    tracker = _tracker("distance-bounds", trials, seed)
    annulus = square_annulus(4.0, 2.0)
    grid = _grid("bound_p_grid") + [INF]
    for rng in _trial_rngs("distance-bounds", trials, seed):
        samples: list[tuple[str, Domain, complex, complex, list[PExponent]]] = [
            ("disk", DISK, disk_point(rng), disk_point(rng), grid),
            ("halfplane", HALFPLANE, halfplane_point(rng), halfplane_point(rng), grid),
            ("punctured", PUNCTURED, disk_point(rng, 4.0), disk_point(rng, 4.0), grid),
            ("polygon", annulus, _annulus_point(rng, 4.0, 2.0), _annulus_point(rng, 4.0, 2.0),
             [PExponent(2.0), PExponent(3.0)]),
        ]
        for name, d, z1, z2, ps in samples:
            if z1 == z2 or (name == "punctured" and PUNCTURED.center in (z1, z2)):
                continue
            for p in ps:
                lower, upper = distance_bounds(d, p, z1, z2)
                value = b(d, p, z1, z2).value
                tracker.observe(value - lower, f"{name}-lower", p, z1, z2)
                tracker.observe(upper - value, f"{name}-upper", p, z1, z2)
    return tracker.report()


# ── Runner ────────────────────────────────────────────────────────

def run_suite(name: str, trials: int, seed: int) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"Unknown suite: {name}. Known: {', '.join(sorted(SUITES))}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    log.info(f"Running suite {name} (trials={trials}, seed={seed})")
    report = SUITES[name](trials, seed)
    if report.passed:
        log.info(f"Suite {name} passed, worst margin {report.worst_margin:.3e}")
    else:
        log.warning(f"Suite {name} FAILED, worst margin {report.worst_margin:.3e}, witness {report.witness}")
    return report


def run_inequality_suite(trials: int, seed: int, include_conjectures: bool = False) -> list[VerificationReport]:
    """One report per registered suite, in registration order."""
    names = [n for n in SUITES if include_conjectures or n not in CONJECTURE_SUITES]
    return [run_suite(name, trials, seed) for name in names]


register("conjecture-artanh", conjecture=True)(search_artanh_triangle)
register("conjecture-mobius", conjecture=True)(search_mobius_lipschitz)
