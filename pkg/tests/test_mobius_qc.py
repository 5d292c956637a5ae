"""tests/test_mobius_qc.py"""
import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ellipk as scipy_ellipk

from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent
from src.geometry.domains import UnitDisk
from src.metrics.classical import hyperbolic_disk
from src.mobius_qc.distortion import DistortionQuery, grotzsch_mu, phi_K, schwarz_bound
from src.mobius_qc.lipschitz import (
    lipschitz_ratio,
    lipschitz_sup_estimate,
    radial_family_lower_bound,
    radial_pairs,
)
from src.mobius_qc.maps import (
    inversion,
    inversion_sharpness_ratio,
    map_zoo,
    qc_bound,
    radial_stretch,
)
from src.mobius_qc.mobius import cayley, halfplane_automorphism, mobius_disk
from src.utils.errors import OutOfDomainError, OutOfRangeError, ZeroInputError

DISK = UnitDisk()

disk_points = st.builds(
    lambda r, t: cmath.rect(r, t),
    st.floats(min_value=0.0, max_value=0.95),
    st.floats(min_value=0.0, max_value=2 * math.pi),
)


class TestMobius:
    def test_sends_a_to_origin(self):
        a = 0.3 - 0.4j
        assert mobius_disk(a, a) == 0
        assert abs(mobius_disk(a, 0.9j)) < 1

    def test_parameter_inside_disk(self):
        with pytest.raises(OutOfDomainError):
            mobius_disk(1.0, 0.2)

    def test_cayley_round_trip(self):
        z = -1.5 + 0.25j
        assert cayley(1j) == 0
        assert cayley(cayley(z), inverse=True) == pytest.approx(z, abs=1e-12)

    def test_halfplane_automorphism(self):
        assert halfplane_automorphism((2, 1, 0, 1), 1j) == 1 + 2j
        with pytest.raises(ValueError):
            halfplane_automorphism((0, 1, 1, 0), 1j)

    @given(disk_points, disk_points)
    @settings(deadline=None, max_examples=60)
    def test_hyperbolic_isometry(self, z1, z2):
        a = 0.5 + 0.2j
        before = hyperbolic_disk(z1, z2)
        after = hyperbolic_disk(mobius_disk(a, z1), mobius_disk(a, z2))
        assert after == pytest.approx(before, rel=1e-9, abs=1e-12)


class TestDistortion:
    def test_mu_at_symmetric_point(self):
        assert grotzsch_mu(1 / math.sqrt(2)) == pytest.approx(math.pi / 2, rel=1e-14)

    def test_mu_matches_scipy(self):
        for r in (0.05, 0.3, 0.9):
            expected = 0.5 * math.pi * scipy_ellipk(1 - r * r) / scipy_ellipk(r * r)
            assert grotzsch_mu(r) == pytest.approx(float(expected), rel=1e-12)

    def test_mu_product_identity(self):
        # μ(r)·μ(r′) = π²/4
        r = 0.6
        assert grotzsch_mu(r) * grotzsch_mu(0.8) == pytest.approx(math.pi ** 2 / 4, rel=1e-12)

    def test_mu_guard(self):
        with pytest.raises(OutOfRangeError):
            grotzsch_mu(0.0)
        with pytest.raises(OutOfRangeError):
            grotzsch_mu(1.0)

    def test_phi_identity_at_k_one(self):
        assert phi_K(1.0, 0.37) == 0.37

    def test_phi_inverts_mu(self):
        for K in (1.5, 2.0, 4.0):
            for r in (0.1, 0.5, 0.9):
                phi = phi_K(K, r)
                assert r < phi < 1
                assert grotzsch_mu(phi) == pytest.approx(grotzsch_mu(r) / K, abs=1e-10)

    def test_schwarz_bound_dominates(self):
        for K in (1.5, 2.0, 4.0):
            for r in (0.1, 0.5, 0.9):
                assert phi_K(K, r) <= schwarz_bound(K, r)
        assert schwarz_bound(1.0, 0.4) == pytest.approx(0.4)

    def test_query_validation(self):
        with pytest.raises(OutOfRangeError):
            DistortionQuery(0.5, 0.3)
        with pytest.raises(OutOfRangeError):
            DistortionQuery(2.0, 1.0)
        query = DistortionQuery(2.0, 0.5)
        assert query.phi <= query.bound

    def test_phi_beyond_range(self):
        with pytest.raises(OutOfRangeError):
            phi_K(1000.0, 0.99)


class TestQcMaps:
    def test_radial_stretch(self):
        assert radial_stretch(2.0, 4.0) == pytest.approx(2.0)
        assert radial_stretch(1.0, 3 + 4j) == 3 + 4j
        with pytest.raises(ZeroInputError):
            radial_stretch(2.0, 0)
        with pytest.raises(OutOfRangeError):
            radial_stretch(0.5, 1j)

    def test_inversion(self):
        assert inversion(2j) == pytest.approx(0.5j)
        assert inversion(1 + 1j).imag > 0
        with pytest.raises(ZeroInputError):
            inversion(0)

    def test_zoo(self):
        zoo = map_zoo([1.5, 2.0])
        names = [m.name for m in zoo]
        assert names[:4] == ["identity", "mobius-affine", "mobius-rotation", "inversion"]
        assert names[4:] == ["radial-stretch-1.5", "radial-stretch-2"]
        assert zoo[-1].apply(4j) == pytest.approx(2j)

    def test_qc_bound(self):
        assert qc_bound(2, 1.0, 0.5) == pytest.approx(math.sqrt(2) * 0.5)
        assert qc_bound("inf", 2.0, 0.25) == pytest.approx(2 * 2 * 0.5)

    def test_inversion_sharpness(self):
        for p in (1.0, 2.0, 3.0):
            ratio = inversion_sharpness_ratio(p, 1e-4, 1e-4)
            assert ratio <= PExponent(p).sup_bound + 1e-9
            assert ratio >= PExponent(p).sup_bound - 1e-3


class TestLipschitz:
    def test_radial_ratio_formula(self):
        p = PExponent(2.0)
        exact = lipschitz_ratio(p, 0.5, 0j, -0.1 + 0j)
        assert exact == pytest.approx(radial_family_lower_bound(p, 0.5, 0.0, 0.1), rel=1e-9)

    def test_radial_family_tends_to_one_plus_a(self):
        for p in (1.0, 2.0, "inf"):
            assert radial_family_lower_bound(p, 0.5, 0.0, 1e-7) == pytest.approx(1.5, rel=1e-5)

    def test_radial_pairs_direction(self):
        pairs = radial_pairs(0.5j)
        assert len(pairs) == 10
        for z1, z2 in pairs:
            assert z2.real == pytest.approx(0.0, abs=1e-15) and z2.imag < 0
        assert radial_pairs(0j) == []

    def test_estimate(self):
        exp = lipschitz_sup_estimate(2, 0.5, 20, seed=3)
        assert exp.ratios_checked == 30
        assert exp.radial_sup <= exp.observed_sup
        assert exp.observed_sup <= exp.ceiling + 1e-9
        assert exp.conjectured_bound == pytest.approx(1.5)
        assert exp.ceiling == pytest.approx(3.0)

    def test_estimate_is_deterministic(self):
        a = lipschitz_sup_estimate(1, 0.2 + 0.2j, 10, seed=9)
        b_ = lipschitz_sup_estimate(1, 0.2 + 0.2j, 10, seed=9)
        assert a.observed_sup == b_.observed_sup and a.witness == b_.witness

    def test_estimate_rejects_bad_input(self):
        with pytest.raises(OutOfDomainError):
            lipschitz_sup_estimate(2, 1.0, 10, seed=1)
        with pytest.raises(ValueError):
            lipschitz_sup_estimate(2, 0.5, 0, seed=1)

    def test_identity_map_ratio(self):
        assert lipschitz_ratio(PExponent(3.0), 0j, 0.2, -0.4j) == pytest.approx(1.0)
        assert b(DISK, 3, 0.2, 0.2).value == 0.0
