"""tests/test_bounds.py"""
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.barrlund.dispatcher import b
from src.bounds.general import distance_bounds
from src.bounds.halfplane import HalfplaneBoundInputs, halfplane_upper_bound, t_bound, u_bound
from src.geometry.domains import PuncturedPlane, UnitDisk, UpperHalfPlane, square_annulus
from src.metrics.classical import s_halfplane

HALFPLANE = UpperHalfPlane()

halfplane_points = st.builds(
    complex,
    st.floats(min_value=-5.0, max_value=5.0),
    st.floats(min_value=0.05, max_value=5.0),
)


class TestTBound:
    def test_reference_values(self):
        assert t_bound(2, 1 + 6j, -2 + 3j) == pytest.approx(0.6, abs=1e-12)
        assert t_bound(2, -4 + 4j, 4 + 12j) == pytest.approx(0.8, abs=1e-12)

    def test_diagonal_family_at_p_two(self):
        for t in (0.5, 1.0, 2.0):
            assert t_bound(2, complex(-t, t), 1 + 1j) == pytest.approx(1.0, abs=1e-12)

    def test_diagonal_family_general_p(self):
        # √(1 + t²) / (1 + t^p)^{1/p}
        for p in (1.0, 3.0, 10.0):
            for t in (0.5, 1.0, 2.0):
                expected = math.sqrt(1 + t * t) / (1 + t ** p) ** (1 / p)
                assert t_bound(p, complex(-t, t), 1 + 1j) == pytest.approx(expected, abs=1e-12)

    def test_p_one_is_triangular_ratio(self):
        z1, z2 = 0.3 + 0.7j, -2 + 4j
        assert t_bound(1, z1, z2) == pytest.approx(s_halfplane(z1, z2).value, rel=1e-12)

    def test_coincident(self):
        assert t_bound(3, 1j, 1j) == 0.0
        assert u_bound(3, 1j, 1j) == 0.0


class TestHalfplaneBounds:
    def test_inputs(self):
        inputs = HalfplaneBoundInputs.from_points(1j, 4 + 3j)
        assert inputs.alpha == pytest.approx(0.25)
        assert inputs.c == pytest.approx(2.0)
        assert inputs.leg_a == pytest.approx(math.sqrt(5.0))
        assert inputs.leg_b == pytest.approx(math.sqrt(13.0))

    def test_upper_bound(self):
        assert halfplane_upper_bound(1j, 2 + 1j) == pytest.approx(2.0)

    def test_equal_real_parts_is_exact(self):
        z1, z2 = 1 + 1j, 1 + 4j
        for p in (1.5, 2.0, 3.0):
            assert t_bound(p, z1, z2) == pytest.approx(b(HALFPLANE, p, z1, z2).value, rel=1e-9)

    @given(halfplane_points, halfplane_points, st.sampled_from([1.0, 1.5, 2.0, 3.0, 5.0]))
    @settings(deadline=None, max_examples=60)
    def test_chain(self, z1, z2, p):
        assume(abs(z1 - z2) > 1e-6)
        value = b(HALFPLANE, p, z1, z2).value
        s = s_halfplane(z1, z2).value
        assert s <= t_bound(p, z1, z2) * (1 + 1e-9)
        assert t_bound(p, z1, z2) <= value * (1 + 1e-9)
        assert u_bound(p, z1, z2) <= value * (1 + 1e-9)
        assert value <= halfplane_upper_bound(z1, z2) * (1 + 1e-9)


class TestDistanceBounds:
    def test_disk_radial(self):
        lower, upper = distance_bounds(UnitDisk(), 2, 0.3, 0.5)
        assert lower == pytest.approx(1.0 / 6.0)
        assert upper == pytest.approx(0.2 / math.sqrt(0.74))

    def test_sandwich_on_several_domains(self):
        cases = [
            (UnitDisk(), 0.2 + 0.5j, -0.6j),
            (UpperHalfPlane(), 1j, 3 + 0.5j),
            (PuncturedPlane(center=0.5j), 1, -2 + 1j),
            (square_annulus(4, 1), 3, -2 + 2j),
        ]
        for d, z1, z2 in cases:
            for p in (1.0, 2.0, 3.0):
                lower, upper = distance_bounds(d, p, z1, z2)
                value = b(d, p, z1, z2).value
                assert lower <= value * (1 + 1e-9)
                assert value <= upper * (1 + 1e-9)

    def test_coincident(self):
        assert distance_bounds(UnitDisk(), 3, 0.1, 0.1) == (0.0, 0.0)
