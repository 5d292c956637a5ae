"""tests/test_metrics.py"""
import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from unittest.mock import patch

from src.geometry.domains import PuncturedPlane, UnitDisk, square_annulus
from src.metrics.classical import (
    hyperbolic_disk,
    hyperbolic_halfplane,
    m_disk,
    point_pair,
    reflection_residual,
    s_disk,
    s_halfplane,
)
from src.metrics.result import MetricResult, Method, coincident
from src.mobius_qc.mobius import cayley
from src.numerics.scalar import minimize_periodic
from src.utils.errors import OutOfDomainError

radii = st.floats(min_value=0.0, max_value=0.98)
angles = st.floats(min_value=0.0, max_value=2 * math.pi)
disk_points = st.builds(lambda r, t: cmath.rect(r, t), radii, angles)


class TestMetricResult:
    def test_to_dict(self):
        out = MetricResult(0.5, 1 + 2j, Method.SCAN, 1e-3).to_dict()
        assert out == {"value": 0.5, "extremal_point": [1.0, 2.0], "method": "scan", "residual": 1e-3}

    def test_no_extremal_point(self):
        assert coincident().to_dict()["extremal_point"] is None
        assert float(coincident()) == 0.0

    def test_negative_value_rejected(self):
        with pytest.raises(ValueError):
            MetricResult(-1.0, None, Method.CLOSED_FORM)


class TestHyperbolic:
    def test_disk_radial(self):
        assert hyperbolic_disk(0, 0.5) == pytest.approx(math.log(3.0), rel=1e-14)

    def test_halfplane_vertical(self):
        assert hyperbolic_halfplane(1j, 2j) == pytest.approx(math.log(2.0), rel=1e-14)

    def test_cayley_invariance(self):
        z1, z2 = 0.3 + 2j, -1.5 + 0.4j
        assert hyperbolic_disk(cayley(z1), cayley(z2)) == pytest.approx(hyperbolic_halfplane(z1, z2), rel=1e-10)

    def test_near_boundary_stays_finite(self):
        value = hyperbolic_disk(0.999999999, 0.9999999999)
        assert math.isfinite(value) and value > 0

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomainError):
            hyperbolic_disk(0, 1.0)
        with pytest.raises(OutOfDomainError):
            hyperbolic_halfplane(1j, -1j)


class TestTriangularRatio:
    def test_halfplane_closed_form(self):
        result = s_halfplane(1j, 3j)
        assert result.value == pytest.approx(0.5)
        assert result.extremal_point == pytest.approx(0j)

    def test_halfplane_foot_on_reflected_segment(self):
        result = s_halfplane(1j, 2 + 3j)
        assert result.extremal_point == pytest.approx(0.5 + 0j)

    def test_disk_diagonal_pair(self):
        # minimiser e^{iπ/4}; value √½ / (2·√(5/4 − √½))
        result = s_disk(0.5j, 0.5)
        expected = math.sqrt(0.5) / (2.0 * math.sqrt(1.25 - math.sqrt(0.5)))
        assert result.value == pytest.approx(expected, rel=1e-10)
        assert result.value == pytest.approx(0.479841, abs=1e-6)
        assert result.extremal_point == pytest.approx(cmath.exp(1j * math.pi / 4), abs=1e-6)
        assert result.residual < 1e-6

    def test_disk_radial(self):
        assert s_disk(0, 0.5).value == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_disk_symmetric_pair(self):
        assert s_disk(0.5, -0.5).value == pytest.approx(0.5, rel=1e-12)

    def test_coincident(self):
        assert s_disk(0.2j, 0.2j).value == 0.0

    def test_reflection_residual_vanishes_on_axis(self):
        assert reflection_residual(0.3, 0.5, 1 + 0j) == pytest.approx(0.0, abs=1e-15)

    @given(disk_points, disk_points)
    @settings(deadline=None, max_examples=60)
    def test_disk_bounded_and_symmetric(self, z1, z2):
        # below 1e-300 the value itself underflows
        assume(abs(z1 - z2) > 1e-300)
        a, b = s_disk(z1, z2).value, s_disk(z2, z1).value
        assert 0.0 < a <= 1.0 + 1e-12
        assert a == pytest.approx(b, rel=1e-9)

    def test_disk_tiny_separation(self):
        result = s_disk(0, 1e-300)
        assert result.value > 0.0
        assert result.value == pytest.approx(5e-301, rel=1e-9)
        z2 = 0.3 + 1e-15
        assert s_disk(0.3, z2).value == pytest.approx((z2 - 0.3) / 1.4, rel=1e-6)

    @given(disk_points, disk_points)
    @settings(deadline=None, max_examples=40)
    def test_disk_matches_dense_minimum(self, z1, z2):
        assume(abs(z1 - z2) > 1e-12)
        u = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 20001))
        grid_value = abs(z1 - z2) / float(np.min(np.abs(z1 - u) + np.abs(z2 - u)))
        value = s_disk(z1, z2).value
        assert value >= grid_value * (1.0 - 1e-12)
        assert value == pytest.approx(grid_value, rel=1e-3)

    @patch("src.metrics.classical.minimize_periodic", side_effect=AssertionError("dense scan ran"))
    def test_disk_skips_dense_scan_for_generic_pairs(self, _):
        for z1, z2 in ((0.3 + 0.2j, -0.4j), (0.9, 0.1 - 0.85j), (-0.5 + 0.5j, 0.05)):
            result = s_disk(z1, z2)
            assert result.method is Method.QUARTIC_SOLVE
            assert type(result.value) is float and type(result.residual) is float

    @patch("src.metrics.classical.minimize_periodic", wraps=minimize_periodic)
    @patch("src.metrics.classical.solve_quartic")
    def test_disk_falls_back_without_circle_roots(self, mock_solve, mock_scan):
        mock_solve.return_value = np.array([0.5 + 0j, 2.0 + 0j])
        result = s_disk(0.5j, 0.5)
        mock_scan.assert_called_once()
        expected = math.sqrt(0.5) / (2.0 * math.sqrt(1.25 - math.sqrt(0.5)))
        assert result.value == pytest.approx(expected, rel=1e-9)


class TestPointPair:
    def test_disk_radial(self):
        assert point_pair(UnitDisk(), 0, 0.5) == pytest.approx(1.0 / 3.0, rel=1e-14)

    def test_punctured(self):
        # d(z) = |z|; |z1−z2| = 2, 4·1·1 → 2/√8
        assert point_pair(PuncturedPlane(), 1, -1) == pytest.approx(1.0 / math.sqrt(2.0))

    def test_polygon(self):
        g = square_annulus(4, 2)
        assert point_pair(g, 3, -3) == pytest.approx(6.0 / math.sqrt(36.0 + 4.0))

    @given(disk_points, disk_points)
    @settings(deadline=None, max_examples=100)
    def test_below_one(self, z1, z2):
        assert 0.0 <= point_pair(UnitDisk(), z1, z2) < 1.0


class TestMDisk:
    def test_value(self):
        assert m_disk(0.3, 0.5) == pytest.approx(1.0 / 6.0, rel=1e-14)

    def test_coincident(self):
        assert m_disk(0.4j, 0.4j) == 0.0

    def test_triangle_fails_past_onset(self):
        # m(t, it) > m(0, t) + m(0, it) exactly when t > 2√2 − 2
        for t, broken in ((0.8, False), (0.9, True)):
            assert (m_disk(t, 1j * t) > m_disk(0, t) + m_disk(0, 1j * t)) is broken
