"""tests/test_geometry.py"""
import json
import math

import numpy as np
import pytest

from src.geometry.boundary import BoundaryWindow, boundary_curve, sample_boundary
from src.geometry.domains import (
    Disk,
    ExteriorUnitDisk,
    HalfPlane,
    PolygonWithHoles,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    as_point,
    boundary_distance,
    contains,
    contains_many,
    load_polygon,
    nearest_boundary_point,
    parse_point,
    polygon_from_dict,
    require_inside,
    segment_meets_boundary,
    similarity_image,
    square,
    square_annulus,
)
from src.utils.errors import (
    InvalidDomainError,
    InvalidPointError,
    MissingWindowError,
    OutOfDomainError,
    UnsupportedDomainError,
)


class TestPoints:
    def test_parse_point(self):
        assert parse_point("0.3,0") == 0.3 + 0j
        assert parse_point("-2,1.5") == complex(-2, 1.5)

    def test_parse_point_rejects_garbage(self):
        with pytest.raises(InvalidPointError):
            parse_point("abc")
        with pytest.raises(InvalidPointError):
            parse_point("1,2,3")

    def test_as_point_rejects_non_finite(self):
        with pytest.raises(InvalidPointError):
            as_point(complex(math.nan, 0))
        with pytest.raises(InvalidPointError):
            as_point(math.inf)


class TestMembership:
    def test_open_sets_exclude_boundary(self):
        assert contains(UnitDisk(), 0.5j)
        assert not contains(UnitDisk(), 1.0)
        assert contains(UpperHalfPlane(), 2 + 1e-9j)
        assert not contains(UpperHalfPlane(), 3.0)
        assert contains(ExteriorUnitDisk(), 2.0)
        assert not contains(ExteriorUnitDisk(), -1j)
        assert not contains(PuncturedPlane(center=1 + 1j), 1 + 1j)
        assert contains(Disk(center=1, radius=2), 2.9)
        assert not contains(HalfPlane(level=1), 0.5j)

    def test_square_annulus_excludes_hole(self):
        g = square_annulus(4, 2)
        assert contains(g, 3)
        assert not contains(g, 1.5)
        assert not contains(g, 0)
        assert not contains(g, 5)

    def test_contains_many_matches_scalar(self):
        zs = np.array([0.1, 0.9j, 1.0, 2 + 2j, -0.5 - 0.5j])
        for d in (UnitDisk(), UpperHalfPlane(), square_annulus(4, 1)):
            expected = [contains(d, complex(z)) for z in zs]
            assert list(contains_many(d, zs)) == expected

    def test_require_inside_raises(self):
        with pytest.raises(OutOfDomainError):
            require_inside(UnitDisk(), 0.2, 2.0)
        assert require_inside(UnitDisk(), 0.2, 0.3j) == (0.2 + 0j, 0.3j)


class TestBoundaryDistance:
    def test_disk_and_halfplane(self):
        assert boundary_distance(UnitDisk(), 0.3) == pytest.approx(0.7)
        assert boundary_distance(UpperHalfPlane(), 2 + 3j) == 3.0
        assert boundary_distance(Disk(center=1j, radius=2), 1j) == 2.0
        assert boundary_distance(HalfPlane(level=-1), 0j) == 1.0

    def test_polygon_uses_both_rings(self):
        assert boundary_distance(square_annulus(4, 2), 3) == pytest.approx(1.0)
        assert boundary_distance(square_annulus(4, 1), 3) == pytest.approx(1.0)
        assert boundary_distance(square_annulus(4, 1), 0) == pytest.approx(1.0)

    def test_nearest_boundary_point(self):
        assert nearest_boundary_point(UnitDisk(), 0.5j) == pytest.approx(1j)
        assert nearest_boundary_point(UpperHalfPlane(), 2 + 5j) == 2 + 0j
        assert nearest_boundary_point(square_annulus(4, 2), 3.5) == pytest.approx(4 + 0j)

    def test_segment_meets_boundary(self):
        assert segment_meets_boundary(ExteriorUnitDisk(), 2, -2)
        assert not segment_meets_boundary(ExteriorUnitDisk(), 2, 3j)
        assert segment_meets_boundary(PuncturedPlane(), -1, 1)
        assert not segment_meets_boundary(PuncturedPlane(), -1, 1j)
        assert segment_meets_boundary(square_annulus(4, 2), 3, -3)
        assert not segment_meets_boundary(UnitDisk(), 0.9, -0.9)


class TestSimilarities:
    def test_disk_images(self):
        assert similarity_image(UnitDisk(), 2.0, 1 + 0j) == Disk(center=1, radius=2)
        assert similarity_image(UpperHalfPlane(), 3.0, 2 + 1j) == HalfPlane(level=1)
        assert similarity_image(PuncturedPlane(center=1), 2.0, 1j) == PuncturedPlane(center=2 + 1j)

    def test_exterior_only_identity(self):
        assert similarity_image(ExteriorUnitDisk(), 1.0, 0j) == ExteriorUnitDisk()
        with pytest.raises(UnsupportedDomainError):
            similarity_image(ExteriorUnitDisk(), 2.0, 0j)

    def test_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            similarity_image(UnitDisk(), 0.0, 0j)


class TestPolygons:
    def test_rejects_clockwise_outer(self):
        with pytest.raises(InvalidDomainError):
            PolygonWithHoles(outer=square(1, clockwise=True))

    def test_rejects_short_ring(self):
        with pytest.raises(InvalidDomainError):
            PolygonWithHoles(outer=(0j, 1 + 0j))

    def test_rejects_hole_touching_outer(self):
        with pytest.raises(InvalidDomainError):
            square_annulus(2, 2)

    def test_from_dict(self):
        g = polygon_from_dict({"outer": [[0, 0], [2, 0], [2, 2], [0, 2]]})
        assert contains(g, 1 + 1j)
        with pytest.raises(InvalidDomainError):
            polygon_from_dict({"holes": []})

    def test_load_polygon(self, tmp_path):
        path = tmp_path / "annulus.json"
        path.write_text(json.dumps({
            "outer": [[-4, -4], [4, -4], [4, 4], [-4, 4]],
            "holes": [[[-1, -1], [-1, 1], [1, 1], [1, -1]]],
        }))
        g = load_polygon(path)
        assert contains(g, 3) and not contains(g, 0)

    def test_load_polygon_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_polygon(tmp_path / "nope.json")

    def test_load_polygon_not_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(InvalidDomainError):
            load_polygon(path)


class TestBoundarySampling:
    def test_circle_samples_on_circle(self):
        pts = sample_boundary(UnitDisk(), 16)
        assert np.allclose(np.abs(pts), 1.0)

    def test_halfplane_needs_window(self):
        with pytest.raises(MissingWindowError):
            sample_boundary(UpperHalfPlane(), 8)

    def test_halfplane_window_span(self):
        pts = sample_boundary(UpperHalfPlane(), 11, BoundaryWindow(1 + 2j, 5.0))
        assert pts[0] == pytest.approx(-4 + 0j)
        assert pts[-1] == pytest.approx(6 + 0j)
        assert np.all(pts.imag == 0)

    def test_shifted_halfplane_level(self):
        pts = sample_boundary(HalfPlane(level=2), 5, BoundaryWindow(0j, 1.0))
        assert np.all(pts.imag == 2)

    def test_polygon_samples_on_boundary(self):
        g = square_annulus(4, 1)
        for z in sample_boundary(g, 64):
            assert boundary_distance(g, complex(z)) < 1e-9

    def test_punctured_boundary_is_a_point(self):
        curve = boundary_curve(PuncturedPlane(center=2j))
        assert list(curve.sample(100)) == [2j]

    def test_window_radius_positive(self):
        with pytest.raises(ValueError):
            BoundaryWindow(0j, 0.0)

    def test_too_few_samples(self):
        with pytest.raises(ValueError):
            sample_boundary(UnitDisk(), 1)

    def test_point_matches_vectorised_curve(self):
        s = np.array([0.0, 0.7, 2.5, 6.1])
        curves = (
            boundary_curve(Disk(center=1 + 1j, radius=2.0)),
            boundary_curve(UpperHalfPlane(), BoundaryWindow(1j, 3.0)),
            boundary_curve(square_annulus(4, 1)),
        )
        for curve in curves:
            for t, w in zip(s, curve.at(s)):
                assert curve.point(float(t)) == pytest.approx(complex(w), abs=1e-14)
