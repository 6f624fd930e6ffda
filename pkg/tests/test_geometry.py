import math

import numpy as np
import pytest

from src.geometry import (
    Curve,
    Orientation,
    arc_length,
    orientation,
    parametrize,
    radial_map,
    regular_polygon,
)
from src.utils.errors import DegenerateCurveError, GridError, SelfIntersectionError


def ellipse(n, a=2.0, b=1.0):
    theta = 2 * np.pi * np.arange(n) / n
    return Curve(np.column_stack([a * np.cos(theta), b * np.sin(theta)]))


class TestArcLength:
    def test_unit_square_perimeter(self, unit_square):
        assert arc_length(unit_square) == 4.0

    def test_dense_polygon_approaches_circumference(self):
        n = 1024
        length = arc_length(regular_polygon(n))
        assert length == pytest.approx(2 * n * math.sin(math.pi / n), rel=1e-12)
        assert abs(length - 2 * math.pi) <= 1e-4

    def test_rigid_motion_keeps_length(self, rng):
        shape = ellipse(997)
        length = arc_length(shape)
        for _ in range(20):
            angle = rng.uniform(0.0, 2 * np.pi)
            rotation = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
            moved = shape.transformed(rotation, rng.uniform(-10.0, 10.0, size=2))
            assert arc_length(moved) == pytest.approx(length, rel=1e-12)

    def test_repeated_point_rejected(self):
        with pytest.raises(DegenerateCurveError):
            Curve(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))

    def test_closing_point_must_not_be_repeated(self):
        with pytest.raises(DegenerateCurveError):
            Curve(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]))

    @pytest.mark.parametrize("points", [
        [[0.0, 0.0], [1.0, 0.0]],
        [[0.0, 0.0], [1.0, np.nan], [0.0, 1.0]],
        [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
    ])
    def test_malformed_points_rejected(self, points):
        with pytest.raises(DegenerateCurveError):
            Curve(np.array(points))


class TestOrientation:
    def test_counterclockwise_square_is_positive(self, unit_square):
        assert orientation(unit_square) is Orientation.POSITIVE

    def test_reversed_square_is_negative(self, unit_square):
        flipped = Curve(unit_square.points[::-1])
        assert orientation(flipped) is Orientation.NEGATIVE
        assert orientation(unit_square.reversed()) is Orientation.NEGATIVE

    def test_zero_area_figure_eight_rejected(self):
        bowtie = Curve(np.array([[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]))
        with pytest.raises(DegenerateCurveError):
            orientation(bowtie)


class TestParametrize:
    def test_quarter_points_of_circle(self, unit_circle):
        param = parametrize(unit_circle, 16)
        expected = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
        np.testing.assert_allclose(param.samples[[0, 4, 8, 12]], expected, atol=1e-9)

    def test_first_sample_is_base_point_exactly(self, unit_square):
        shifted = Curve(unit_square.points, base_index=2)
        param = parametrize(shifted, 32)
        assert np.array_equal(param.samples[0], shifted.points[2])
        assert np.array_equal(param.base_point, shifted.base_point)

    def test_sample_spacing_on_straight_edges(self):
        param = parametrize(regular_polygon(7, radius=3.0), 70)
        assert param.spacing == pytest.approx(param.length / 70, rel=1e-15)
        chords = np.linalg.norm(np.roll(param.samples, -1, axis=0) - param.samples, axis=1)
        np.testing.assert_allclose(chords, param.length / 70, rtol=1e-12)

    @pytest.mark.parametrize("m", [64, 256, 1000])
    def test_chords_never_exceed_spacing(self, m):
        param = parametrize(ellipse(997), m)
        chords = np.linalg.norm(np.roll(param.samples, -1, axis=0) - param.samples, axis=1)
        assert np.all(chords <= param.spacing * (1.0 + 1e-12))

    def test_resampling_is_exact_when_vertices_are_samples(self):
        param = parametrize(regular_polygon(7, radius=3.0), 70)
        again = parametrize(Curve(param.samples), 70)
        np.testing.assert_allclose(again.samples, param.samples, atol=1e-9)

    def test_resampling_a_smooth_curve_drifts_at_second_order(self):
        # Chords of the sampled polygon fall short of the arcs by O(h^3) each
        shape = ellipse(4001)
        drift = {}
        for m in (128, 256):
            param = parametrize(shape, m)
            again = parametrize(Curve(param.samples), m)
            drift[m] = float(np.max(np.linalg.norm(again.samples - param.samples, axis=1)))
            # Curvature of the 2:1 ellipse is at most 2
            assert drift[m] <= param.length * param.spacing ** 2 * 4.0 / 24.0
        assert drift[128] / drift[256] >= 3.0

    def test_negative_input_is_traversed_positively(self, unit_square):
        forward = parametrize(unit_square, 16)
        backward = parametrize(unit_square.reversed(), 16)
        assert backward.source_orientation is Orientation.NEGATIVE
        np.testing.assert_allclose(backward.samples, forward.samples, atol=1e-12)

    def test_tangents_have_unit_length(self, unit_circle):
        param = parametrize(unit_circle, 64)
        np.testing.assert_allclose(np.linalg.norm(param.tangents, axis=1), 1.0, atol=1e-12)

    def test_point_at_wraps_around(self, unit_square):
        param = parametrize(unit_square, 16)
        np.testing.assert_allclose(param.point_at(param.length), param.base_point, atol=1e-12)
        np.testing.assert_allclose(param.point_at(1.5), [1.0, 0.5], atol=1e-12)

    def test_grid_too_coarse(self, unit_square):
        with pytest.raises(GridError):
            parametrize(unit_square, 4)


class TestSimplicity:
    def test_square_is_simple(self, unit_square):
        unit_square.check_simple()

    def test_crossing_edges_detected(self):
        crossing = Curve(np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 1.0], [2.0, 1.0], [1.0, 3.0]]))
        with pytest.raises(SelfIntersectionError):
            crossing.check_simple()


def test_radial_map_scales_points(unit_circle):
    scaled = radial_map(unit_circle.points, 2.0)
    np.testing.assert_allclose(np.linalg.norm(scaled, axis=1), 2.0, atol=1e-12)
