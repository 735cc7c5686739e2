"""Tests for the rasterization primitives."""

import math

import numpy as np
import pytest

from src.core import InvalidParameterError
from src.draw import circle_perimeter, line, rectangle_perimeter


def as_set(points):
    return {tuple(p) for p in points.tolist()}


class TestLine:
    def test_horizontal(self):
        assert line(0, 0, 0, 4).tolist() == [[0, c] for c in range(5)]

    def test_diagonal(self):
        assert line(0, 0, 3, 3).tolist() == [[i, i] for i in range(4)]

    def test_single_point(self):
        assert line(2, 5, 2, 5).tolist() == [[2, 5]]

    def test_reverse_covers_same_pixels(self, rng):
        for _ in range(50):
            r0, c0, r1, c1 = (int(v) for v in rng.integers(-20, 20, size=4))
            assert as_set(line(r0, c0, r1, c1)) == as_set(line(r1, c1, r0, c0))

    def test_eight_connected_and_endpoints(self, rng):
        for _ in range(50):
            r0, c0, r1, c1 = (int(v) for v in rng.integers(-30, 30, size=4))
            points = line(r0, c0, r1, c1)
            assert points[0].tolist() == [r0, c0]
            assert points[-1].tolist() == [r1, c1]
            assert len(points) == max(abs(r1 - r0), abs(c1 - c0)) + 1
            steps = np.abs(np.diff(points, axis=0))
            assert np.all(steps.max(axis=1) == 1)


class TestCirclePerimeter:
    def test_radius_zero(self):
        assert circle_perimeter(4, 6, 0).tolist() == [[4, 6]]

    @pytest.mark.parametrize("radius", [1, 3, 7, 20])
    def test_points_near_radius(self, radius):
        points = circle_perimeter(10, -5, radius)
        distances = np.hypot(points[:, 0] - 10, points[:, 1] + 5)
        assert np.all(np.abs(distances - radius) <= 1)
        assert len(points) == len(as_set(points))

    def test_symmetric(self):
        offsets = as_set(circle_perimeter(0, 0, 9))
        assert offsets == {(-r, c) for r, c in offsets}
        assert offsets == {(c, r) for r, c in offsets}

    def test_rejects_negative_radius(self):
        with pytest.raises(InvalidParameterError):
            circle_perimeter(0, 0, -1)

    def test_roughly_circumference(self):
        assert abs(len(circle_perimeter(0, 0, 30)) - 4 * math.sqrt(2) * 30) <= 8


class TestRectanglePerimeter:
    def test_border_of_box(self):
        points = as_set(rectangle_perimeter(2, 3, 5, 7))
        expected = {(r, c) for r in range(2, 5) for c in range(3, 7) if r in (2, 4) or c in (3, 6)}
        assert points == expected

    def test_single_pixel_box(self):
        assert rectangle_perimeter(1, 1, 2, 2).tolist() == [[1, 1]]

    def test_empty_box(self):
        with pytest.raises(InvalidParameterError):
            rectangle_perimeter(3, 3, 3, 5)
