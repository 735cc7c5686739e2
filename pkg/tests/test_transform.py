"""Tests for homographies, their estimation, warping, rescaling and mosaics."""

import math

import numpy as np
import pytest

from src.core import DegenerateError, InvalidParameterError, ShapeError
from src.transform import (
    Homography2D,
    TransformKind,
    apply,
    blend_average,
    compose,
    estimate_affine,
    estimate_projective,
    estimate_similarity,
    inverse,
    mosaic_extent,
    rescale,
    similarity_from_translation,
    warp,
)


def random_projective(rng) -> Homography2D:
    matrix = np.eye(3) + rng.normal(scale=[[0.1, 0.1, 5], [0.1, 0.1, 5], [1e-4, 1e-4, 0]])
    return Homography2D(matrix)


def relative_error(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


def smooth_image(rng, size=64) -> np.ndarray:
    from scipy import ndimage

    noise = ndimage.gaussian_filter(rng.random((size, size)), 3.0)
    return ((noise - noise.min()) / (noise.max() - noise.min())).astype(np.float32)


def oracle_sample(img: np.ndarray, x: float, y: float, cval: float) -> float:
    h, w = img.shape
    if not (0 <= x <= w - 1 and 0 <= y <= h - 1):
        return cval
    c0 = min(int(math.floor(x)), max(w - 2, 0))
    r0 = min(int(math.floor(y)), max(h - 2, 0))
    c1, r1 = min(c0 + 1, w - 1), min(r0 + 1, h - 1)
    fx, fy = x - c0, y - r0
    top = img[r0, c0] * (1 - fx) + img[r0, c1] * fx
    bottom = img[r1, c0] * (1 - fx) + img[r1, c1] * fx
    return top * (1 - fy) + bottom * fy


class TestHomography:
    def test_identity(self, rng):
        points = rng.random((10, 2)) * 100
        assert np.array_equal(apply(Homography2D.identity(), points), points)

    def test_translation(self):
        assert apply(similarity_from_translation(3, -2), [(0, 0)]).tolist() == [[3.0, -2.0]]

    def test_matches_homogeneous_arithmetic(self, rng):
        t = random_projective(rng)
        points = rng.random((20, 2)) * 50
        expected = []
        for x, y in points:
            u, v, w = t.matrix @ np.array([x, y, 1.0])
            expected.append((u / w, v / w))
        assert np.allclose(apply(t, points), expected, atol=1e-9, rtol=0)
        assert np.allclose(t(points), expected, atol=1e-9, rtol=0)

    def test_inverse_round_trip(self, rng):
        for _ in range(100):
            t = random_projective(rng)
            points = rng.random((5, 2)) * 50
            assert np.allclose(apply(inverse(t), apply(t, points)), points, atol=1e-9, rtol=0)

    def test_compose_with_inverse_is_identity(self, rng):
        t = random_projective(rng)
        assert np.linalg.norm(compose(t, inverse(t)).matrix - np.eye(3)) <= 1e-9

    def test_compose_translations(self):
        t = similarity_from_translation(1, 0) + similarity_from_translation(0, 1)
        assert np.allclose(t.matrix, similarity_from_translation(1, 1).matrix)

    def test_compose_applies_first_operand_first(self, rng):
        a, b = random_projective(rng), random_projective(rng)
        points = rng.random((10, 2)) * 30
        assert np.allclose(apply(compose(a, b), points), apply(b, apply(a, points)), atol=1e-9)

    def test_translation_helpers(self):
        assert np.array_equal(similarity_from_translation(0, 0).matrix, np.eye(3))
        assert np.allclose(similarity_from_translation(4, 5).inverse.matrix[:2, 2], [-4, -5])

    def test_normalized(self):
        t = Homography2D(2 * np.eye(3))
        assert t.matrix[2, 2] == 1.0

    def test_point_at_infinity(self):
        t = Homography2D([[1, 0, 0], [0, 1, 0], [1, 0, 1]])
        with pytest.raises(DegenerateError, match="point at infinity"):
            apply(t, [(-1, 0)])

    def test_singular(self):
        with pytest.raises(DegenerateError):
            Homography2D(np.zeros((3, 3)))

    def test_similarity_structure_checked(self):
        with pytest.raises(ShapeError):
            Homography2D([[1, 0.5, 0], [0, 1, 0], [0, 0, 1]], TransformKind.SIMILARITY)


class TestEstimation:
    def test_projective_translation(self):
        src = np.array([[0, 0], [10, 0], [0, 10], [10, 10]], dtype=float)
        t = estimate_projective(src, src + [3, -7])
        assert np.allclose(t.matrix, similarity_from_translation(3, -7).matrix, atol=1e-9)

    def test_projective_identity(self):
        square = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=float)
        assert np.allclose(estimate_projective(square, square).matrix, np.eye(3), atol=1e-9)

    def test_projective_noiseless(self, rng):
        t = random_projective(rng)
        src = rng.random((20, 2)) * 100
        assert relative_error(estimate_projective(src, apply(t, src)).matrix, t.matrix) <= 1e-6

    def test_projective_collinear(self):
        src = np.array([[0, 0], [1, 1], [2, 2], [3, 3]], dtype=float)
        with pytest.raises(DegenerateError, match="degenerate configuration"):
            estimate_projective(src, src)

    def test_projective_too_few(self):
        with pytest.raises(InvalidParameterError):
            estimate_projective(np.zeros((3, 2)), np.zeros((3, 2)))

    def test_similarity_rotation(self, rng):
        t = Homography2D.similarity(rotation=math.radians(30))
        src = rng.random((5, 2)) * 20
        fit = estimate_similarity(src, apply(t, src))
        assert np.allclose(fit.matrix, t.matrix, atol=1e-9)
        assert fit.kind is TransformKind.SIMILARITY

    def test_similarity_generator(self, rng):
        t = Homography2D.similarity(scale=1.7, rotation=-0.4, translation=(12, -3))
        src = rng.random((8, 2)) * 40
        assert relative_error(estimate_similarity(src, apply(t, src)).matrix, t.matrix) <= 1e-6

    def test_similarity_degenerate(self):
        with pytest.raises(DegenerateError):
            estimate_similarity([(1, 1), (1, 1)], [(2, 2), (2, 2)])

    def test_affine_shear(self, rng):
        t = Homography2D.affine([[1.2, 0.4, 3], [-0.1, 0.9, -5], [0, 0, 1]])
        src = rng.random((6, 2)) * 30
        fit = estimate_affine(src, apply(t, src))
        assert np.allclose(fit.matrix, t.matrix, atol=1e-9)


class TestWarp:
    def test_identity_is_exact(self, rng):
        img = rng.random((13, 17)).astype(np.float32)
        out = warp(img, Homography2D.identity(), img.shape)
        assert np.array_equal(out.data, img)

    def test_translation_fills_void(self, rng):
        img = rng.random((10, 20)).astype(np.float32)
        out = warp(img, similarity_from_translation(5, 0), img.shape, cval=-1).data
        assert np.array_equal(out[:, :15], img[:, 5:])
        assert np.all(out[:, 15:] == -1)

    def test_near_integer_shift_keeps_border(self, rng):
        img = rng.random((6, 9)).astype(np.float32)
        for shift in (-1e-14, 1e-14):
            out = warp(img, similarity_from_translation(shift, shift), img.shape, cval=-1).data
            assert np.allclose(out, img, atol=1e-6)

    def test_matches_scalar_oracle(self, rng):
        img = rng.random((24, 24)).astype(np.float32)
        t = Homography2D.similarity(scale=0.9, rotation=0.3, translation=(4, -2))
        out = warp(img, t, (24, 24), cval=-1).data
        for r in range(24):
            for c in range(24):
                x, y = apply(t, [(c, r)])[0]
                assert out[r, c] == pytest.approx(oracle_sample(img.astype(np.float64), x, y, -1), abs=1e-6)

    def test_round_trip_psnr(self, rng):
        img = smooth_image(rng)
        center = similarity_from_translation(-32, -32)
        t = center + Homography2D.similarity(scale=1.05, rotation=0.15) + center.inverse
        restored = warp(warp(img, t, img.shape), t.inverse, img.shape).data
        diff = restored[16:48, 16:48].astype(np.float64) - img[16:48, 16:48]
        psnr = 10 * math.log10(1.0 / np.mean(diff ** 2))
        assert psnr >= 40

    def test_edge_mode_clamps(self):
        img = np.arange(4, dtype=np.float32).reshape(2, 2) / 4
        out = warp(img, similarity_from_translation(-3, 0), (2, 2), mode="edge").data
        assert np.array_equal(out[:, 0], img[:, 0])

    def test_multichannel(self, rng):
        img = rng.random((6, 7, 3)).astype(np.float32)
        assert np.array_equal(warp(img, Homography2D.identity(), (6, 7)).data, img)


class TestRescale:
    def test_unit_scale(self, rng):
        img = rng.random((9, 11)).astype(np.float32)
        assert np.array_equal(rescale(img, 1.0).data, img)

    def test_quarter_shape(self):
        assert rescale(np.zeros((100, 100), dtype=np.float32), 0.25).shape == (25, 25)

    def test_half_of_blocks(self, rng):
        blocks = rng.random((4, 4)).astype(np.float32)
        img = np.kron(blocks, np.ones((2, 2), dtype=np.float32))
        assert np.array_equal(rescale(img, 0.5).data, blocks)

    def test_upscale_has_no_void(self, rng):
        out = rescale(rng.random((5, 5)).astype(np.float32), 2.0).data
        assert out.shape == (10, 10)
        assert out.min() >= 0

    def test_rejects_scale(self):
        with pytest.raises(InvalidParameterError):
            rescale(np.zeros((4, 4), dtype=np.float32), 0)


class TestMosaic:
    def test_identity_extent(self):
        shape, offset = mosaic_extent(Homography2D.identity(), (100, 200), (100, 200))
        assert shape == (100, 200)
        assert np.allclose(offset.matrix, np.eye(3))

    def test_translated_extent(self):
        shape, _ = mosaic_extent(similarity_from_translation(10, 0), (100, 200), (100, 200))
        assert shape == (100, 210)

    def test_random_homography_extent(self, rng):
        t = random_projective(rng)
        shape, offset = mosaic_extent(t, (40, 60), (50, 30))
        corners = [(0, 0), (0, 40), (60, 0), (60, 40)]
        warped = [tuple(apply(t, [(x, y)])[0]) for x, y in [(0, 0), (0, 50), (30, 0), (30, 50)]]
        xs = [p[0] for p in corners + warped]
        ys = [p[1] for p in corners + warped]
        assert shape == (math.ceil(max(ys) - min(ys) - 1e-9), math.ceil(max(xs) - min(xs) - 1e-9))
        assert np.allclose(offset.matrix[:2, 2], [-min(xs), -min(ys)])

    def test_blend_single_frame(self, rng):
        rgb = rng.random((5, 5, 3)).astype(np.float32)
        frame = np.dstack([rgb, np.ones((5, 5), dtype=np.float32)])
        assert np.allclose(blend_average([frame]).data, rgb)

    def test_blend_disjoint_and_overlap(self):
        a = np.zeros((1, 3, 4), dtype=np.float32)
        b = np.zeros((1, 3, 4), dtype=np.float32)
        a[0, 0] = [0.2, 0.2, 0.2, 1]
        a[0, 1] = [0.2, 0.2, 0.2, 1]
        b[0, 1] = [0.4, 0.4, 0.4, 1]
        b[0, 2] = [0.9, 0.9, 0.9, 1]
        out = blend_average([a, b]).data[0, :, 0]
        assert out[0] == pytest.approx(0.2)
        assert out[1] == pytest.approx(0.3)
        assert out[2] == pytest.approx(0.9)

    def test_blend_ignores_background_rgb(self):
        a = np.full((1, 1, 4), -1.0, dtype=np.float32)
        a[..., 3] = 0
        b = np.array([[[0.5, 0.5, 0.5, 1.0]]], dtype=np.float32)
        assert blend_average([a, b]).data[0, 0, 0] == pytest.approx(0.5)

    def test_blend_shape_mismatch(self):
        with pytest.raises(ShapeError):
            blend_average([np.zeros((2, 2, 4), dtype=np.float32), np.zeros((3, 2, 4), dtype=np.float32)])
