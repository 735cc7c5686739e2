"""Tests for the image buffer, dtype conversions, histograms, crop and the LCG."""

import numpy as np
import pytest

from src.core import (
    BoundsError,
    ElemKind,
    ImageBuffer,
    Lcg,
    ShapeError,
    as_image,
    crop,
    histogram,
    img_as_float,
    img_as_ubyte,
    mask_to_ubyte,
)


class TestImageBuffer:
    def test_from_array_kinds(self):
        assert ImageBuffer.from_array(np.zeros((2, 2), dtype=bool)).elem_kind is ElemKind.U8
        assert ImageBuffer.from_array(np.zeros((2, 2))).elem_kind is ElemKind.F32
        assert ImageBuffer.from_array(np.arange(4, dtype=np.int64).reshape(2, 2)).elem_kind is ElemKind.U8

    def test_single_channel_is_squeezed(self):
        img = ImageBuffer(np.zeros((3, 5, 1), dtype=np.uint8))
        assert img.shape == (3, 5)
        assert img.channels == 1
        assert (img.height, img.width) == (3, 5)

    def test_data_is_read_only_copy(self):
        source = np.zeros((2, 2), dtype=np.uint8)
        img = ImageBuffer(source)
        source[0, 0] = 9
        assert img.data[0, 0] == 0
        with pytest.raises(ValueError):
            img.data[0, 0] = 1

    @pytest.mark.parametrize("shape", [(0, 3), (2, 2, 2), (2, 2, 5), (2,)])
    def test_rejects_bad_shapes(self, shape):
        with pytest.raises(ShapeError):
            ImageBuffer(np.zeros(shape, dtype=np.uint8))

    def test_rejects_out_of_range_integers(self):
        with pytest.raises(ShapeError):
            ImageBuffer.from_array(np.array([[300]]))

    def test_numpy_interop(self):
        img = as_image(np.eye(3, dtype=np.float32))
        assert np.asarray(img).dtype == np.float32
        assert as_image(img) is img


class TestConversions:
    def test_float_endpoints(self):
        out = img_as_float(np.array([[0, 51, 255]], dtype=np.uint8)).data
        assert out[0, 0] == 0.0
        assert out[0, 1] == np.float32(0.2)
        assert out[0, 2] == 1.0

    def test_float_is_increasing(self):
        out = img_as_float(np.arange(256, dtype=np.uint8).reshape(16, 16)).data.ravel()
        assert np.all(np.diff(out) > 0)
        assert out.min() >= 0 and out.max() <= 1

    def test_ubyte_rounding_and_clamp(self):
        out = img_as_ubyte(np.array([[0.0, 0.5, 1.0, -1.0, 2.0]], dtype=np.float32)).data
        assert out.tolist() == [[0, 128, 255, 0, 255]]

    def test_round_trip_all_values(self):
        values = np.arange(256, dtype=np.uint8).reshape(16, 16)
        assert np.array_equal(img_as_ubyte(img_as_float(values)).data, values)

    def test_mask_to_ubyte(self):
        out = mask_to_ubyte(np.array([[0, 1], [1, 0]], dtype=np.uint8)).data
        assert out.tolist() == [[0, 255], [255, 0]]


class TestHistogram:
    def test_all_zero(self):
        hist = histogram(np.zeros((2, 2), dtype=np.uint8))
        assert hist.counts[0] == 4
        assert hist.counts[1:].sum() == 0
        assert hist.total == 4

    def test_small_counts(self):
        hist = histogram(np.array([[0, 1], [1, 255]], dtype=np.uint8))
        assert (hist.counts[0], hist.counts[1], hist.counts[255]) == (1, 2, 1)

    def test_matches_tally(self, rng):
        for _ in range(10):
            img = rng.integers(0, 256, size=(32, 32), dtype=np.uint8)
            hist = histogram(img)
            expected = [int(np.sum(img == v)) for v in range(256)]
            assert hist.counts.tolist() == expected
            assert hist.total == img.size
            assert hist.cdf()[-1] == pytest.approx(1.0)

    def test_rejects_multichannel(self):
        with pytest.raises(ShapeError, match="histogram requires single channel"):
            histogram(np.zeros((2, 2, 3), dtype=np.uint8))


class TestCrop:
    def test_full_crop_is_identity(self, rng):
        img = rng.integers(0, 256, size=(5, 7), dtype=np.uint8)
        assert np.array_equal(crop(img, 0, 5, 0, 7).data, img)

    def test_interior_block(self):
        ramp = np.arange(16, dtype=np.uint8).reshape(4, 4)
        assert crop(ramp, 1, 3, 1, 3).data.tolist() == [[5, 6], [9, 10]]

    def test_bounds_name_axis(self):
        img = np.zeros((4, 4), dtype=np.uint8)
        with pytest.raises(BoundsError, match="row"):
            crop(img, 0, 5, 0, 2)
        with pytest.raises(BoundsError, match="column"):
            crop(img, 0, 2, 3, 3)


class TestLcg:
    def test_first_states(self):
        lcg = Lcg(7)
        assert [lcg.next() for _ in range(3)] == [1282168116, 642666333, 712265938]

    def test_sample_is_distinct_and_reproducible(self):
        first = Lcg(11).sample(50, 10)
        assert len(set(first)) == 10
        assert all(0 <= v < 50 for v in first)
        assert Lcg(11).sample(50, 10) == first

    def test_sample_too_many(self):
        with pytest.raises(ValueError):
            Lcg(0).sample(3, 4)
