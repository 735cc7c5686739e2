"""Tests for the PGM/PPM codec and the file-system client."""

import numpy as np
import pytest

from src.client import ImageStore
from src.core import FormatError, ShapeError
from src.pnm import read_pnm, write_pnm


class TestCodec:
    def test_single_gray_pixel(self):
        data = write_pnm(np.array([[7]], dtype=np.uint8))
        assert data == b"P5\n1 1\n255\n\x07"

    def test_rgb_header(self):
        data = write_pnm(np.zeros((2, 3, 3), dtype=np.uint8))
        assert data.startswith(b"P6\n3 2\n255\n")
        assert len(data) == len(b"P6\n3 2\n255\n") + 18

    def test_round_trip(self, rng):
        for _ in range(50):
            h, w = (int(v) for v in rng.integers(1, 40, size=2))
            shape = (h, w) if rng.random() < 0.5 else (h, w, 3)
            img = rng.integers(0, 256, size=shape, dtype=np.uint8)
            data = write_pnm(img)
            decoded = read_pnm(data)
            assert np.array_equal(decoded.data, img)
            assert write_pnm(decoded) == data

    @pytest.mark.parametrize("shape", [(3, 4), (3, 4, 3)])
    def test_every_magic_mutation_rejected(self, rng, shape):
        data = write_pnm(rng.integers(0, 256, size=shape, dtype=np.uint8))
        for position in (0, 1):
            for value in range(256):
                mutated = bytearray(data)
                mutated[position] = value
                if bytes(mutated[:2]) in (b"P5", b"P6"):
                    continue
                with pytest.raises(FormatError, match="unsupported format"):
                    read_pnm(bytes(mutated))

    def test_comments_and_whitespace(self):
        data = b"P5 # a comment\n# another\n 2\t2\n#x\n255\n\x01\x02\x03\x04"
        assert read_pnm(data).data.tolist() == [[1, 2], [3, 4]]

    def test_payload_may_start_with_whitespace_byte(self):
        data = b"P5\n2 1\n255\n\n\x20"
        assert read_pnm(data).data.tolist() == [[10, 32]]

    def test_extra_payload_ignored(self):
        assert read_pnm(b"P5\n1 1\n255\n\x05\x06").data.tolist() == [[5]]

    @pytest.mark.parametrize("data", [b"P2\n1 1\n255\n1", b"P4\n1 1\n1", b"", b"P5x1 1 255 a", b"P5\n1 x\n255\n\x00"])
    def test_unsupported_format(self, data):
        with pytest.raises(FormatError, match="unsupported format"):
            read_pnm(data)

    @pytest.mark.parametrize("maxval", [b"1", b"65535", b"100"])
    def test_unsupported_depth(self, maxval):
        with pytest.raises(FormatError, match="unsupported depth"):
            read_pnm(b"P5\n1 1\n" + maxval + b"\n\x00\x00")

    @pytest.mark.parametrize("data", [b"P5\n2 2\n255\n\x00\x01", b"P6\n1 1\n255\n\x00", b"P5\n2 2", b"P5\n2 2\n255"])
    def test_truncated(self, data):
        with pytest.raises(FormatError, match="truncated file"):
            read_pnm(data)

    def test_write_rejects_four_channels(self):
        with pytest.raises(ShapeError):
            write_pnm(np.zeros((2, 2, 4), dtype=np.uint8))

    def test_write_rejects_float(self):
        with pytest.raises(ShapeError):
            write_pnm(np.zeros((2, 2), dtype=np.float32))


class TestImageStore:
    def test_read_write(self, tmp_path, rng):
        img = rng.integers(0, 256, size=(6, 5, 3), dtype=np.uint8)
        store = ImageStore()
        store.write_image(tmp_path / "a.ppm", img)
        assert np.array_equal(store.read_image(tmp_path / "a.ppm").data, img)

    def test_float_written_as_ubyte(self, tmp_path):
        store = ImageStore()
        store.write_image(tmp_path / "f.pgm", np.array([[0.0, 0.5, 1.5]], dtype=np.float32))
        assert store.read_image(tmp_path / "f.pgm").data.tolist() == [[0, 128, 255]]

    def test_float_clip_off_rejects_out_of_range(self, tmp_path):
        with pytest.raises(ShapeError):
            ImageStore().write_image(tmp_path / "f.pgm", np.array([[-1.0, 0.5]], dtype=np.float32),
                                     float_clip=False)
        assert not (tmp_path / "f.pgm").exists()

    def test_write_mask(self, tmp_path):
        store = ImageStore()
        store.write_mask(tmp_path / "m.pgm", np.array([[0, 1]], dtype=np.uint8))
        assert (tmp_path / "m.pgm").read_bytes() == b"P5\n2 1\n255\n\x00\xff"

    def test_write_csv(self, tmp_path):
        store = ImageStore()
        store.write_csv(tmp_path / "t.csv", ["row", "col"], [[1, 2], [3, 4]], fmt="%d")
        assert (tmp_path / "t.csv").read_text() == "row,col\n1,2\n3,4\n"

    def test_write_csv_header_only(self, tmp_path):
        ImageStore().write_csv(tmp_path / "t.csv", ["row", "col"], [], fmt="%d")
        assert (tmp_path / "t.csv").read_text() == "row,col\n"

    def test_dry_run_writes_nothing(self, tmp_path, capsys):
        store = ImageStore(dry_run=True)
        store.ensure_dir(tmp_path / "out")
        store.write_image(tmp_path / "out" / "a.pgm", np.zeros((2, 2), dtype=np.uint8))
        store.write_text(tmp_path / "note.txt", "x")
        assert list(tmp_path.iterdir()) == []
        assert "[DRY RUN] Would write" in capsys.readouterr().out

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            ImageStore().read_image(tmp_path / "missing.pgm")
