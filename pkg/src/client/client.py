"""
File-system client for images and debug artifacts.

This module is the one place imgkit touches the disk: it reads and writes
PNM images and the CSV/text tables that pipelines emit.
"""

import logging
import os
from typing import Sequence, Union

import numpy as np

from ..core import ElemKind, ImageBuffer, ImageLike, ShapeError, as_image, img_as_ubyte, mask_to_ubyte
from ..pnm import read_pnm, write_pnm

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]


class ImageStore:
    def __init__(self, dry_run: bool = False):
        self.dry_run = dry_run

    def read_image(self, path: PathLike) -> ImageBuffer:
        """Read a binary PGM/PPM file; OSError and FormatError propagate."""
        with open(path, "rb") as f:
            data = f.read()
        img = read_pnm(data)
        logger.debug("read %s: %dx%d, %d channel(s)", path, img.width, img.height, img.channels)
        return img

    def write_image(self, path: PathLike, img: ImageLike, float_clip: bool = True) -> None:
        """Write U8 as is and F32 through img_as_ubyte.

        With ``float_clip`` off, F32 values outside [0, 1] are rejected instead
        of clamped.
        """
        img = as_image(img)
        if img.elem_kind is ElemKind.F32:
            if not float_clip and img.data.size and (img.data.min() < 0 or img.data.max() > 1):
                raise ShapeError(f"refusing to clamp values outside [0, 1] when writing {path}")
            img = img_as_ubyte(img)
        self._write_bytes(path, write_pnm(img))

    def write_mask(self, path: PathLike, mask: ImageLike) -> None:
        """Write a {0,1} mask as a 0/255 PGM."""
        self._write_bytes(path, write_pnm(mask_to_ubyte(mask)))

    def ensure_dir(self, path: PathLike) -> None:
        if self.dry_run:
            print(f"[DRY RUN] Would create directory {path}")
            return
        os.makedirs(path, exist_ok=True)

    def write_csv(self, path: PathLike, header: Sequence[str], rows, fmt: Union[str, Sequence[str]] = "%.12g") -> None:
        rows = np.asarray(rows, dtype=np.float64).reshape(-1, len(header))
        if self.dry_run:
            print(f"[DRY RUN] Would write {len(rows)} row(s) to {path}")
            return
        np.savetxt(path, rows, fmt=fmt, delimiter=",", header=",".join(header), comments="")
        logger.debug("wrote %s (%d rows)", path, len(rows))

    def write_text(self, path: PathLike, text: str) -> None:
        if self.dry_run:
            print(f"[DRY RUN] Would write {path}")
            return
        with open(path, "w") as f:
            f.write(text)

    def _write_bytes(self, path: PathLike, data: bytes) -> None:
        if self.dry_run:
            print(f"[DRY RUN] Would write {len(data)} bytes to {path}")
            return
        with open(path, "wb") as f:
            f.write(data)
        logger.debug("wrote %s (%d bytes)", path, len(data))
