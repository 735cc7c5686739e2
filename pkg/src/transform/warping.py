"""
Inverse-mapped warping with bilinear interpolation, and rescaling.
"""

import logging
import math
from typing import Tuple

import numpy as np

from ..core import ImageBuffer, ImageLike, InvalidParameterError, ShapeError, img_as_float
from ..filters import gaussian
from .homography import Homography2D, project

logger = logging.getLogger(__name__)

WARP_MODES = ("constant", "edge")

# Source coordinates this close to the first or last index are snapped onto it.
_BOUNDARY_SNAP = 1e-9


def _axis_support(coord: np.ndarray, size: int, mode: str) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Lower sample index, fractional weight and validity along one axis.

    Coordinates on the closed range [0, size - 1] are valid; on the last index
    the 2x2 support shifts inward with weight 1 so integer samples stay exact.
    Coordinates within _BOUNDARY_SNAP of either end count as that end.
    """
    coord = np.where(np.abs(coord) <= _BOUNDARY_SNAP, 0.0, coord)
    coord = np.where(np.abs(coord - (size - 1)) <= _BOUNDARY_SNAP, float(size - 1), coord)
    if mode == "edge":
        coord = np.clip(coord, 0, size - 1)
    valid = (coord >= 0) & (coord <= size - 1)
    safe = np.where(valid, coord, 0.0)
    lower = np.clip(np.floor(safe), 0, max(size - 2, 0)).astype(np.intp)
    frac = safe - lower
    return lower, frac, valid


def sample_bilinear(data: np.ndarray, rows: np.ndarray, cols: np.ndarray,
                    mode: str = "constant", cval: float = 0.0) -> np.ndarray:
    """Bilinear samples of a (H, W) or (H, W, C) float array at real (row, col) positions."""
    if mode not in WARP_MODES:
        raise InvalidParameterError(f"unknown warp mode {mode!r}")
    data = np.asarray(data, dtype=np.float64)
    h, w = data.shape[:2]
    r0, fr, valid_r = _axis_support(np.asarray(rows, dtype=np.float64), h, mode)
    c0, fc, valid_c = _axis_support(np.asarray(cols, dtype=np.float64), w, mode)
    r1 = np.minimum(r0 + 1, h - 1)
    c1 = np.minimum(c0 + 1, w - 1)
    if data.ndim == 3:
        fr = fr[..., np.newaxis]
        fc = fc[..., np.newaxis]
    top = data[r0, c0] * (1 - fc) + data[r0, c1] * fc
    bottom = data[r1, c0] * (1 - fc) + data[r1, c1] * fc
    values = top * (1 - fr) + bottom * fr
    valid = valid_r & valid_c
    if data.ndim == 3:
        valid = valid[..., np.newaxis]
    return np.where(valid, values, cval)


def warp(img: ImageLike, inverse_map: Homography2D, output_shape: Tuple[int, int],
         cval: float = 0.0, mode: str = "constant") -> ImageBuffer:
    """Resample ``img`` so output pixel (r, c) reads the input at inverse_map((c, r)).

    Pixels whose source falls outside the image get ``cval`` (mode "constant")
    or the clamped edge sample (mode "edge").
    """
    rows_out, cols_out = (int(v) for v in output_shape)
    if rows_out < 1 or cols_out < 1:
        raise ShapeError(f"output shape must be positive, got {output_shape}")
    img = img_as_float(img)

    rr, cc = np.mgrid[0:rows_out, 0:cols_out]
    xy, wgt = project(inverse_map.matrix, np.column_stack([cc.ravel(), rr.ravel()]))
    at_infinity = np.abs(wgt) <= 1e-12
    wgt = np.where(at_infinity, 1.0, wgt)
    src_x = np.where(at_infinity, -np.inf, xy[:, 0] / wgt)
    src_y = np.where(at_infinity, -np.inf, xy[:, 1] / wgt)
    if mode == "edge":
        # Points at infinity have no edge sample either.
        src_x = np.where(at_infinity, np.nan, src_x)
        src_y = np.where(at_infinity, np.nan, src_y)

    values = sample_bilinear(img.data, src_y, src_x, mode=mode, cval=cval)
    shape = (rows_out, cols_out) + img.data.shape[2:]
    return ImageBuffer(values.reshape(shape).astype(np.float32))


def rescale(img: ImageLike, scale: float, anti_aliasing: bool = False) -> ImageBuffer:
    """Resize by ``scale``; the output shape is ceil(scale * dims).

    Output pixel (r, c) samples the input at (r / scale, c / scale), clamped
    to the image.
    """
    if scale <= 0:
        raise InvalidParameterError(f"scale must be positive, got {scale}")
    img = img_as_float(img)
    rows = int(math.ceil(scale * img.height - 1e-9))
    cols = int(math.ceil(scale * img.width - 1e-9))
    if anti_aliasing and scale < 1:
        img = gaussian(img, (1.0 / scale - 1.0) / 2.0)
    inverse_map = Homography2D.similarity(scale=1.0 / scale)
    logger.debug("rescale %dx%d -> %dx%d", img.height, img.width, rows, cols)
    return warp(img, inverse_map, (max(rows, 1), max(cols, 1)), mode="edge")
