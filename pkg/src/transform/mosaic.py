"""
Mosaic helpers: output extent of a two-frame panorama and alpha-average blending.
"""

import math
from typing import Sequence, Tuple

import numpy as np

from ..core import ImageBuffer, ImageLike, ShapeError, as_image
from .homography import Homography2D, apply, similarity_from_translation


def _corners(shape: Tuple[int, ...]) -> np.ndarray:
    rows, cols = shape[:2]
    return np.array([[0, 0], [0, rows], [cols, 0], [cols, rows]], dtype=np.float64)


def mosaic_extent(model: Homography2D, ref_shape: Tuple[int, ...],
                  tgt_shape: Tuple[int, ...]) -> Tuple[Tuple[int, int], Homography2D]:
    """Shape (rows, cols) covering the reference and the warped target, plus the shift.

    The corner arithmetic runs in (x, y); the result is reported as (rows, cols)
    directly instead of reversing an (x, y) extent afterwards.
    """
    warped = apply(model, _corners(tgt_shape))
    all_corners = np.vstack((warped, _corners(ref_shape)))
    corner_min = all_corners.min(axis=0)
    corner_max = all_corners.max(axis=0)
    extent = corner_max - corner_min
    cols = int(math.ceil(extent[0] - 1e-9))
    rows = int(math.ceil(extent[1] - 1e-9))
    offset = similarity_from_translation(-corner_min[0], -corner_min[1])
    return (rows, cols), offset


def blend_average(frames: Sequence[ImageLike]) -> ImageBuffer:
    """Average RGB over the frames covering each pixel, weighted by their alpha planes.

    Pixels no frame covers come out as 0. The alpha plane is dropped.
    """
    if not frames:
        raise ShapeError("blend_average needs at least one frame")
    images = [as_image(f) for f in frames]
    shape = images[0].shape
    for image in images:
        if image.channels != 4:
            raise ShapeError(f"blend_average requires 4 channels, got {image.channels}")
        if image.shape != shape:
            raise ShapeError(f"frame shapes differ: {image.shape} vs {shape}")

    stack = np.stack([image.data.astype(np.float64) for image in images])
    alpha = stack[..., 3]
    rgb_sum = (stack[..., :3] * alpha[..., np.newaxis]).sum(axis=0)
    coverage = np.maximum(alpha.sum(axis=0), 1.0)
    return ImageBuffer((rgb_sum / coverage[..., np.newaxis]).astype(np.float32))
