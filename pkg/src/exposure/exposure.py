"""
Intensity redistribution: histogram equalization and linear rescaling.
"""

from typing import Optional, Tuple

import numpy as np

from ..core import (
    ElemKind,
    ImageBuffer,
    ImageLike,
    InvalidParameterError,
    as_image,
    histogram,
    require_channels,
)
from ..core.histogram import N_BINS


def _quantize(img: ImageBuffer) -> np.ndarray:
    if img.elem_kind is ElemKind.U8:
        return img.data
    values = np.clip(img.data.astype(np.float64), 0.0, 1.0)
    return np.minimum(np.floor(values * N_BINS), N_BINS - 1).astype(np.uint8)


def cumulative_distribution(img: ImageLike) -> Tuple[np.ndarray, np.ndarray]:
    """Return the inclusive 256-bin CDF of a single-channel image and its bin centers."""
    img = as_image(img)
    require_channels(img, 1, "cumulative_distribution")
    hist = histogram(ImageBuffer(_quantize(img)))
    return hist.cdf(), hist.bin_centers


def equalize_hist(img: ImageLike) -> ImageBuffer:
    """Map every pixel to the CDF of its intensity bin; output lies in (0, 1]."""
    img = as_image(img)
    require_channels(img, 1, "equalize_hist")
    bins = _quantize(img)
    cdf = histogram(ImageBuffer(bins)).cdf()
    return ImageBuffer(cdf[bins].astype(np.float32))


def rescale_intensity(img: ImageLike,
                      in_lo: Optional[float] = None, in_hi: Optional[float] = None,
                      out_lo: float = 0.0, out_hi: float = 1.0) -> ImageBuffer:
    """Stretch [in_lo, in_hi] linearly onto [out_lo, out_hi], clamping outside.

    Values are taken as stored (0..255 for U8). The input range defaults to the
    image's own minimum and maximum; a constant image then maps to ``out_lo``.
    """
    img = as_image(img)
    data = img.data.astype(np.float64)
    if in_lo is None and in_hi is None and data.min() == data.max():
        return ImageBuffer(np.full(data.shape, out_lo, dtype=np.float32))
    in_lo = float(data.min()) if in_lo is None else float(in_lo)
    in_hi = float(data.max()) if in_hi is None else float(in_hi)
    if not in_lo < in_hi:
        raise InvalidParameterError(f"in_lo ({in_lo}) must be below in_hi ({in_hi})")
    unit = np.clip((data - in_lo) / (in_hi - in_lo), 0.0, 1.0)
    return ImageBuffer((unit * (out_hi - out_lo) + out_lo).astype(np.float32))
