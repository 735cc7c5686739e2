"""
Edge detectors: Sobel magnitude and the Canny detector.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import ndimage

from ..core import (
    ElemKind,
    ImageBuffer,
    ImageLike,
    InvalidParameterError,
    as_image,
    img_as_float,
    require_channels,
)
from .smoothing import BOUNDARY_MODE, gaussian

logger = logging.getLogger(__name__)

_SMOOTH = np.array([1.0, 2.0, 1.0])
_DIFF = np.array([-1.0, 0.0, 1.0])
_EIGHT_CONNECTED = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class CannyParams:
    """Smoothing scale and hysteresis thresholds, in the input's own intensity units."""

    sigma: float
    low_threshold: float
    high_threshold: float

    def __post_init__(self):
        if self.sigma <= 0:
            raise InvalidParameterError(f"sigma must be positive, got {self.sigma}")
        if not 0 <= self.low_threshold <= self.high_threshold:
            raise InvalidParameterError(
                f"need 0 <= low_threshold <= high_threshold, got "
                f"{self.low_threshold} and {self.high_threshold}")


def sobel_gradients(data: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Unnormalized 3x3 Sobel responses (gx along columns, gy along rows)."""
    data = np.asarray(data, dtype=np.float64)
    gx = ndimage.correlate1d(ndimage.correlate1d(data, _SMOOTH, axis=0, mode=BOUNDARY_MODE),
                             _DIFF, axis=1, mode=BOUNDARY_MODE)
    gy = ndimage.correlate1d(ndimage.correlate1d(data, _SMOOTH, axis=1, mode=BOUNDARY_MODE),
                             _DIFF, axis=0, mode=BOUNDARY_MODE)
    return gx, gy


def sobel(img: ImageLike) -> ImageBuffer:
    """Gradient magnitude with kernels scaled by 1/4 and the result by 1/sqrt(2).

    For input in [0, 1] the output stays in [0, 1].
    """
    img = img_as_float(img)
    require_channels(img, 1, "sobel")
    gx, gy = sobel_gradients(img.data)
    magnitude = np.hypot(gx / 4.0, gy / 4.0) / np.sqrt(2.0)
    return ImageBuffer(magnitude.astype(np.float32))


def _non_maximum_suppression(magnitude: np.ndarray, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Keep pixels whose magnitude is not exceeded by either neighbor along the gradient.

    The neighbor magnitudes are linearly interpolated between the two
    8-neighbors bracketing the gradient direction. The outermost pixel ring is
    never kept.
    """
    keep = np.zeros(magnitude.shape, dtype=bool)
    h, w = magnitude.shape
    if h < 3 or w < 3:
        return keep
    inner = magnitude[1:-1, 1:-1] > 0
    rows, cols = np.nonzero(inner)
    rows += 1
    cols += 1
    m = magnitude[rows, cols]
    dx = gx[rows, cols]
    dy = gy[rows, cols]
    ax = np.abs(dx)
    ay = np.abs(dy)
    sc = np.sign(dx).astype(np.intp)
    sr = np.sign(dy).astype(np.intp)
    horizontal = ax >= ay

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(horizontal, ay / ax, ax / ay)
    t = np.nan_to_num(t)

    # Primary step along the dominant axis, secondary step toward the minor one.
    pr = np.where(horizontal, 0, sr)
    pc = np.where(horizontal, sc, 0)
    plus_a = magnitude[rows + pr, cols + pc]
    plus_b = magnitude[rows + sr, cols + sc]
    minus_a = magnitude[rows - pr, cols - pc]
    minus_b = magnitude[rows - sr, cols - sc]
    plus = plus_a + t * (plus_b - plus_a)
    minus = minus_a + t * (minus_b - minus_a)

    maxima = (m >= plus) & (m >= minus)
    keep[rows[maxima], cols[maxima]] = True
    return keep


def canny(img: ImageLike, params: CannyParams) -> ImageBuffer:
    """Canny edge detector returning a {0,1} U8 mask.

    Thresholds are in the input's units: for U8 input they are on the 0..255
    scale and are divided by 255 after the image is converted to float.
    """
    img = as_image(img)
    require_channels(img, 1, "canny")
    low, high = params.low_threshold, params.high_threshold
    if img.elem_kind is ElemKind.U8:
        low, high = low / 255.0, high / 255.0

    smoothed = gaussian(img, params.sigma).data.astype(np.float64)
    gx, gy = sobel_gradients(smoothed)
    magnitude = np.hypot(gx, gy)

    local_max = _non_maximum_suppression(magnitude, gx, gy)
    candidates = local_max & (magnitude >= low)
    seeds = candidates & (magnitude >= high)

    labels, count = ndimage.label(candidates, structure=_EIGHT_CONNECTED)
    seeded = np.unique(labels[seeds])
    edges = np.isin(labels, seeded[seeded > 0])
    logger.debug("canny: %d candidate pixels in %d segments, %d edge pixels",
                 int(candidates.sum()), count, int(edges.sum()))
    return ImageBuffer(edges.astype(np.uint8))
