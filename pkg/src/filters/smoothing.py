"""
Gaussian, difference-of-Gaussians and median filters.

All filters use the reflect boundary rule that mirrors about the edge pixel
without repeating it (d c b | a b c d | c b a), which scipy.ndimage calls
"mirror".
"""

import math
from typing import Optional

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

BOUNDARY_MODE = "mirror"


def gaussian_kernel(sigma: float, radius: Optional[int] = None) -> np.ndarray:
    """Normalized 1-D Gaussian sampled on -radius..radius (default ceil(4 sigma))."""
    if sigma <= 0:
        raise InvalidParameterError(f"sigma must be positive, got {sigma}")
    if radius is None:
        radius = int(math.ceil(4 * sigma))
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    kernel = np.exp(-0.5 * (x / sigma) ** 2)
    return kernel / kernel.sum()


def separable_filter(data: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Correlate rows then columns of a 2-D float64 plane with the same 1-D kernel."""
    out = ndimage.correlate1d(data, kernel, axis=0, mode=BOUNDARY_MODE)
    return ndimage.correlate1d(out, kernel, axis=1, mode=BOUNDARY_MODE)


def _smooth64(img: ImageBuffer, sigma: float) -> np.ndarray:
    kernel = gaussian_kernel(sigma)
    data = img_as_float(img).data.astype(np.float64)
    if data.ndim == 2:
        return separable_filter(data, kernel)
    return np.stack([separable_filter(data[:, :, k], kernel)
                     for k in range(data.shape[2])], axis=2)


def gaussian(img: ImageLike, sigma: float) -> ImageBuffer:
    """Separable Gaussian blur truncated at radius ceil(4 sigma).

    U8 input is converted with img_as_float first; channels are filtered
    independently.
    """
    img = as_image(img)
    return ImageBuffer(_smooth64(img, sigma).astype(np.float32))


def difference_of_gaussians(img: ImageLike, low_sigma: float, high_sigma: float) -> ImageBuffer:
    """Band-pass: gaussian(low_sigma) minus gaussian(high_sigma)."""
    if not 0 < low_sigma < high_sigma:
        raise InvalidParameterError(
            f"need 0 < low_sigma < high_sigma, got {low_sigma} and {high_sigma}")
    img = as_image(img)
    low = gaussian(img, low_sigma).data
    high = gaussian(img, high_sigma).data
    return ImageBuffer(low - high)


def median(img: ImageLike, radius: int = 1) -> ImageBuffer:
    """Median over the square (2r+1)^2 footprint.

    The footprint always holds an odd number of samples, so the lower-median
    tie rule never has to choose.
    """
    if radius < 1:
        raise InvalidParameterError(f"radius must be at least 1, got {radius}")
    img = as_image(img)
    require_channels(img, 1, "median")
    size = 2 * radius + 1
    out = ndimage.median_filter(img.data, size=size, mode=BOUNDARY_MODE)
    if img.elem_kind is ElemKind.U8:
        return ImageBuffer(out.astype(np.uint8))
    return ImageBuffer(out.astype(np.float32))
