"""
Local (adaptive) thresholding.
"""

import numpy as np

from ..core import ImageBuffer, ImageLike, InvalidParameterError, as_image, require_channels
from .smoothing import gaussian_kernel, separable_filter

# Pixels within this distance of their local threshold count as ties.
_TIE_TOLERANCE = 1e-9


def threshold_adaptive(img: ImageLike, block_size: int, offset: float = 0.0) -> ImageBuffer:
    """Foreground where a pixel exceeds the Gaussian-weighted mean of its block minus offset.

    The weights are a Gaussian with sigma = (block_size - 1) / 6 truncated to
    the block and normalized. Values are compared as stored, so for U8 input
    the offset is on the 0..255 scale. Returns a {0,1} U8 mask.
    """
    if block_size < 3 or block_size % 2 == 0:
        raise InvalidParameterError(f"block_size must be odd and at least 3, got {block_size}")
    img = as_image(img)
    require_channels(img, 1, "threshold_adaptive")
    radius = (block_size - 1) // 2
    kernel = gaussian_kernel((block_size - 1) / 6.0, radius)
    data = img.data.astype(np.float64)
    threshold = separable_filter(data, kernel) - offset
    return ImageBuffer((data - threshold > _TIE_TOLERANCE).astype(np.uint8))
