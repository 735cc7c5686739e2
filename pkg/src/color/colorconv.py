"""
Channel-space conversions used by the pipelines.
"""

import numpy as np

from ..core import ImageBuffer, ImageLike, as_image, img_as_float, require_channels

# ITU-R 709 style luma weights; they sum to exactly 1.
LUMA_WEIGHTS = np.array([0.2125, 0.7154, 0.0721])


def rgb2gray(img: ImageLike) -> ImageBuffer:
    """Weighted sum of R, G and B as a single F32 channel."""
    img = as_image(img)
    require_channels(img, 3, "rgb2gray")
    rgb = img_as_float(img).data.astype(np.float64)
    return ImageBuffer((rgb @ LUMA_WEIGHTS).astype(np.float32))


def gray2rgb(img: ImageLike) -> ImageBuffer:
    """Replicate a single channel three times, keeping the element kind."""
    img = as_image(img)
    require_channels(img, 1, "gray2rgb")
    return ImageBuffer(np.repeat(img.data[:, :, np.newaxis], 3, axis=2))


def add_alpha(img: ImageLike, background: float = -1) -> ImageBuffer:
    """Append an alpha plane: 1 where the pixel differs from background, else 0.

    The comparison is exact; the background value is written by warping, never
    computed.
    """
    img = img_as_float(img)
    require_channels(img, 1, "add_alpha")
    rgb = gray2rgb(img).data
    alpha = (img.data != np.float32(background)).astype(np.float32)
    return ImageBuffer(np.dstack((rgb, alpha)))
