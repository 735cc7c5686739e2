"""
Fixed 256-bin intensity histograms.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .image import ElemKind, ImageLike, as_image, require_channels

N_BINS = 256


@dataclass(frozen=True, eq=False)
class Histogram:
    """One count per 8-bit intensity value."""

    counts: np.ndarray
    total: int

    @property
    def bin_centers(self) -> np.ndarray:
        return np.arange(N_BINS)

    def cdf(self) -> np.ndarray:
        """Inclusive cumulative distribution: cdf[v] = P(pixel <= v)."""
        return np.cumsum(self.counts, dtype=np.float64) / self.total


def histogram(img: ImageLike) -> Histogram:
    img = as_image(img)
    require_channels(img, 1, "histogram")
    if img.elem_kind is not ElemKind.U8:
        raise ShapeError("histogram requires an 8-bit image; convert with img_as_ubyte")
    counts = np.bincount(img.data.ravel(), minlength=N_BINS).astype(np.int64)
    return Histogram(counts=counts, total=int(img.data.size))
