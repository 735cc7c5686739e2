"""
Connected-component labeling.
"""

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from ..core import ImageLike, InvalidParameterError, as_image, require_channels

_STRUCTURES = {
    4: ndimage.generate_binary_structure(2, 1),
    8: ndimage.generate_binary_structure(2, 2),
}


@dataclass(frozen=True, eq=False)
class LabelImage:
    """Component ids 1..count in raster order of each component's first pixel; 0 is background."""

    labels: np.ndarray
    count: int


def label(img: ImageLike, connectivity: int = 8) -> LabelImage:
    if connectivity not in _STRUCTURES:
        raise InvalidParameterError(f"connectivity must be 4 or 8, got {connectivity}")
    img = as_image(img)
    require_channels(img, 1, "label")
    raw, count = ndimage.label(img.data != 0, structure=_STRUCTURES[connectivity])

    # Renumber by first raster occurrence regardless of scipy's internal order.
    ids, first = np.unique(raw.ravel(), return_index=True)
    foreground = ids > 0
    ids, first = ids[foreground], first[foreground]
    lookup = np.zeros(count + 1, dtype=np.int32)
    lookup[ids[np.argsort(first)]] = np.arange(1, ids.size + 1, dtype=np.int32)
    return LabelImage(labels=lookup[raw], count=int(count))
