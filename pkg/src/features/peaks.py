"""
Local maxima detection.
"""

from typing import Optional

import numpy as np
from scipy import ndimage

from ..core import ImageLike, InvalidParameterError, as_image, require_channels


def peak_local_max(img: ImageLike, min_distance: int = 1,
                   threshold_abs: Optional[float] = None,
                   num_peaks: Optional[int] = None) -> np.ndarray:
    """Coordinates (row, col) of local maxima, strongest first.

    A pixel is a candidate when it equals the maximum of the in-image part of
    its (2 min_distance + 1)^2 window and is positive (and at least
    ``threshold_abs`` when given). Candidates are accepted greedily by
    descending value, ties in (row, col) order, and each accepted peak
    suppresses every candidate within Chebyshev distance ``min_distance``.
    """
    if min_distance < 1:
        raise InvalidParameterError(f"min_distance must be at least 1, got {min_distance}")
    img = as_image(img)
    require_channels(img, 1, "peak_local_max")
    data = img.data.astype(np.float64)
    size = 2 * min_distance + 1
    window_max = ndimage.maximum_filter(data, size=size, mode="nearest")

    candidates = (data == window_max) & (data > 0)
    if threshold_abs is not None:
        candidates &= data >= threshold_abs
    rows, cols = np.nonzero(candidates)
    order = np.lexsort((cols, rows, -data[rows, cols]))

    blocked = np.zeros(data.shape, dtype=bool)
    peaks = []
    for k in order:
        r, c = rows[k], cols[k]
        if blocked[r, c]:
            continue
        peaks.append((r, c))
        if num_peaks is not None and len(peaks) >= num_peaks:
            break
        blocked[max(r - min_distance, 0):r + min_distance + 1,
                max(c - min_distance, 0):c + min_distance + 1] = True
    return np.array(peaks, dtype=np.int64).reshape(-1, 2)
