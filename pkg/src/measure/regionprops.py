"""
Per-region measurements of a label image.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy import ndimage

from ..core import ImageLike, ShapeError, as_image, require_channels
from .label import LabelImage

MOMENT_ORDER = 3


@dataclass(frozen=True, eq=False)
class RegionProps:
    """Geometry of one labeled region.

    ``bbox`` is half-open (min_row, min_col, max_row, max_col).
    ``central_moments[p, q]`` is the sum of (row - r)^p (col - c)^q about the
    centroid, filled for p + q <= 3 and zero elsewhere. ``perimeter`` counts
    the pixel edges shared with non-member pixels (the crack boundary).
    ``orientation`` is the angle of the major axis measured from the row
    axis toward the column axis.
    """

    label: int
    area: int
    bbox: Tuple[int, int, int, int]
    centroid: Tuple[float, float]
    eccentricity: float
    perimeter: int
    central_moments: np.ndarray
    orientation: float
    major_axis_length: float
    minor_axis_length: float
    mean_intensity: Optional[float] = None
    min_intensity: Optional[float] = None
    max_intensity: Optional[float] = None


def _central_moments(dr: np.ndarray, dc: np.ndarray) -> np.ndarray:
    moments = np.zeros((MOMENT_ORDER + 1, MOMENT_ORDER + 1))
    for p in range(MOMENT_ORDER + 1):
        for q in range(MOMENT_ORDER + 1 - p):
            moments[p, q] = np.sum(dr ** p * dc ** q)
    return moments


def _crack_length(member: np.ndarray) -> int:
    padded = np.pad(member, 1)
    vertical = np.count_nonzero(padded[1:, :] != padded[:-1, :])
    horizontal = np.count_nonzero(padded[:, 1:] != padded[:, :-1])
    return int(vertical + horizontal)


def _inertia(moments: np.ndarray) -> Tuple[float, float, float]:
    """Eigenvalues (l1 >= l2) of the normalized covariance and the major-axis angle."""
    mu00 = moments[0, 0]
    a = moments[2, 0] / mu00
    b = moments[1, 1] / mu00
    c = moments[0, 2] / mu00
    half_trace = (a + c) / 2
    spread = math.hypot((a - c) / 2, b)
    l1 = half_trace + spread
    l2 = max(half_trace - spread, 0.0)
    orientation = 0.5 * math.atan2(2 * b, a - c)
    return l1, l2, orientation


def regionprops(lbl: LabelImage, intensity: Optional[ImageLike] = None) -> List[RegionProps]:
    """Measure every region 1..count of ``lbl`` in label order."""
    values = None
    if intensity is not None:
        values = as_image(intensity)
        require_channels(values, 1, "regionprops intensity")
        if values.shape != lbl.labels.shape:
            raise ShapeError(f"intensity shape {values.shape} differs from labels {lbl.labels.shape}")
        values = values.data.astype(np.float64)

    regions = []
    for index, box in enumerate(ndimage.find_objects(lbl.labels), start=1):
        if box is None:
            continue
        member = lbl.labels[box] == index
        rows, cols = np.nonzero(member)
        rows = rows + box[0].start
        cols = cols + box[1].start
        area = rows.size
        centroid = (float(rows.mean()), float(cols.mean()))
        moments = _central_moments(rows - centroid[0], cols - centroid[1])
        l1, l2, orientation = _inertia(moments)
        eccentricity = math.sqrt(max(0.0, 1.0 - l2 / l1)) if l1 > 0 else 0.0

        extra = {}
        if values is not None:
            pixels = values[rows, cols]
            extra = dict(mean_intensity=float(pixels.mean()),
                         min_intensity=float(pixels.min()),
                         max_intensity=float(pixels.max()))
        regions.append(RegionProps(
            label=index,
            area=int(area),
            bbox=(box[0].start, box[1].start, box[0].stop, box[1].stop),
            centroid=centroid,
            eccentricity=eccentricity,
            perimeter=_crack_length(member),
            central_moments=moments,
            orientation=orientation,
            major_axis_length=4 * math.sqrt(l1),
            minor_axis_length=4 * math.sqrt(l2),
            **extra,
        ))
    return regions
