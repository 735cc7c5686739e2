"""
Intensity sampling along lines and circles.
"""

import math
from typing import Sequence, Tuple

import numpy as np

from ..core import ImageLike, InvalidParameterError, ShapeError, img_as_float, require_channels
from ..draw import circle_perimeter
from ..transform import sample_bilinear


def profile_line(img: ImageLike, src: Tuple[float, float], dst: Tuple[float, float],
                 linewidth: int = 1) -> np.ndarray:
    """Intensity profile from ``src`` to ``dst`` (both (row, col), both included).

    Takes ceil(length) + 1 evenly spaced bilinear samples. With linewidth w > 1
    each sample is the mean of w samples offset along the unit normal by
    -(w-1)/2 .. (w-1)/2 pixels. Positions outside the image clamp to the edge.
    """
    if linewidth < 1 or linewidth % 2 == 0:
        raise InvalidParameterError(f"linewidth must be odd and positive, got {linewidth}")
    img = img_as_float(img)
    require_channels(img, 1, "profile_line")
    src = np.asarray(src, dtype=np.float64)
    dst = np.asarray(dst, dtype=np.float64)
    delta = dst - src
    length = float(np.hypot(*delta))
    if length == 0:
        raise InvalidParameterError("profile_line needs distinct src and dst")

    n_samples = int(math.ceil(length)) + 1
    t = np.linspace(0.0, 1.0, n_samples)
    centers = src + t[:, np.newaxis] * delta
    normal = np.array([-delta[1], delta[0]]) / length
    half = (linewidth - 1) // 2
    offsets = np.arange(-half, half + 1, dtype=np.float64)

    points = centers[:, np.newaxis, :] + offsets[np.newaxis, :, np.newaxis] * normal
    samples = sample_bilinear(img.data, points[..., 0], points[..., 1], mode="edge")
    return samples.mean(axis=1)


def circle_profile(img: ImageLike, center: Tuple[int, int], radius: int) -> np.ndarray:
    """Intensities on the rasterized circle around ``center``, ordered by angle.

    Only circle pixels inside the image are sampled. Angles run from the
    +column axis toward +row, starting at -pi.
    """
    img = img_as_float(img)
    require_channels(img, 1, "circle_profile")
    points = circle_perimeter(center[0], center[1], radius)
    inside = ((points[:, 0] >= 0) & (points[:, 0] < img.height)
              & (points[:, 1] >= 0) & (points[:, 1] < img.width))
    points = points[inside]
    angles = np.arctan2(points[:, 0] - center[0], points[:, 1] - center[1])
    order = np.argsort(angles, kind="stable")
    return img.data[points[order, 0], points[order, 1]].astype(np.float64)


def space_time_diagram(stack: Sequence[ImageLike], center: Tuple[int, int],
                       radius: int) -> np.ndarray:
    """One circle profile per frame, stacked as rows (frame index = time)."""
    profiles = [circle_profile(frame, center, radius) for frame in stack]
    if not profiles:
        raise ShapeError("space_time_diagram needs at least one frame")
    if len({p.size for p in profiles}) != 1:
        raise ShapeError("frames produce profiles of different lengths")
    return np.vstack(profiles)
