"""
Hough transforms for straight lines and circles.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core import ImageLike, InvalidParameterError, as_image, require_channels
from ..draw import circle_perimeter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HoughLineAccumulator:
    """Votes indexed (rho_bin, theta_bin); rho bins are 1 pixel wide."""

    accumulator: np.ndarray
    thetas: np.ndarray
    rhos: np.ndarray


@dataclass(frozen=True, eq=False)
class HoughCircleAccumulator:
    """One vote plane the size of the image per candidate radius."""

    stack: np.ndarray
    radii: np.ndarray


def default_thetas() -> np.ndarray:
    """180 angles evenly spaced over [-pi/2, pi/2)."""
    return np.linspace(-np.pi / 2, np.pi / 2, 180, endpoint=False)


def _foreground(img: ImageLike) -> np.ndarray:
    img = as_image(img)
    require_channels(img, 1, "hough")
    return img.data != 0


def hough_line(img: ImageLike, thetas: Optional[Sequence[float]] = None) -> HoughLineAccumulator:
    """Each foreground pixel (r, c) votes at rho = c cos(theta) + r sin(theta) for every theta."""
    mask = _foreground(img)
    thetas = default_thetas() if thetas is None else np.asarray(thetas, dtype=np.float64)
    if thetas.size == 0:
        raise InvalidParameterError("hough_line needs at least one theta")
    offset = int(math.ceil(math.hypot(*mask.shape)))
    rhos = np.arange(-offset, offset + 1, dtype=np.float64)

    rows, cols = np.nonzero(mask)
    votes = np.zeros((rhos.size, thetas.size), dtype=np.int64)
    if rows.size:
        rho = np.outer(cols, np.cos(thetas)) + np.outer(rows, np.sin(thetas))
        rho_bins = np.rint(rho).astype(np.intp) + offset
        theta_bins = np.broadcast_to(np.arange(thetas.size), rho_bins.shape)
        np.add.at(votes, (rho_bins.ravel(), theta_bins.ravel()), 1)
    return HoughLineAccumulator(accumulator=votes, thetas=thetas, rhos=rhos)


def _greedy_peaks(votes: np.ndarray, windows: Tuple[int, ...], threshold: float,
                  num_peaks: Optional[int]) -> List[Tuple[int, ...]]:
    """Greedy non-maximum suppression over an n-D vote array.

    Cells are visited by descending votes, ties in index order; a cell is
    accepted unless it lies within ``windows`` of an accepted peak.
    """
    flat = votes.ravel()
    candidates = np.nonzero((flat >= threshold) & (flat > 0))[0]
    order = candidates[np.argsort(-flat[candidates], kind="stable")]
    suppressed = np.zeros(votes.shape, dtype=bool)
    peaks = []
    for index in order:
        if num_peaks is not None and len(peaks) >= num_peaks:
            break
        cell = np.unravel_index(index, votes.shape)
        if suppressed[cell]:
            continue
        peaks.append(tuple(int(i) for i in cell))
        window = tuple(slice(max(i - w, 0), i + w + 1) for i, w in zip(cell, windows))
        suppressed[window] = True
    return peaks


def hough_line_peaks(acc: HoughLineAccumulator, num_peaks: Optional[int] = None,
                     min_distance: int = 9, min_angle: int = 10,
                     threshold: Optional[float] = None) -> List[Tuple[int, float, float]]:
    """Strongest lines as (votes, theta, rho), by descending votes.

    ``min_distance`` and ``min_angle`` are suppression half-widths in rho and
    theta bins. ``threshold`` defaults to half the maximum vote.
    """
    votes = acc.accumulator
    if threshold is None:
        threshold = 0.5 * votes.max() if votes.size else 0
    peaks = _greedy_peaks(votes, (min_distance, min_angle), threshold, num_peaks)
    return [(int(votes[i, j]), float(acc.thetas[j]), float(acc.rhos[i])) for i, j in peaks]


def hough_circle(img: ImageLike, radii: Sequence[int]) -> HoughCircleAccumulator:
    """Every foreground pixel votes on the rasterized circle of each radius around it."""
    mask = _foreground(img).astype(np.int64)
    radii = np.asarray(radii, dtype=np.int64).reshape(-1)
    if np.any(radii <= 0):
        raise InvalidParameterError("circle radii must be positive")
    h, w = mask.shape
    stack = np.zeros((radii.size, h, w), dtype=np.int64)
    for k, radius in enumerate(radii):
        plane = stack[k]
        for dr, dc in circle_perimeter(0, 0, int(radius)):
            if abs(dr) >= h or abs(dc) >= w:
                continue
            src_r = slice(max(-dr, 0), h - max(dr, 0))
            src_c = slice(max(-dc, 0), w - max(dc, 0))
            dst_r = slice(max(dr, 0), h - max(-dr, 0))
            dst_c = slice(max(dc, 0), w - max(-dc, 0))
            plane[dst_r, dst_c] += mask[src_r, src_c]
    logger.debug("hough_circle: %d foreground pixels, %d radii", int(mask.sum()), radii.size)
    return HoughCircleAccumulator(stack=stack, radii=radii)


def hough_circle_peaks(acc: HoughCircleAccumulator, num_peaks: Optional[int] = None,
                       min_distance: int = 1,
                       threshold: Optional[float] = None) -> List[Tuple[int, int, int, int]]:
    """Strongest circles as (votes, row, col, radius).

    Centers closer than ``min_distance`` (Chebyshev) to an accepted peak are
    suppressed across all radii. ``threshold`` defaults to half the maximum vote.
    """
    stack = acc.stack
    if threshold is None:
        threshold = 0.5 * stack.max() if stack.size else 0
    windows = (stack.shape[0], min_distance, min_distance)
    peaks = _greedy_peaks(stack, windows, threshold, num_peaks)
    return [(int(stack[k, r, c]), r, c, int(acc.radii[k])) for k, r, c in peaks]
