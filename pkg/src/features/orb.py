"""
Oriented FAST and rotated BRIEF (ORB) keypoints and binary descriptors.

Keypoints are FAST-9 corners scored by the Harris measure on every level of
an image pyramid; each gets an intensity-centroid orientation and a 256-bit
descriptor steered by that orientation. Everything is deterministic: the
BRIEF sampling table comes from the seeded LCG, not from a random generator.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy import ndimage

from ..core import ImageLike, InvalidParameterError, Lcg, as_image, img_as_float, require_channels
from ..filters import gaussian_kernel, sobel_gradients
from ..filters.smoothing import separable_filter
from ..transform import rescale

logger = logging.getLogger(__name__)

PYRAMID_DOWNSCALE = 1.2
MAX_LEVELS = 8
MIN_LEVEL_SIZE = 32
FAST_ARC = 9
HARRIS_K = 0.04
HARRIS_SIGMA = 1.0
ORIENTATION_RADIUS = 15
DESCRIPTOR_SIGMA = 2.0
DESCRIPTOR_BITS = 256
BRIEF_SEED = 42
BRIEF_HALF_WIDTH = 12
# Rotated BRIEF offsets reach round(12 * sqrt(2)) = 17 pixels.
BORDER = 17

# Bresenham circle of radius 3, clockwise from the top, as (row, col) offsets.
FAST_CIRCLE = np.array([
    (-3, 0), (-3, 1), (-2, 2), (-1, 3), (0, 3), (1, 3), (2, 2), (3, 1),
    (3, 0), (3, -1), (2, -2), (1, -3), (0, -3), (-1, -3), (-2, -2), (-3, -1),
])


def brief_offsets(seed: int = BRIEF_SEED, bits: int = DESCRIPTOR_BITS) -> np.ndarray:
    """Sampling table of (dr1, dc1, dr2, dc2) rows, each coordinate in [-12, 12]."""
    lcg = Lcg(seed)
    span = 2 * BRIEF_HALF_WIDTH + 1
    values = [lcg.randrange(span) - BRIEF_HALF_WIDTH for _ in range(4 * bits)]
    return np.array(values, dtype=np.int64).reshape(bits, 4)


BRIEF_OFFSETS = brief_offsets()


def _disc_offsets(radius: int) -> Tuple[np.ndarray, np.ndarray]:
    rr, cc = np.mgrid[-radius:radius + 1, -radius:radius + 1]
    inside = rr ** 2 + cc ** 2 <= radius ** 2
    return rr[inside], cc[inside]


_DISC_ROWS, _DISC_COLS = _disc_offsets(ORIENTATION_RADIUS)


@dataclass(frozen=True, eq=False)
class KeypointSet:
    """Keypoints in level-0 (row, col) pixels with aligned per-keypoint attributes.

    ``descriptors`` is an (N, 256) bool array, or None when extraction did not run.
    """

    coords: np.ndarray
    scores: np.ndarray
    orientations: np.ndarray
    scales: np.ndarray
    descriptors: Optional[np.ndarray] = None

    def __post_init__(self):
        n = len(self.coords)
        lengths = [len(self.scores), len(self.orientations), len(self.scales)]
        if self.descriptors is not None:
            lengths.append(len(self.descriptors))
        if any(length != n for length in lengths):
            raise InvalidParameterError("keypoint attribute arrays differ in length")

    def __len__(self) -> int:
        return len(self.coords)

    def subset(self, indices) -> "KeypointSet":
        indices = np.asarray(indices, dtype=np.intp)
        return KeypointSet(
            coords=self.coords[indices],
            scores=self.scores[indices],
            orientations=self.orientations[indices],
            scales=self.scales[indices],
            descriptors=None if self.descriptors is None else self.descriptors[indices],
        )


def _has_arc(flags: np.ndarray) -> np.ndarray:
    """True where at least FAST_ARC consecutive circle flags (with wrap-around) are set."""
    doubled = np.concatenate([flags, flags[:FAST_ARC - 1]]).astype(np.int32)
    totals = np.concatenate([np.zeros((1,) + flags.shape[1:], dtype=np.int32),
                             np.cumsum(doubled, axis=0)])
    runs = totals[FAST_ARC:] - totals[:-FAST_ARC]
    return np.any(runs == FAST_ARC, axis=0)


def fast_corners(data: np.ndarray, threshold: float) -> np.ndarray:
    """FAST-9 corner mask: an arc of 9 circle pixels all brighter or all darker by ``threshold``."""
    h, w = data.shape
    corners = np.zeros((h, w), dtype=bool)
    if h < 7 or w < 7:
        return corners
    center = data[3:h - 3, 3:w - 3]
    ring = np.stack([data[3 + dr:h - 3 + dr, 3 + dc:w - 3 + dc] for dr, dc in FAST_CIRCLE])
    corners[3:h - 3, 3:w - 3] = _has_arc(ring > center + threshold) | _has_arc(ring < center - threshold)
    return corners


def harris_response(data: np.ndarray) -> np.ndarray:
    """Harris measure det(A) - k trace(A)^2 of the Gaussian-weighted structure tensor."""
    gx, gy = sobel_gradients(data)
    gx, gy = gx / 4.0, gy / 4.0
    window = gaussian_kernel(HARRIS_SIGMA)
    axx = separable_filter(gx * gx, window)
    ayy = separable_filter(gy * gy, window)
    axy = separable_filter(gx * gy, window)
    return axx * ayy - axy ** 2 - HARRIS_K * (axx + ayy) ** 2


def _orientations(data: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Intensity-centroid angle atan2(m01, m10) over a radius-15 disc, in (-pi, pi]."""
    patches = data[rows[:, np.newaxis] + _DISC_ROWS, cols[:, np.newaxis] + _DISC_COLS]
    m01 = patches @ _DISC_ROWS.astype(np.float64)
    m10 = patches @ _DISC_COLS.astype(np.float64)
    theta = np.arctan2(m01, m10)
    return np.where(theta <= -np.pi, np.pi, theta)


def _descriptors(smoothed: np.ndarray, rows: np.ndarray, cols: np.ndarray,
                 theta: np.ndarray) -> np.ndarray:
    """Steered BRIEF: compare smoothed intensities at rotated offset pairs."""
    cos = np.cos(theta)[:, np.newaxis]
    sin = np.sin(theta)[:, np.newaxis]
    dr1, dc1, dr2, dc2 = (BRIEF_OFFSETS[:, k] for k in range(4))

    def sample(dr, dc):
        rot_c = np.rint(cos * dc - sin * dr).astype(np.intp)
        rot_r = np.rint(sin * dc + cos * dr).astype(np.intp)
        return smoothed[rows[:, np.newaxis] + rot_r, cols[:, np.newaxis] + rot_c]

    return sample(dr1, dc1) < sample(dr2, dc2)


class OrbDetector:
    """Detect ORB keypoints and extract their descriptors.

    ``fast_threshold`` is on the [0, 1] intensity scale.
    """

    def __init__(self, n_keypoints: int = 500, fast_threshold: float = 0.08):
        if n_keypoints < 1:
            raise InvalidParameterError(f"n_keypoints must be positive, got {n_keypoints}")
        if fast_threshold < 0:
            raise InvalidParameterError(f"fast_threshold must be non-negative, got {fast_threshold}")
        self.n_keypoints = n_keypoints
        self.fast_threshold = fast_threshold

    def pyramid(self, data: np.ndarray) -> List[Tuple[float, np.ndarray]]:
        """(scale, image) pairs; level k is the image anti-aliased and resampled by 1.2^-k."""
        levels = [(1.0, data)]
        for k in range(1, MAX_LEVELS):
            scale = PYRAMID_DOWNSCALE ** -k
            level = rescale(data.astype(np.float32), scale, anti_aliasing=True).data.astype(np.float64)
            if min(level.shape) < MIN_LEVEL_SIZE:
                break
            levels.append((scale, level))
        return levels

    def _detect_level(self, data: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        h, w = data.shape
        corners = fast_corners(data, self.fast_threshold)
        response = harris_response(data)
        masked = np.where(corners, response, -np.inf)
        local_max = ndimage.maximum_filter(masked, size=3, mode="constant", cval=-np.inf)
        keep = corners & (masked == local_max)
        keep[:BORDER, :] = False
        keep[h - BORDER:, :] = False
        keep[:, :BORDER] = False
        keep[:, w - BORDER:] = False
        rows, cols = np.nonzero(keep)
        return rows, cols, response[rows, cols]

    def detect_and_extract(self, img: ImageLike) -> KeypointSet:
        img = img_as_float(as_image(img))
        require_channels(img, 1, "ORB")
        if min(img.height, img.width) < MIN_LEVEL_SIZE:
            raise InvalidParameterError(
                f"ORB needs images of at least {MIN_LEVEL_SIZE}x{MIN_LEVEL_SIZE}, "
                f"got {img.height}x{img.width}")
        data = img.data.astype(np.float64)

        coords, scores, thetas, scales, descriptors = [], [], [], [], []
        for level, (scale, level_data) in enumerate(self.pyramid(data)):
            rows, cols, response = self._detect_level(level_data)
            logger.debug("ORB level %d (%dx%d): %d keypoints", level,
                         level_data.shape[0], level_data.shape[1], rows.size)
            if rows.size == 0:
                continue
            theta = _orientations(level_data, rows, cols)
            smoothed = separable_filter(level_data, gaussian_kernel(DESCRIPTOR_SIGMA))
            descriptors.append(_descriptors(smoothed, rows, cols, theta))
            level0 = np.rint(np.column_stack([rows, cols]) / scale).astype(np.int64)
            level0[:, 0] = np.clip(level0[:, 0], 0, img.height - 1)
            level0[:, 1] = np.clip(level0[:, 1], 0, img.width - 1)
            coords.append(level0)
            scores.append(response)
            thetas.append(theta)
            scales.append(np.full(rows.size, level, dtype=np.int64))

        if not coords:
            return KeypointSet(coords=np.zeros((0, 2), dtype=np.int64), scores=np.zeros(0),
                               orientations=np.zeros(0), scales=np.zeros(0, dtype=np.int64),
                               descriptors=np.zeros((0, DESCRIPTOR_BITS), dtype=bool))

        coords = np.concatenate(coords)
        scores = np.concatenate(scores)
        scales = np.concatenate(scales)
        order = np.lexsort((scales, coords[:, 1], coords[:, 0], -scores))[:self.n_keypoints]
        keypoints = KeypointSet(coords=coords[order], scores=scores[order],
                                orientations=np.concatenate(thetas)[order], scales=scales[order],
                                descriptors=np.concatenate(descriptors)[order])
        logger.debug("ORB kept %d keypoints", len(keypoints))
        return keypoints


def orb_detect_and_extract(img: ImageLike, n_keypoints: int = 500,
                           fast_threshold: float = 0.08) -> KeypointSet:
    return OrbDetector(n_keypoints, fast_threshold).detect_and_extract(img)
