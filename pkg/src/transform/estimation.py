"""
Least-squares estimation of similarity, affine and projective transforms from
point correspondences.
"""

from typing import Callable, Dict, Tuple

import numpy as np

from ..core import DegenerateError, InvalidParameterError
from .homography import Homography2D, TransformKind

# Relative singular-value floor below which a design matrix counts as rank deficient.
_RANK_TOLERANCE = 1e-10


def _pairs(src, dst, minimum: int, kind: TransformKind) -> Tuple[np.ndarray, np.ndarray]:
    src = np.asarray(src, dtype=np.float64).reshape(-1, 2)
    dst = np.asarray(dst, dtype=np.float64).reshape(-1, 2)
    if len(src) != len(dst):
        raise InvalidParameterError(f"got {len(src)} source but {len(dst)} destination points")
    if len(src) < minimum:
        raise InvalidParameterError(
            f"{kind.value} estimation needs at least {minimum} point pairs, got {len(src)}")
    return src, dst


def _normalization(points: np.ndarray) -> np.ndarray:
    """Similarity moving the centroid to the origin with mean distance sqrt(2)."""
    centroid = points.mean(axis=0)
    mean_distance = np.sqrt(((points - centroid) ** 2).sum(axis=1)).mean()
    if mean_distance <= 0:
        raise DegenerateError("degenerate configuration")
    s = np.sqrt(2) / mean_distance
    return np.array([[s, 0, -s * centroid[0]],
                     [0, s, -s * centroid[1]],
                     [0, 0, 1]])


def _apply_normalization(t: np.ndarray, points: np.ndarray) -> np.ndarray:
    return points @ t[:2, :2].T + t[:2, 2]


def estimate_projective(src, dst) -> Homography2D:
    """Normalized direct linear transform over at least four pairs."""
    src, dst = _pairs(src, dst, 4, TransformKind.PROJECTIVE)
    t_src, t_dst = _normalization(src), _normalization(dst)
    s, d = _apply_normalization(t_src, src), _apply_normalization(t_dst, dst)

    n = len(s)
    x, y = s[:, 0], s[:, 1]
    u, v = d[:, 0], d[:, 1]
    zeros, ones = np.zeros(n), np.ones(n)
    design = np.empty((2 * n, 9))
    design[0::2] = np.column_stack([x, y, ones, zeros, zeros, zeros, -u * x, -u * y, -u])
    design[1::2] = np.column_stack([zeros, zeros, zeros, x, y, ones, -v * x, -v * y, -v])

    _, singular, vt = np.linalg.svd(design)
    if len(singular) < 8 or singular[7] <= _RANK_TOLERANCE * singular[0]:
        raise DegenerateError("degenerate configuration")
    h = vt[-1].reshape(3, 3)
    matrix = np.linalg.inv(t_dst) @ h @ t_src
    if abs(matrix[2, 2]) <= 1e-12:
        raise DegenerateError("degenerate configuration")
    return Homography2D(matrix / matrix[2, 2], TransformKind.PROJECTIVE)


def estimate_affine(src, dst) -> Homography2D:
    """Linear least squares over at least three non-collinear pairs."""
    src, dst = _pairs(src, dst, 3, TransformKind.AFFINE)
    design = np.column_stack([src, np.ones(len(src))])
    singular = np.linalg.svd(design, compute_uv=False)
    if singular[2] <= _RANK_TOLERANCE * singular[0]:
        raise DegenerateError("degenerate configuration")
    params, *_ = np.linalg.lstsq(design, dst, rcond=None)
    matrix = np.eye(3)
    matrix[:2, :] = params.T
    return Homography2D(matrix, TransformKind.AFFINE)


def estimate_similarity(src, dst) -> Homography2D:
    """Closed-form rotation, positive scale and translation minimizing squared error."""
    src, dst = _pairs(src, dst, 2, TransformKind.SIMILARITY)
    src_mean, dst_mean = src.mean(axis=0), dst.mean(axis=0)
    s, d = src - src_mean, dst - dst_mean
    spread = (s ** 2).sum()
    if spread <= 1e-12:
        raise DegenerateError("degenerate configuration")
    a = (s[:, 0] * d[:, 0] + s[:, 1] * d[:, 1]).sum() / spread
    b = (s[:, 0] * d[:, 1] - s[:, 1] * d[:, 0]).sum() / spread
    if np.hypot(a, b) <= 1e-12:
        raise DegenerateError("degenerate configuration")
    rotation = np.array([[a, -b], [b, a]])
    translation = dst_mean - rotation @ src_mean
    matrix = np.array([[a, -b, translation[0]],
                       [b, a, translation[1]],
                       [0, 0, 1]])
    return Homography2D(matrix, TransformKind.SIMILARITY)


ESTIMATORS: Dict[TransformKind, Callable[..., Homography2D]] = {
    TransformKind.SIMILARITY: estimate_similarity,
    TransformKind.AFFINE: estimate_affine,
    TransformKind.PROJECTIVE: estimate_projective,
}


def estimate(kind: TransformKind, src, dst) -> Homography2D:
    return ESTIMATORS[TransformKind(kind)](src, dst)
