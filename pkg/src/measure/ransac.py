"""
Robust transform estimation by random sample consensus.

Minimal samples come from the seeded LCG, so a given (src, dst, seed) always
yields the same result. The trial count is fixed; there is no adaptive early
exit.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core import ConsensusError, DegenerateError, InvalidParameterError, Lcg
from ..transform import Homography2D, TransformKind, estimate, project

logger = logging.getLogger(__name__)

# |w| at or below this maps a point to infinity; such pairs never count as inliers.
_AT_INFINITY = 1e-12


@dataclass(frozen=True, eq=False)
class RansacResult:
    """Winning model with its inlier mask.

    ``best_inlier_count`` is the consensus size of the winning trial; the mask
    is recomputed against the final (refit) model and may differ from it.
    """

    model: Homography2D
    inliers: np.ndarray
    trials_run: int
    best_inlier_count: int

    @property
    def inlier_count(self) -> int:
        return int(np.count_nonzero(self.inliers))


def residuals(model: Homography2D, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Euclidean transfer error of each pair; inf where src maps to infinity."""
    xy, w = project(model.matrix, src)
    out = np.full(len(src), np.inf)
    finite = np.abs(w) > _AT_INFINITY
    mapped = xy[finite] / w[finite, np.newaxis]
    out[finite] = np.hypot(*(mapped - dst[finite]).T)
    return out


def _score(model: Homography2D, src: np.ndarray, dst: np.ndarray,
           threshold: float) -> Tuple[np.ndarray, int, float]:
    errors = residuals(model, src, dst)
    mask = errors <= threshold
    return mask, int(np.count_nonzero(mask)), float(errors[mask].sum())


def ransac(src, dst, model_kind: TransformKind = TransformKind.PROJECTIVE,
           min_samples: int = 4, residual_threshold: float = 2.0,
           max_trials: int = 100, seed: int = 0) -> RansacResult:
    """Fit ``model_kind`` mapping src (x, y) points onto dst, ignoring outliers.

    Each trial fits the model to ``min_samples`` distinct pairs; trials whose
    sample is degenerate are skipped but still counted. The trial with the
    most inliers wins, ties broken by lower total inlier residual and then by
    the earlier trial. The winner is re-estimated on all its inliers and the
    mask recomputed; if that refit is degenerate or keeps fewer than
    ``min_samples`` inliers the trial model and mask stand.
    """
    model_kind = TransformKind(model_kind)
    src = np.asarray(src, dtype=np.float64).reshape(-1, 2)
    dst = np.asarray(dst, dtype=np.float64).reshape(-1, 2)
    n = len(src)
    if n != len(dst):
        raise InvalidParameterError(f"got {n} source but {len(dst)} destination points")
    if min_samples < model_kind.min_samples:
        raise InvalidParameterError(
            f"{model_kind.value} model needs min_samples >= {model_kind.min_samples}, got {min_samples}")
    if n < min_samples:
        raise InvalidParameterError(f"need at least {min_samples} point pairs, got {n}")
    if max_trials < 1:
        raise InvalidParameterError(f"max_trials must be positive, got {max_trials}")
    if residual_threshold < 0:
        raise InvalidParameterError(f"residual_threshold must be non-negative, got {residual_threshold}")

    lcg = Lcg(seed)
    best = None
    best_key = None
    for trial in range(max_trials):
        sample = lcg.sample(n, min_samples)
        try:
            model = estimate(model_kind, src[sample], dst[sample])
        except DegenerateError:
            continue
        mask, count, total = _score(model, src, dst, residual_threshold)
        key = (-count, total)
        if best_key is None or key < best_key:
            best, best_key = (model, mask, count), key
            logger.debug("trial %d: %d inliers (residual sum %.4g)", trial, count, total)

    if best is None or best[2] < min_samples:
        raise ConsensusError("no consensus")
    model, mask, count = best

    try:
        refit = estimate(model_kind, src[mask], dst[mask])
        refit_mask, refit_count, _ = _score(refit, src, dst, residual_threshold)
        if refit_count >= min_samples:
            model, mask = refit, refit_mask
        else:
            logger.debug("refit kept only %d inliers, keeping trial model", refit_count)
    except DegenerateError:
        logger.debug("refit on %d inliers is degenerate, keeping trial model", count)

    logger.info("RANSAC: %d/%d inliers after %d trials", int(np.count_nonzero(mask)), n, max_trials)
    return RansacResult(model=model, inliers=mask, trials_run=max_trials, best_inlier_count=count)
