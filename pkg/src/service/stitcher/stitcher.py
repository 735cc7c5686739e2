"""
PanoramaStitcher: register two overlapping frames and merge them into one mosaic.

The pipeline follows the classic feature-based recipe: ORB keypoints on both
frames, cross-checked Hamming matching, a RANSAC projective fit, a shared
output canvas, inverse-map warping with a -1 sentinel, and alpha-average
blending.
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ...client import ImageStore
from ...color import add_alpha, gray2rgb, rgb2gray
from ...core import ConsensusError, ImageBuffer, crop, img_as_float
from ...features import KeypointSet, MatchSet, match_descriptors, orb_detect_and_extract
from ...measure import RansacResult, ransac
from ...transform import Homography2D, TransformKind, blend_average, mosaic_extent, rescale, warp
from ..settings import StitchSettings

logger = logging.getLogger(__name__)

# Written where a warped frame has no source pixel; add_alpha keys on it.
SENTINEL = -1.0


@dataclass(frozen=True, eq=False)
class StitchResult:
    """Outcome of one stitch: the frame1 -> frame0 model and the mosaic."""

    model: Homography2D
    mosaic: ImageBuffer
    keypoints: Tuple[KeypointSet, KeypointSet]
    matches: MatchSet
    ransac: RansacResult
    warped: Tuple[ImageBuffer, ImageBuffer]


class PanoramaStitcher:
    def __init__(self, settings: Optional[StitchSettings] = None, dry_run: bool = False):
        self.settings = settings or StitchSettings()
        self.store = ImageStore(dry_run)

    def prepare(self, img: ImageBuffer) -> ImageBuffer:
        """Crop, convert to grey and scale one input frame to working resolution."""
        if self.settings.crop is not None:
            img = crop(img, *self.settings.crop)
        gray = rgb2gray(img) if img.channels == 3 else img_as_float(img)
        if self.settings.scale != 1.0:
            gray = rescale(gray, self.settings.scale, anti_aliasing=True)
        return gray

    def stitch(self, frame0: ImageBuffer, frame1: ImageBuffer) -> StitchResult:
        """Warp frame1 onto frame0 (the reference) and blend both."""
        gray0, gray1 = self.prepare(frame0), self.prepare(frame1)
        kp0 = orb_detect_and_extract(gray0, self.settings.keypoints, self.settings.fast_threshold)
        kp1 = orb_detect_and_extract(gray1, self.settings.keypoints, self.settings.fast_threshold)
        matches = match_descriptors(kp0.descriptors, kp1.descriptors, cross_check=True)
        logger.info("keypoints: %d / %d, cross-checked matches: %d", len(kp0), len(kp1), len(matches))
        if len(matches) < self.settings.min_samples:
            raise ConsensusError(f"no consensus: only {len(matches)} cross-checked matches")

        # Estimation works in (x, y): reverse the (row, col) keypoint coordinates.
        src = kp1.coords[matches.pairs[:, 1]][:, ::-1]
        dst = kp0.coords[matches.pairs[:, 0]][:, ::-1]
        fit = ransac(src, dst, TransformKind.PROJECTIVE,
                     min_samples=self.settings.min_samples,
                     residual_threshold=self.settings.residual_threshold,
                     max_trials=self.settings.max_trials,
                     seed=self.settings.seed)

        shape, offset = mosaic_extent(fit.model, gray0.shape, gray1.shape)
        warped0 = warp(gray0, offset.inverse, shape, cval=SENTINEL)
        warped1 = warp(gray1, (fit.model + offset).inverse, shape, cval=SENTINEL)
        merged = blend_average([add_alpha(warped0, SENTINEL), add_alpha(warped1, SENTINEL)])
        mosaic = ImageBuffer(np.clip(merged.data, 0.0, 1.0))
        logger.info("mosaic %dx%d from %d inliers", shape[1], shape[0], fit.inlier_count)

        result = StitchResult(model=fit.model, mosaic=mosaic, keypoints=(kp0, kp1),
                              matches=matches, ransac=fit, warped=(warped0, warped1))
        return result

    def run(self, image0: str, image1: str, output: str, debug_dir: Optional[str] = None) -> StitchResult:
        frame0 = self.store.read_image(image0)
        frame1 = self.store.read_image(image1)
        result = self.stitch(frame0, frame1)
        self.store.write_image(output, result.mosaic, float_clip=self.settings.float_clip)
        if debug_dir is not None:
            self.write_debug(debug_dir, result)
        return result

    def write_debug(self, debug_dir: str, result: StitchResult) -> None:
        """Dump keypoints, matches, inliers, the model and both warped frames."""
        self.store.ensure_dir(debug_dir)
        for k, keypoints in enumerate(result.keypoints):
            rows = np.column_stack([keypoints.coords, keypoints.scores, keypoints.orientations])
            self.store.write_csv(os.path.join(debug_dir, f"keypoints{k}.csv"),
                                 ["row", "col", "score", "orientation"], rows)

        pairs = result.matches.pairs
        self.store.write_csv(os.path.join(debug_dir, "matches.csv"), ["i", "j", "hamming"],
                             np.column_stack([pairs, result.matches.distances]), fmt="%d")
        self.store.write_csv(os.path.join(debug_dir, "inliers.csv"), ["i", "j"],
                             pairs[result.ransac.inliers], fmt="%d")

        model_text = "".join(" ".join("%.12g" % v for v in row) + "\n" for row in result.model.matrix)
        self.store.write_text(os.path.join(debug_dir, "model.txt"), model_text)

        for k, warped in enumerate(result.warped):
            self.store.write_image(os.path.join(debug_dir, f"warped{k}.ppm"), gray2rgb(warped),
                                   float_clip=self.settings.float_clip)
