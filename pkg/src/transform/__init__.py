"""
Transform package: planar homographies, their estimation, warping, mosaics and
Hough transforms.
"""

from .estimation import ESTIMATORS, estimate, estimate_affine, estimate_projective, estimate_similarity
from .homography import (
    Homography2D,
    TransformKind,
    apply,
    compose,
    inverse,
    project,
    similarity_from_translation,
)
from .hough import (
    HoughCircleAccumulator,
    HoughLineAccumulator,
    default_thetas,
    hough_circle,
    hough_circle_peaks,
    hough_line,
    hough_line_peaks,
)
from .mosaic import blend_average, mosaic_extent
from .warping import rescale, sample_bilinear, warp

__all__ = [
    'ESTIMATORS', 'estimate', 'estimate_affine', 'estimate_projective', 'estimate_similarity',
    'Homography2D', 'TransformKind', 'apply', 'compose', 'inverse', 'project',
    'similarity_from_translation', 'HoughCircleAccumulator', 'HoughLineAccumulator',
    'default_thetas', 'hough_circle', 'hough_circle_peaks', 'hough_line', 'hough_line_peaks',
    'blend_average', 'mosaic_extent', 'rescale', 'sample_bilinear', 'warp',
]
