"""
Core package: the image buffer, the dtype contract, histograms and errors.
"""

from .errors import (
    BoundsError,
    ConsensusError,
    DegenerateError,
    FormatError,
    ImageKitError,
    InvalidParameterError,
    ShapeError,
)
from .histogram import Histogram, histogram
from .image import (
    ElemKind,
    ImageBuffer,
    ImageLike,
    as_image,
    crop,
    img_as_float,
    img_as_ubyte,
    mask_to_ubyte,
    require_channels,
)
from .lcg import Lcg

__all__ = [
    'BoundsError', 'ConsensusError', 'DegenerateError', 'FormatError', 'ImageKitError',
    'InvalidParameterError', 'ShapeError', 'Histogram', 'histogram', 'ElemKind',
    'ImageBuffer', 'ImageLike', 'as_image', 'crop', 'img_as_float', 'img_as_ubyte',
    'mask_to_ubyte', 'require_channels', 'Lcg',
]
