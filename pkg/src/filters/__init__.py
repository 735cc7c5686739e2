"""
Filters package: smoothing, rank, edge and local threshold filters.
"""

from .edges import CannyParams, canny, sobel, sobel_gradients
from .smoothing import difference_of_gaussians, gaussian, gaussian_kernel, median
from .thresholding import threshold_adaptive

__all__ = [
    'CannyParams', 'canny', 'sobel', 'sobel_gradients', 'difference_of_gaussians',
    'gaussian', 'gaussian_kernel', 'median', 'threshold_adaptive',
]
