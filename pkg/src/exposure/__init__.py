"""
Exposure package: histogram equalization and intensity rescaling.
"""

from .exposure import cumulative_distribution, equalize_hist, rescale_intensity

__all__ = ['cumulative_distribution', 'equalize_hist', 'rescale_intensity']
