"""
Color package: grey/RGB conversions and alpha layers.
"""

from .colorconv import LUMA_WEIGHTS, add_alpha, gray2rgb, rgb2gray

__all__ = ['LUMA_WEIGHTS', 'add_alpha', 'gray2rgb', 'rgb2gray']
