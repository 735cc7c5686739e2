"""
Stitcher module for two-frame panoramas.
"""

from .stitcher import PanoramaStitcher, StitchResult

__all__ = ['PanoramaStitcher', 'StitchResult']
