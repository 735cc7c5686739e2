"""
Measure package: connected components, region properties, intensity
profiles and robust model fitting.
"""

from .label import LabelImage, label
from .profile import circle_profile, profile_line, space_time_diagram
from .ransac import RansacResult, ransac, residuals
from .regionprops import RegionProps, regionprops

__all__ = [
    'LabelImage', 'label', 'circle_profile', 'profile_line', 'space_time_diagram',
    'RansacResult', 'ransac', 'residuals', 'RegionProps', 'regionprops',
]
