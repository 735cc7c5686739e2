"""
Features package: local maxima, ORB keypoints and descriptor matching.
"""

from .matching import MatchSet, hamming_distance, match_descriptors
from .orb import BRIEF_OFFSETS, KeypointSet, OrbDetector, brief_offsets, orb_detect_and_extract
from .peaks import peak_local_max

__all__ = [
    'MatchSet', 'hamming_distance', 'match_descriptors', 'BRIEF_OFFSETS', 'KeypointSet',
    'OrbDetector', 'brief_offsets', 'orb_detect_and_extract', 'peak_local_max',
]
