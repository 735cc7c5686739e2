"""
Brute-force binary descriptor matching by Hamming distance.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial.distance import cdist

from ..core import ShapeError


@dataclass(frozen=True, eq=False)
class MatchSet:
    """Matched index pairs (into set 1, into set 2) with their Hamming distances."""

    pairs: np.ndarray
    distances: np.ndarray

    def __len__(self) -> int:
        return len(self.pairs)


def _as_bits(descriptors) -> np.ndarray:
    bits = np.asarray(descriptors, dtype=bool)
    if bits.ndim != 2:
        raise ShapeError(f"descriptors must be an (N, bits) array, got shape {bits.shape}")
    return bits


def hamming_distance(a, b) -> np.ndarray:
    """All-pairs count of differing bits between the rows of ``a`` and ``b``."""
    a, b = _as_bits(a), _as_bits(b)
    if a.shape[1] != b.shape[1]:
        raise ShapeError(f"descriptor lengths differ: {a.shape[1]} vs {b.shape[1]}")
    if len(a) == 0 or len(b) == 0:
        return np.zeros((len(a), len(b)), dtype=np.int64)
    fraction = cdist(a, b, metric="hamming")
    return np.rint(fraction * a.shape[1]).astype(np.int64)


def match_descriptors(d1, d2, cross_check: bool = True,
                      max_distance: Optional[int] = None) -> MatchSet:
    """Nearest neighbor of every descriptor of ``d1`` in ``d2``.

    Ties go to the lowest index. With ``cross_check`` a pair survives only if
    each side is the other's nearest neighbor. Pairs are sorted by the index
    into ``d1``.
    """
    distances = hamming_distance(d1, d2)
    n1, n2 = distances.shape
    if n1 == 0 or n2 == 0:
        return MatchSet(pairs=np.zeros((0, 2), dtype=np.int64), distances=np.zeros(0, dtype=np.int64))

    idx1 = np.arange(n1)
    idx2 = np.argmin(distances, axis=1)
    if cross_check:
        back = np.argmin(distances, axis=0)
        mutual = back[idx2] == idx1
        idx1, idx2 = idx1[mutual], idx2[mutual]
    best = distances[idx1, idx2]
    if max_distance is not None:
        close = best <= max_distance
        idx1, idx2, best = idx1[close], idx2[close], best[close]
    return MatchSet(pairs=np.column_stack([idx1, idx2]).astype(np.int64), distances=best)
