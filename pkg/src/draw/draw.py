"""
Rasterization primitives.

Primitives return (N, 2) integer arrays of (row, col) coordinates instead of
drawing into an image; coordinates may be negative or exceed an image, and
callers clip.
"""

import numpy as np

from ..core import InvalidParameterError


def line(r0: int, c0: int, r1: int, c1: int) -> np.ndarray:
    """Bresenham line from (r0, c0) to (r1, c1), both endpoints included, 8-connected."""
    start, end = (int(r0), int(c0)), (int(r1), int(c1))
    # Rasterize from the lexicographically smaller endpoint so a line and its
    # reverse cover the same pixels.
    if end < start:
        return _bresenham(end, start)[::-1].copy()
    return _bresenham(start, end)


def _bresenham(start, end) -> np.ndarray:
    (r0, c0), (r1, c1) = start, end
    dr, dc = abs(r1 - r0), abs(c1 - c0)
    sr = 1 if r1 >= r0 else -1
    sc = 1 if c1 >= c0 else -1
    steep = dr > dc
    major, minor = (dr, dc) if steep else (dc, dr)

    points = np.empty((major + 1, 2), dtype=np.int64)
    r, c = r0, c0
    error = 2 * minor - major
    for i in range(major + 1):
        points[i] = (r, c)
        if error > 0:
            if steep:
                c += sc
            else:
                r += sr
            error -= 2 * major
        error += 2 * minor
        if steep:
            r += sr
        else:
            c += sc
    return points


def circle_perimeter(r: int, c: int, radius: int) -> np.ndarray:
    """Midpoint circle of the given radius around (r, c), deduplicated and sorted."""
    if radius < 0:
        raise InvalidParameterError(f"radius must be non-negative, got {radius}")
    offsets = []
    x, y = 0, int(radius)
    decision = 1 - y
    while y >= x:
        offsets.extend([(y, x), (-y, x), (y, -x), (-y, -x),
                        (x, y), (-x, y), (x, -y), (-x, -y)])
        if decision < 0:
            decision += 2 * x + 3
        else:
            decision += 2 * (x - y) + 5
            y -= 1
        x += 1
    points = np.unique(np.array(offsets, dtype=np.int64), axis=0)
    return points + np.array([int(r), int(c)], dtype=np.int64)


def rectangle_perimeter(min_row: int, min_col: int, max_row: int, max_col: int) -> np.ndarray:
    """Border pixels of the half-open box [min_row, max_row) x [min_col, max_col)."""
    if max_row <= min_row or max_col <= min_col:
        raise InvalidParameterError(
            f"empty box rows [{min_row}, {max_row}) cols [{min_col}, {max_col})")
    rows = np.arange(min_row, max_row)
    cols = np.arange(min_col, max_col)
    last_row, last_col = max_row - 1, max_col - 1
    border = np.concatenate([
        np.column_stack([np.full_like(cols, min_row), cols]),
        np.column_stack([np.full_like(cols, last_row), cols]),
        np.column_stack([rows, np.full_like(rows, min_col)]),
        np.column_stack([rows, np.full_like(rows, last_col)]),
    ]).astype(np.int64)
    return np.unique(border, axis=0)
