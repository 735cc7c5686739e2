"""
Planar transforms as 3x3 homogeneous matrices.

Points are (x, y) = (col, row). Images index (row, col); the swap happens only
in apply/warp.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from ..core import DegenerateError, ShapeError

_SINGULAR = 1e-12
_STRUCTURE_TOLERANCE = 1e-9


class TransformKind(str, Enum):
    SIMILARITY = "similarity"
    AFFINE = "affine"
    PROJECTIVE = "projective"

    @property
    def rank(self) -> int:
        return _KIND_ORDER.index(self)

    @property
    def min_samples(self) -> int:
        return {TransformKind.SIMILARITY: 2,
                TransformKind.AFFINE: 3,
                TransformKind.PROJECTIVE: 4}[self]


_KIND_ORDER = [TransformKind.SIMILARITY, TransformKind.AFFINE, TransformKind.PROJECTIVE]


def _check_structure(matrix: np.ndarray, kind: TransformKind) -> None:
    scale = max(1.0, float(np.abs(matrix).max()))
    tol = _STRUCTURE_TOLERANCE * scale
    if kind is TransformKind.PROJECTIVE:
        return
    if abs(matrix[2, 0]) > tol or abs(matrix[2, 1]) > tol or abs(matrix[2, 2] - 1) > tol:
        raise ShapeError(f"{kind.value} transform must have last row (0, 0, 1)")
    if kind is TransformKind.SIMILARITY:
        a, b = matrix[0, 0], matrix[0, 1]
        if abs(matrix[1, 1] - a) > tol or abs(matrix[1, 0] + b) > tol:
            raise ShapeError("similarity transform must have a scaled rotation block")


@dataclass(frozen=True, eq=False)
class Homography2D:
    """Invertible 3x3 transform, normalized so matrix[2][2] = 1 when nonzero.

    ``a + b`` composes: ``a`` is applied first, then ``b``.
    """

    matrix: np.ndarray
    kind: TransformKind = TransformKind.PROJECTIVE

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.float64)
        if matrix.shape != (3, 3):
            raise ShapeError(f"transform matrix must be 3x3, got {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise DegenerateError("transform matrix has non-finite entries")
        if abs(matrix[2, 2]) > _SINGULAR:
            matrix = matrix / matrix[2, 2]
        if abs(np.linalg.det(matrix)) <= _SINGULAR:
            raise DegenerateError("transform matrix is singular")
        kind = TransformKind(self.kind)
        _check_structure(matrix, kind)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "kind", kind)

    @classmethod
    def identity(cls) -> "Homography2D":
        return cls(np.eye(3), TransformKind.SIMILARITY)

    @classmethod
    def similarity(cls, scale: float = 1.0, rotation: float = 0.0,
                   translation: Tuple[float, float] = (0.0, 0.0)) -> "Homography2D":
        c, s = scale * np.cos(rotation), scale * np.sin(rotation)
        tx, ty = translation
        return cls(np.array([[c, -s, tx], [s, c, ty], [0, 0, 1]]), TransformKind.SIMILARITY)

    @classmethod
    def affine(cls, matrix) -> "Homography2D":
        return cls(matrix, TransformKind.AFFINE)

    @classmethod
    def projective(cls, matrix) -> "Homography2D":
        return cls(matrix, TransformKind.PROJECTIVE)

    @property
    def inverse(self) -> "Homography2D":
        return inverse(self)

    def __call__(self, points) -> np.ndarray:
        return apply(self, points)

    def __add__(self, other: "Homography2D") -> "Homography2D":
        if not isinstance(other, Homography2D):
            return NotImplemented
        return compose(self, other)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(f"{v:.6g}" for v in row) for row in self.matrix)
        return f"Homography2D({self.kind.value}, [{rows}])"


def project(matrix: np.ndarray, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Apply a 3x3 matrix to (N, 2) points; returns (xy, w) without dividing out w."""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    homogeneous = points @ matrix[:, :2].T + matrix[:, 2]
    return homogeneous[:, :2], homogeneous[:, 2]


def apply(t: Homography2D, points: Sequence) -> np.ndarray:
    """Map (x, y) points through t; returns an (N, 2) array."""
    xy, w = project(t.matrix, points)
    if np.any(np.abs(w) <= _SINGULAR):
        raise DegenerateError("point at infinity")
    return xy / w[:, np.newaxis]


def inverse(t: Homography2D) -> Homography2D:
    try:
        matrix = np.linalg.inv(t.matrix)
    except np.linalg.LinAlgError as e:
        raise DegenerateError("transform matrix is singular") from e
    return Homography2D(matrix, t.kind)


def compose(a: Homography2D, b: Homography2D) -> Homography2D:
    """Transform that applies ``a`` first and then ``b`` (matrix M_b @ M_a)."""
    kind = a.kind if a.kind.rank >= b.kind.rank else b.kind
    return Homography2D(b.matrix @ a.matrix, kind)


def similarity_from_translation(tx: float, ty: float) -> Homography2D:
    return Homography2D.similarity(translation=(tx, ty))
