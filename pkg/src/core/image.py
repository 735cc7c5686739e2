"""
Image buffer type and the dtype/range contract.

8-bit images hold integers in 0..255, floating images hold float32 values in
[0, 1]. Operations accept an ImageBuffer or any numpy array ("anything in") and
return ImageBuffers.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from .errors import BoundsError, ShapeError


class ElemKind(str, Enum):
    U8 = "u8"
    F32 = "f32"


_VALID_CHANNELS = (1, 3, 4)


@dataclass(frozen=True, eq=False)
class ImageBuffer:
    """Immutable rectangular pixel array with an explicit element kind.

    ``data`` has shape (height, width) for grayscale images and
    (height, width, channels) otherwise. The array is read-only.
    """

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data)
        if data.ndim == 3 and data.shape[2] == 1:
            data = data[:, :, 0]
        if data.ndim not in (2, 3):
            raise ShapeError(f"image must be 2-D or 3-D, got shape {data.shape}")
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise ShapeError(f"image must be at least 1x1, got shape {data.shape}")
        if data.ndim == 3 and data.shape[2] not in _VALID_CHANNELS:
            raise ShapeError(f"unsupported channel count {data.shape[2]}")
        if data.dtype not in (np.uint8, np.float32):
            raise ShapeError(f"unsupported element type {data.dtype}; use ImageBuffer.from_array")
        data = np.array(data, copy=True)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_array(cls, array) -> "ImageBuffer":
        """Coerce an array: bool becomes U8 {0,1}, any float becomes F32."""
        array = np.asarray(array)
        if array.dtype == np.bool_:
            array = array.astype(np.uint8)
        elif np.issubdtype(array.dtype, np.floating):
            array = array.astype(np.float32)
        elif array.dtype != np.uint8:
            if array.size and (array.min() < 0 or array.max() > 255):
                raise ShapeError(f"integer image of type {array.dtype} exceeds 0..255")
            array = array.astype(np.uint8)
        return cls(array)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return 1 if self.data.ndim == 2 else self.data.shape[2]

    @property
    def elem_kind(self) -> ElemKind:
        return ElemKind.U8 if self.data.dtype == np.uint8 else ElemKind.F32

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.data
        return self.data.astype(dtype)

    def __repr__(self) -> str:
        return (f"ImageBuffer({self.height}x{self.width}, channels={self.channels}, "
                f"kind={self.elem_kind.value})")


ImageLike = Union[ImageBuffer, np.ndarray]


def as_image(img: ImageLike) -> ImageBuffer:
    if isinstance(img, ImageBuffer):
        return img
    return ImageBuffer.from_array(img)


def require_channels(img: ImageBuffer, channels: int, operation: str) -> None:
    if img.channels != channels:
        label = "single channel" if channels == 1 else f"{channels} channels"
        raise ShapeError(f"{operation} requires {label}, got {img.channels}")


def img_as_float(img: ImageLike) -> ImageBuffer:
    """Map U8 values onto [0, 1] by dividing by 255; F32 input passes through."""
    img = as_image(img)
    if img.elem_kind is ElemKind.F32:
        return img
    return ImageBuffer(img.data.astype(np.float32) / np.float32(255))


def img_as_ubyte(img: ImageLike) -> ImageBuffer:
    """Clamp F32 values to [0, 1], scale by 255 and round half away from zero."""
    img = as_image(img)
    if img.elem_kind is ElemKind.U8:
        return img
    scaled = np.clip(img.data.astype(np.float64), 0.0, 1.0) * 255.0
    return ImageBuffer(np.floor(scaled + 0.5).astype(np.uint8))


def mask_to_ubyte(mask: ImageLike) -> ImageBuffer:
    """Render a {0,1} mask as a viewable {0,255} U8 image."""
    data = np.asarray(as_image(mask).data)
    return ImageBuffer(np.where(data != 0, 255, 0).astype(np.uint8))


def crop(img: ImageLike, r0: int, r1: int, c0: int, c1: int) -> ImageBuffer:
    """Copy the half-open block rows [r0, r1) x columns [c0, c1)."""
    img = as_image(img)
    if not 0 <= r0 < r1 <= img.height:
        raise BoundsError(f"row range [{r0}, {r1}) outside image of height {img.height}")
    if not 0 <= c0 < c1 <= img.width:
        raise BoundsError(f"column range [{c0}, {c1}) outside image of width {img.width}")
    return ImageBuffer(img.data[r0:r1, c0:c1])
