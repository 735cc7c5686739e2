"""
Binary PGM (P5) and PPM (P6) codec, 8-bit only.
"""

import logging
from typing import Tuple

import numpy as np

from ..core import FormatError, ImageBuffer, ImageLike, ShapeError, as_image

logger = logging.getLogger(__name__)

MAXVAL = 255
_CHANNELS = {b"P5": 1, b"P6": 3}
_MAGIC = {1: b"P5", 3: b"P6"}
_WHITESPACE = b" \t\n\r\v\f"


def _next_token(data: bytes, pos: int) -> Tuple[bytes, int]:
    """Next header token starting at ``pos``, skipping whitespace and ``#`` comments."""
    n = len(data)
    while pos < n:
        if data[pos] in _WHITESPACE:
            pos += 1
        elif data[pos:pos + 1] == b"#":
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise FormatError("truncated file")
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, field: str) -> Tuple[int, int]:
    token, pos = _next_token(data, pos)
    if not token.isdigit():
        raise FormatError(f"unsupported format: bad {field} {token!r}")
    return int(token), pos


def read_pnm(data: bytes) -> ImageBuffer:
    """Decode a P5/P6 file with maxval 255 into a U8 buffer."""
    magic = bytes(data[:2])
    if magic not in _CHANNELS:
        raise FormatError("unsupported format")
    channels = _CHANNELS[magic]
    if len(data) > 2 and data[2] not in _WHITESPACE and data[2:3] != b"#":
        raise FormatError("unsupported format")

    width, pos = _header_int(data, 2, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if maxval != MAXVAL:
        raise FormatError("unsupported depth")
    if width < 1 or height < 1:
        raise FormatError(f"unsupported format: empty image {width}x{height}")
    # Exactly one whitespace byte separates maxval from the samples.
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise FormatError("truncated file")
    pos += 1

    expected = width * height * channels
    payload = data[pos:pos + expected]
    if len(payload) < expected:
        raise FormatError("truncated file")
    pixels = np.frombuffer(payload, dtype=np.uint8)
    shape = (height, width) if channels == 1 else (height, width, channels)
    logger.debug("decoded %s %dx%d", magic.decode(), width, height)
    return ImageBuffer(pixels.reshape(shape))


def write_pnm(img: ImageLike) -> bytes:
    """Encode a 1- or 3-channel U8 buffer in canonical form: magic, size and maxval on their own lines."""
    img = as_image(img)
    if img.data.dtype != np.uint8:
        raise ShapeError(f"PNM output requires u8 samples, got {img.elem_kind.value}")
    if img.channels not in _MAGIC:
        raise ShapeError(f"PNM output requires 1 or 3 channels, got {img.channels}")
    header = b"%s\n%d %d\n%d\n" % (_MAGIC[img.channels], img.width, img.height, MAXVAL)
    return header + np.ascontiguousarray(img.data).tobytes()
