"""
Exception hierarchy shared by every imgkit module.

The CLI maps these onto exit codes, so library code raises the most specific
class it can and never exits or prints.
"""


class ImageKitError(Exception):
    """Base class for every error raised by imgkit."""


class InvalidParameterError(ImageKitError, ValueError):
    """A scalar argument is outside its documented range."""


class ShapeError(ImageKitError, ValueError):
    """An image has the wrong channel count, element kind or shape."""


class BoundsError(ImageKitError, IndexError):
    """A pixel range does not fit inside the image."""


class DegenerateError(ImageKitError, ArithmeticError):
    """A geometric computation has no unique solution."""


class ConsensusError(ImageKitError):
    """Robust estimation found no model supported by enough samples."""


class FormatError(ImageKitError, ValueError):
    """A PNM byte stream is malformed or uses an unsupported variant."""
