"""
OperationRunner: apply one named library operation to an image file.

Operations are written ``name`` or ``name:arg,arg``, e.g. ``gaussian:2`` or
``canny:3,10,80``.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..client import ImageStore
from ..color import rgb2gray
from ..core import ImageBuffer, InvalidParameterError
from ..exposure import equalize_hist
from ..filters import CannyParams, canny, difference_of_gaussians, gaussian, median, sobel, threshold_adaptive
from ..transform import rescale

logger = logging.getLogger(__name__)


class UnknownOperationError(InvalidParameterError):
    """The operation name is not known or its arguments do not parse."""


@dataclass(frozen=True)
class Operation:
    func: Callable[..., ImageBuffer]
    arg_types: Tuple[type, ...]
    returns_mask: bool = False


OPERATIONS: Dict[str, Operation] = {
    "sobel": Operation(sobel, ()),
    "gaussian": Operation(gaussian, (float,)),
    "median": Operation(median, (int,)),
    "canny": Operation(lambda img, s, lo, hi: canny(img, CannyParams(s, lo, hi)),
                       (float, float, float), returns_mask=True),
    "equalize": Operation(equalize_hist, ()),
    "rgb2gray": Operation(rgb2gray, ()),
    "rescale": Operation(rescale, (float,)),
    "dog": Operation(difference_of_gaussians, (float, float)),
    "adaptive": Operation(threshold_adaptive, (int, float), returns_mask=True),
}

USAGE = "operations: sobel, gaussian:SIGMA, median:RADIUS, canny:SIGMA,LOW,HIGH, equalize, " \
        "rgb2gray, rescale:SCALE, dog:LOW_SIGMA,HIGH_SIGMA, adaptive:BLOCK,OFFSET"


def parse_operation(op_text: str) -> Tuple[Operation, List]:
    """Split ``name:a,b`` into its Operation and converted arguments."""
    name, _, arg_text = op_text.partition(":")
    operation = OPERATIONS.get(name)
    if operation is None:
        raise UnknownOperationError(f"unknown operation '{name}'")
    raw = [a for a in arg_text.split(",") if a] if arg_text else []
    if len(raw) != len(operation.arg_types):
        raise UnknownOperationError(
            f"operation '{name}' takes {len(operation.arg_types)} argument(s), got {len(raw)}")
    try:
        args = [kind(value) for kind, value in zip(operation.arg_types, raw)]
    except ValueError as e:
        raise UnknownOperationError(f"bad argument for '{name}': {e}") from e
    return operation, args


class OperationRunner:
    def __init__(self, dry_run: bool = False):
        self.store = ImageStore(dry_run)

    def run(self, op_text: str, input_path: str, output_path: str) -> ImageBuffer:
        operation, args = parse_operation(op_text)
        img = self.store.read_image(input_path)
        result = operation.func(img, *args)
        logger.info("%s: %dx%d -> %dx%d", op_text, img.width, img.height, result.width, result.height)
        if operation.returns_mask:
            self.store.write_mask(output_path, result)
        else:
            self.store.write_image(output_path, result)
        return result
