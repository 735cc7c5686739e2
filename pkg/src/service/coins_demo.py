"""
CoinsDemo: the getting-started walkthrough as a batch job.

Histogram, adaptive threshold, local maxima, Canny edges, labeling and
bounding boxes of one grey image, each step written to an output directory.
"""

import logging
import os
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..client import ImageStore
from ..color import gray2rgb, rgb2gray
from ..core import ImageBuffer, histogram, img_as_ubyte
from ..draw import rectangle_perimeter
from ..features import peak_local_max
from ..filters import CannyParams, canny, threshold_adaptive
from ..measure import RegionProps, label, regionprops
from .settings import CoinsSettings

logger = logging.getLogger(__name__)

BOX_COLOR = (255, 0, 0)


@dataclass(frozen=True, eq=False)
class CoinsReport:
    peaks: np.ndarray
    regions: List[RegionProps]


def labels_to_ubyte(labels: np.ndarray, count: int) -> ImageBuffer:
    """Spread label ids over 0..255 as round(label * 255 / count)."""
    if count == 0:
        return ImageBuffer(np.zeros(labels.shape, dtype=np.uint8))
    scaled = np.floor(labels.astype(np.float64) * 255.0 / count + 0.5)
    return ImageBuffer(scaled.astype(np.uint8))


def draw_boxes(gray: ImageBuffer, regions: List[RegionProps]) -> ImageBuffer:
    """The grey U8 image as RGB with every region's bounding box outlined in red."""
    canvas = np.array(gray2rgb(gray).data)
    for region in regions:
        outline = rectangle_perimeter(*region.bbox)
        canvas[outline[:, 0], outline[:, 1]] = BOX_COLOR
    return ImageBuffer(canvas)


class CoinsDemo:
    def __init__(self, settings: Optional[CoinsSettings] = None, dry_run: bool = False):
        self.settings = settings or CoinsSettings()
        self.store = ImageStore(dry_run)

    def run(self, image_path: str, outdir: str) -> CoinsReport:
        img = self.store.read_image(image_path)
        gray = img_as_ubyte(rgb2gray(img)) if img.channels == 3 else img
        self.store.ensure_dir(outdir)

        hist = histogram(gray)
        self.store.write_csv(os.path.join(outdir, "histogram.csv"), ["bin", "count"],
                             np.column_stack([np.arange(hist.counts.size), hist.counts]), fmt="%d")

        adaptive = threshold_adaptive(gray, self.settings.block_size, offset=self.settings.offset)
        self.store.write_mask(os.path.join(outdir, "adaptive.pgm"), adaptive)

        peaks = peak_local_max(gray, min_distance=self.settings.min_distance)
        self.store.write_csv(os.path.join(outdir, "peaks.csv"), ["row", "col"], peaks, fmt="%d")

        params = CannyParams(sigma=self.settings.sigma, low_threshold=self.settings.low_threshold,
                             high_threshold=self.settings.high_threshold)
        edges = canny(gray, params)
        self.store.write_mask(os.path.join(outdir, "edges.pgm"), edges)

        labeled = label(edges)
        self.store.write_image(os.path.join(outdir, "labels.pgm"),
                               labels_to_ubyte(labeled.labels, labeled.count))

        regions = regionprops(labeled)
        self.store.write_image(os.path.join(outdir, "boxes.ppm"), draw_boxes(gray, regions))
        logger.info("coins demo: %d peaks, %d regions", len(peaks), len(regions))
        return CoinsReport(peaks=peaks, regions=regions)
