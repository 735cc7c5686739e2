"""
ImageInspector: one-line summary of an image file.
"""

from ..client import ImageStore


class ImageInspector:
    def __init__(self):
        self.store = ImageStore()

    def describe(self, path: str) -> str:
        """``width height channels kind min max`` for the image at ``path``."""
        img = self.store.read_image(path)
        data = img.data
        return "%d %d %d %s %.12g %.12g" % (img.width, img.height, img.channels,
                                            img.elem_kind.value, data.min(), data.max())
