"""Shared fixtures and synthetic images for the imgkit tests."""

import numpy as np
import pytest


def disk_mask(shape, center, radius):
    rr, cc = np.mgrid[0:shape[0], 0:shape[1]]
    return (rr - center[0]) ** 2 + (cc - center[1]) ** 2 <= radius ** 2


def textured_image(size: int = 256, seed: int = 3) -> np.ndarray:
    """Smooth random texture in [0, 1]: blurred noise plus a few bright blobs."""
    from scipy import ndimage

    rng = np.random.default_rng(seed)
    noise = ndimage.gaussian_filter(rng.random((size, size)), 2.0)
    noise = (noise - noise.min()) / (noise.max() - noise.min())
    for _ in range(12):
        r, c = rng.integers(20, size - 20, size=2)
        noise[disk_mask(noise.shape, (r, c), rng.integers(4, 10))] = rng.random()
    return noise.astype(np.float32)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def coins_image():
    """Six separated bright disks on a gentle horizontal gradient, as U8."""
    image = np.tile(np.linspace(30, 60, 160), (120, 1))
    centers = [(30, 30), (30, 80), (30, 130), (85, 30), (85, 80), (85, 130)]
    for center in centers:
        image[disk_mask(image.shape, center, 14)] = 200
    return np.rint(image).astype(np.uint8), centers
