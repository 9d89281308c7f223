"""Additive embedding and the two subtractive extraction directions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, HostPixelTooBright, InvalidThreshold, NegativePixel
from .image_core import GrayImage
from .metrics import ncc
from .rmi import KEY_MAX, RmiKey

MAX_HOST_PIXEL = 255 - KEY_MAX
DEFAULT_THRESHOLD = 0.8


@dataclass(frozen=True, eq=False)
class DiffMatrix:
    """Signed result of ``watermarked - original``, shape ``(height, width)``."""

    values: np.ndarray

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def in_range(self) -> bool:
        return bool(((self.values >= 0) & (self.values <= KEY_MAX)).all())

    def __eq__(self, other):
        if not isinstance(other, DiffMatrix):
            return NotImplemented
        return np.array_equal(self.values, other.values)


@dataclass(frozen=True)
class VerificationReport:
    exact_match: bool
    match_ratio: float
    ncc: float
    threshold: float
    decision: str  # "present" or "absent"

    @property
    def present(self) -> bool:
        return self.decision == "present"


def _check_dims(*items):
    shapes = {item.shape for item in items}
    if len(shapes) != 1:
        desc = ", ".join(f"{item.width}x{item.height}" for item in items)
        raise DimensionMismatch(f"dimensions differ: {desc}")


def _first(mask: np.ndarray):
    y, x = np.argwhere(mask)[0]
    return int(x), int(y)


def embed(host: GrayImage, key: RmiKey) -> GrayImage:
    """Add the key to the host pixel by pixel. No clamping: hosts brighter
    than 245 anywhere are rejected so the sum always fits in 8 bits."""
    _check_dims(host, key)
    too_bright = host.pixels > MAX_HOST_PIXEL
    if too_bright.any():
        x, y = _first(too_bright)
        raise HostPixelTooBright(x, y, int(host.pixels[y, x]))
    return GrayImage(host.pixels.astype(np.int16) + key.entries)


def recover_original(watermarked: GrayImage, key: RmiKey) -> GrayImage:
    _check_dims(watermarked, key)
    out = watermarked.pixels.astype(np.int16) - key.entries
    negative = out < 0
    if negative.any():
        x, y = _first(negative)
        raise NegativePixel(x, y, int(out[y, x]))
    return GrayImage(out)


def extract_watermark(watermarked: GrayImage, original: GrayImage) -> DiffMatrix:
    _check_dims(watermarked, original)
    values = watermarked.pixels.astype(np.int16) - original.pixels.astype(np.int16)
    values.setflags(write=False)
    return DiffMatrix(values)


def verify(
    watermarked: GrayImage,
    original: GrayImage,
    key: RmiKey,
    threshold: float = DEFAULT_THRESHOLD,
) -> VerificationReport:
    if not 0.0 <= threshold <= 1.0:
        raise InvalidThreshold(f"threshold must lie in [0, 1], got {threshold}")
    _check_dims(watermarked, original, key)
    diff = extract_watermark(watermarked, original)
    return compare_to_key(diff, key, threshold)


def compare_to_key(diff: DiffMatrix, key: RmiKey, threshold: float = DEFAULT_THRESHOLD):
    """Score an extracted difference matrix against the reference key."""
    if diff.values.shape != key.shape:
        raise DimensionMismatch(f"diff is {diff.width}x{diff.height}, key is {key.width}x{key.height}")
    matches = int(np.count_nonzero(diff.values == key.entries))
    ratio = matches / key.entries.size
    return VerificationReport(
        exact_match=matches == key.entries.size,
        match_ratio=ratio,
        ncc=ncc(diff.values.ravel(), key.entries.ravel()),
        threshold=threshold,
        decision="present" if ratio >= threshold else "absent",
    )
