"""Seedable, deterministic image corruptions for robustness experiments.

Stochastic attacks consume the SplitMix64 stream seeded by ``spec.seed`` in
row-major pixel order, so results are reproducible across implementations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidAttackSpec, OutOfBounds
from .image_core import GrayImage
from .rmi import MASK64, splitmix64_stream

KINDS = ("identity", "uniform_noise", "salt_pepper", "crop_fill", "quantize")


@dataclass(frozen=True)
class AttackSpec:
    kind: str
    amplitude: int | None = None
    density: float | None = None
    rect: tuple[int, int, int, int] | None = None
    fill: int | None = None
    levels: int | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidAttackSpec(f"unknown attack kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MASK64:
            raise InvalidAttackSpec(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.kind == "uniform_noise":
            if not isinstance(self.amplitude, int) or self.amplitude < 0:
                raise InvalidAttackSpec("uniform_noise needs a non-negative integer amplitude")
        elif self.kind == "salt_pepper":
            if self.density is None or not 0.0 <= self.density <= 1.0:
                raise InvalidAttackSpec("salt_pepper needs a density in [0, 1]")
        elif self.kind == "crop_fill":
            if self.rect is None or len(self.rect) != 4:
                raise InvalidAttackSpec("crop_fill needs rect=(x, y, w, h)")
            x, y, w, h = self.rect
            if min(x, y) < 0 or w < 1 or h < 1:
                raise InvalidAttackSpec(f"invalid rect {self.rect}")
            if self.fill is None or not 0 <= self.fill <= 255:
                raise InvalidAttackSpec("crop_fill needs a fill value in [0, 255]")
        elif self.kind == "quantize":
            if not isinstance(self.levels, int) or not 2 <= self.levels <= 256:
                raise InvalidAttackSpec("quantize needs levels in [2, 256]")


def apply_attack(image: GrayImage, spec: AttackSpec) -> GrayImage:
    spec.validate()
    p = image.pixels.astype(np.int64)

    if spec.kind == "identity":
        return GrayImage(p)

    if spec.kind == "uniform_noise":
        a = spec.amplitude
        draws = splitmix64_stream(spec.seed, p.size) % np.uint64(2 * a + 1)
        delta = draws.astype(np.int64).reshape(p.shape) - a
        return GrayImage(np.clip(p + delta, 0, 255))

    if spec.kind == "salt_pepper":
        return GrayImage(_salt_pepper(p, spec.density, spec.seed))

    if spec.kind == "crop_fill":
        x, y, w, h = spec.rect
        if x + w > image.width or y + h > image.height:
            raise OutOfBounds(
                f"rect {spec.rect} does not fit in a {image.width}x{image.height} image"
            )
        p[y : y + h, x : x + w] = spec.fill
        return GrayImage(p)

    step = 256 // spec.levels
    return GrayImage(p // step * step)


def _salt_pepper(p: np.ndarray, density: float, seed: int) -> np.ndarray:
    # Each pixel draws once to decide, and once more only if hit, so the
    # stream position depends on earlier outcomes. At most 2 draws per pixel.
    stream = splitmix64_stream(seed, 2 * p.size).tolist()
    flat = p.ravel().copy()
    limit = density * 2**32
    i = 0
    for j in range(flat.size):
        u = stream[i] & 0xFFFFFFFF
        i += 1
        if u < limit:
            flat[j] = 255 if stream[i] & 1 else 0
            i += 1
    return flat.reshape(p.shape)
