"""Random matrix image (RMI) keys: entries in [0, 10] drawn from SplitMix64."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InvalidDimensions, KeyEntryOutOfRange, LengthMismatch

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

KEY_MAX = 10
KEY_LEVELS = KEY_MAX + 1


class PrngState(NamedTuple):
    state: int


def prng_next(state: PrngState) -> tuple[int, PrngState]:
    """One SplitMix64 step. Returns ``(value, next_state)``."""
    s = (state.state + GOLDEN_GAMMA) & MASK64
    z = s
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31), PrngState(s)


def splitmix64_stream(seed: int, n: int, start: int = 0) -> np.ndarray:
    """Values ``start .. start+n-1`` of the SplitMix64 stream seeded by ``seed``.

    SplitMix64's state after k steps is ``seed + k * gamma`` (mod 2**64), so the
    stream can be computed in bulk without threading state through a loop.
    Matches repeated :func:`prng_next` calls exactly.
    """
    k = np.arange(start + 1, start + n + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + k * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


class RmiKey:
    """Secret watermark matrix. ``seed`` is None for explicit keys."""

    __slots__ = ("_entries", "seed")

    def __init__(self, entries, seed: int | None = None):
        arr = np.asarray(entries)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidDimensions(f"key must be a non-empty 2-D grid, got shape {arr.shape}")
        if arr.dtype.kind not in "iub":
            raise KeyEntryOutOfRange(f"key entries must be integers, got {arr.dtype}")
        if arr.min() < 0 or arr.max() > KEY_MAX:
            bad = arr[(arr < 0) | (arr > KEY_MAX)].flat[0]
            raise KeyEntryOutOfRange(f"key entry {int(bad)} outside [0, {KEY_MAX}]")
        arr = arr.astype(np.uint8, copy=True)
        arr.setflags(write=False)
        self._entries = arr
        self.seed = seed

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def width(self) -> int:
        return self._entries.shape[1]

    @property
    def height(self) -> int:
        return self._entries.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self._entries.shape

    @property
    def is_seeded(self) -> bool:
        return self.seed is not None

    def flat(self) -> list[int]:
        return self._entries.ravel().tolist()

    def as_explicit(self) -> RmiKey:
        return RmiKey(self._entries)

    def __eq__(self, other):
        if not isinstance(other, RmiKey):
            return NotImplemented
        return (
            self.seed == other.seed
            and self.shape == other.shape
            and np.array_equal(self._entries, other._entries)
        )

    def __hash__(self):
        return hash((self.seed, self.shape, self._entries.tobytes()))

    def __repr__(self):
        kind = f"seed={self.seed}" if self.is_seeded else "explicit"
        return f"RmiKey(width={self.width}, height={self.height}, {kind})"


def generate_key(width: int, height: int, seed: int) -> RmiKey:
    """Fill a width x height key row-major with ``stream value mod 11``."""
    if width < 1 or height < 1:
        raise InvalidDimensions(f"key dimensions must be positive, got {width}x{height}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    values = splitmix64_stream(seed, width * height) % np.uint64(KEY_LEVELS)
    return RmiKey(values.reshape(height, width), seed=seed)


def key_from_matrix(entries, width: int, height: int) -> RmiKey:
    flat = np.asarray(entries)
    if width < 1 or height < 1:
        raise InvalidDimensions(f"key dimensions must be positive, got {width}x{height}")
    if flat.size != width * height:
        raise LengthMismatch(f"{flat.size} entries given for a {width}x{height} key")
    return RmiKey(flat.reshape(height, width))
