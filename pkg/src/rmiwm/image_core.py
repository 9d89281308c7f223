"""Grayscale image value type and strict PGM (P5/P2, maxval 255) I/O."""

from __future__ import annotations

import numpy as np

from .errors import (
    InvalidDimensions,
    MalformedHeader,
    MalformedPayload,
    OutOfBounds,
    PixelValueOutOfRange,
    TruncatedPayload,
)

MAXVAL = 255


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class GrayImage:
    """An immutable width x height grid of 8-bit gray values.

    ``pixels`` is a read-only ``uint8`` array of shape ``(height, width)``,
    so ``pixels[y, x]`` is the value at column ``x`` of row ``y``.
    """

    __slots__ = ("_pixels",)

    def __init__(self, pixels):
        arr = np.asarray(pixels)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidDimensions(f"image must be a non-empty 2-D grid, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.dtype.kind not in "iub":
                raise PixelValueOutOfRange(f"pixel values must be integers, got {arr.dtype}")
            if arr.size and (arr.min() < 0 or arr.max() > MAXVAL):
                raise PixelValueOutOfRange("pixel values must lie in [0, 255]")
        self._pixels = _frozen(arr.astype(np.uint8, copy=True))

    @classmethod
    def from_flat(cls, width: int, height: int, pixels) -> GrayImage:
        flat = np.asarray(pixels)
        if width < 1 or height < 1:
            raise InvalidDimensions(f"dimensions must be positive, got {width}x{height}")
        if flat.size != width * height:
            raise InvalidDimensions(
                f"{flat.size} pixels given for a {width}x{height} image"
            )
        return cls(flat.reshape(height, width))

    @property
    def pixels(self) -> np.ndarray:
        return self._pixels

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self._pixels.shape

    def flat(self) -> list[int]:
        """Pixel values in row-major order."""
        return self._pixels.ravel().tolist()

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._pixels, other._pixels)

    def __hash__(self):
        return hash((self.shape, self._pixels.tobytes()))

    def __repr__(self):
        return f"GrayImage(width={self.width}, height={self.height})"


# P5/P2 header: magic, then three integers separated by whitespace, with
# '#' comments running to end of line allowed between tokens.
_WS = b" \t\r\n\v\f"


def _header_tokens(data: bytes, count: int, pos: int):
    tokens = []
    while len(tokens) < count:
        if pos >= len(data):
            raise MalformedHeader("header ends before width, height and maxval")
        c = data[pos : pos + 1]
        if c in (b" ", b"\t", b"\r", b"\n", b"\v", b"\f"):
            pos += 1
            continue
        if c == b"#":
            nl = data.find(b"\n", pos)
            if nl < 0:
                raise MalformedHeader("unterminated comment in header")
            pos = nl + 1
            continue
        start = pos
        while pos < len(data) and data[pos] not in _WS and data[pos : pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _header_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise MalformedHeader(f"{what} is not a non-negative integer: {token!r}")
    return int(token)


def load_pgm(data: bytes) -> GrayImage:
    """Parse a binary (P5) or ASCII (P2) PGM with maxval 255.

    The pixel count must be exactly width x height; short and over-long
    payloads are both rejected.
    """
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise MalformedHeader(f"bad magic {magic!r}, expected P5 or P2")
    if len(data) > 2 and data[2] not in _WS and data[2:3] != b"#":
        raise MalformedHeader("magic must be followed by whitespace")

    tokens, pos = _header_tokens(data, 3, 2)
    width = _header_int(tokens[0], "width")
    height = _header_int(tokens[1], "height")
    maxval = _header_int(tokens[2], "maxval")
    if width < 1 or height < 1:
        raise MalformedHeader(f"dimensions must be positive, got {width}x{height}")
    if maxval != MAXVAL:
        raise MalformedHeader(f"maxval must be 255, got {maxval}")
    n = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos] not in _WS:
            raise TruncatedPayload("missing whitespace before binary raster")
        raster = data[pos + 1 :]
        if len(raster) < n:
            raise TruncatedPayload(f"expected {n} pixel bytes, found {len(raster)}")
        if len(raster) > n:
            raise MalformedPayload(f"expected {n} pixel bytes, found {len(raster)} (trailing data)")
        values = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = data[pos:]
        if b"#" in body:
            raise MalformedPayload("comments are only allowed in the header")
        toks = body.split()
        if len(toks) < n:
            raise TruncatedPayload(f"expected {n} pixel values, found {len(toks)}")
        if len(toks) > n:
            raise MalformedPayload(f"expected {n} pixel values, found {len(toks)}")
        if not all(t.isdigit() for t in toks):
            raise MalformedPayload("ASCII raster contains a non-integer token")
        ints = [int(t) for t in toks]
        if max(ints) > MAXVAL:
            raise PixelValueOutOfRange(f"pixel value {max(ints)} exceeds maxval 255")
        values = np.array(ints, dtype=np.uint8)

    return GrayImage(values.reshape(height, width))


def save_pgm(image: GrayImage, variant: str = "binary") -> bytes:
    header = f"{image.width} {image.height}\n{MAXVAL}\n".encode("ascii")
    if variant == "binary":
        return b"P5\n" + header + image.pixels.tobytes()
    if variant == "ascii":
        rows = "\n".join(" ".join(map(str, row)) for row in image.pixels.tolist())
        return b"P2\n" + header + rows.encode("ascii") + b"\n"
    raise ValueError(f"unknown PGM variant {variant!r}")


def read_pgm(path) -> GrayImage:
    with open(path, "rb") as f:
        return load_pgm(f.read())


def write_pgm(path, image: GrayImage, variant: str = "binary") -> None:
    with open(path, "wb") as f:
        f.write(save_pgm(image, variant))


def extract_block(image: GrayImage, x: int, y: int, w: int, h: int) -> GrayImage:
    if min(x, y) < 0 or w < 1 or h < 1 or x + w > image.width or y + h > image.height:
        raise OutOfBounds(
            f"block ({x}, {y}, {w}, {h}) does not fit in a {image.width}x{image.height} image"
        )
    return GrayImage(image.pixels[y : y + h, x : x + w])
