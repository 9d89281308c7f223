"""RMIK1: the plain-text key file that travels with a watermarked image.

    RMIK1
    <width> <height>
    seed | explicit
    <seed>                      (seed mode)
    <row of width entries> ...  (explicit mode, height lines)
"""

from __future__ import annotations

import re

from .errors import (
    BadMagic,
    KeyEntryOutOfRange,
    KeyFileError,
    MalformedDimensions,
    MalformedSeed,
    UnknownMode,
    WrongEntryCount,
)
from .rmi import KEY_MAX, MASK64, RmiKey, generate_key, key_from_matrix

MAGIC = "RMIK1"
_UINT = re.compile(r"(0|[1-9][0-9]*)\Z")
_DIMS = re.compile(r"([1-9][0-9]*) ([1-9][0-9]*)\Z")


def serialize_key(key: RmiKey) -> bytes:
    lines = [MAGIC, f"{key.width} {key.height}"]
    if key.is_seeded:
        lines += ["seed", str(key.seed)]
    else:
        lines.append("explicit")
        lines += [" ".join(map(str, row)) for row in key.entries.tolist()]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_key(data: bytes) -> RmiKey:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        raise KeyFileError("key file is not ASCII text") from e
    text = text.replace("\r\n", "\n")
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")

    if lines[0] != MAGIC:
        raise BadMagic(f"bad magic {lines[0][:16]!r}, expected {MAGIC}")
    if len(lines) < 3:
        raise KeyFileError("key file ends before the mode line")
    m = _DIMS.match(lines[1])
    if not m:
        raise MalformedDimensions(f"expected '<width> <height>', got {lines[1]!r}")
    width, height = int(m[1]), int(m[2])
    mode, body = lines[2], lines[3:]

    if mode == "seed":
        if len(body) != 1 or not _UINT.match(body[0]) or int(body[0]) > MASK64:
            raise MalformedSeed("seed mode needs exactly one unsigned 64-bit decimal line")
        return generate_key(width, height, int(body[0]))

    if mode == "explicit":
        if len(body) != height:
            raise WrongEntryCount(f"expected {height} rows, found {len(body)}")
        entries = []
        for r, line in enumerate(body):
            row = line.split(" ")
            if len(row) != width:
                raise WrongEntryCount(f"row {r} has {len(row)} entries, expected {width}")
            for tok in row:
                if re.fullmatch(r"-?[0-9]+", tok) is None:
                    raise KeyFileError(f"row {r}: non-integer entry {tok!r}")
                v = int(tok)
                if not 0 <= v <= KEY_MAX:
                    raise KeyEntryOutOfRange(f"row {r}: entry {v} outside [0, {KEY_MAX}]")
                entries.append(v)
        return key_from_matrix(entries, width, height)

    raise UnknownMode(f"unknown key mode {mode!r}")


def read_key(path) -> RmiKey:
    with open(path, "rb") as f:
        return parse_key(f.read())


def write_key(path, key: RmiKey) -> None:
    with open(path, "wb") as f:
        f.write(serialize_key(key))
