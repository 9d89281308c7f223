"""MSE, PSNR and uncentered normalized cross-correlation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, LengthMismatch

PEAK = 255


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    psnr_db: float  # math.inf when the images are identical
    ncc: float

    def to_text(self) -> str:
        return f"mse={_fmt(self.mse)}\npsnr_db={_fmt(self.psnr_db)}\nncc={_fmt(self.ncc)}\n"


def _fmt(v: float) -> str:
    return "inf" if math.isinf(v) else f"{v:.10g}"


def _sse(a, b) -> tuple[int, int]:
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}")
    d = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return int((d * d).sum()), d.size


def mse(a, b) -> float:
    sse, n = _sse(a, b)
    return sse / n


def psnr(a, b) -> float:
    sse, n = _sse(a, b)
    if sse == 0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK * n / sse)


def ncc(a, b) -> float:
    """sum(a*b) / sqrt(sum(a^2) * sum(b^2)) on raw values.

    Defined as 1 when both inputs are all zero and 0 when exactly one is.
    """
    a = np.asarray(a, dtype=np.int64).ravel()
    b = np.asarray(b, dtype=np.int64).ravel()
    if a.size != b.size:
        raise LengthMismatch(f"length mismatch: {a.size} vs {b.size}")
    if a.size == 0:
        raise LengthMismatch("ncc of empty sequences is undefined")
    saa = int((a * a).sum())
    sbb = int((b * b).sum())
    if saa == 0 or sbb == 0:
        return 1.0 if saa == sbb else 0.0
    prod = saa * sbb
    root = math.isqrt(prod)
    sab = int((a * b).sum())
    r = sab / root if root * root == prod else sab / math.sqrt(prod)
    return max(-1.0, min(1.0, r))


def compare(a, b) -> MetricsReport:
    return MetricsReport(mse=mse(a, b), psnr_db=psnr(a, b), ncc=ncc(a.pixels, b.pixels))
