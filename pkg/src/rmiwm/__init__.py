"""Random matrix image (RMI) additive watermarking for grayscale images."""

from .attacks import AttackSpec, apply_attack
from .errors import RmiError
from .image_core import GrayImage, extract_block, load_pgm, read_pgm, save_pgm, write_pgm
from .keyfile import parse_key, read_key, serialize_key, write_key
from .metrics import MetricsReport, compare, mse, ncc, psnr
from .rmi import PrngState, RmiKey, generate_key, key_from_matrix, prng_next
from .watermark import (
    DiffMatrix,
    VerificationReport,
    embed,
    extract_watermark,
    recover_original,
    verify,
)

__all__ = [
    "AttackSpec",
    "DiffMatrix",
    "GrayImage",
    "MetricsReport",
    "PrngState",
    "RmiError",
    "RmiKey",
    "VerificationReport",
    "apply_attack",
    "compare",
    "embed",
    "extract_block",
    "extract_watermark",
    "generate_key",
    "key_from_matrix",
    "load_pgm",
    "mse",
    "ncc",
    "parse_key",
    "prng_next",
    "psnr",
    "read_key",
    "read_pgm",
    "recover_original",
    "save_pgm",
    "serialize_key",
    "verify",
    "write_key",
    "write_pgm",
]
