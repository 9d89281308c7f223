"""Command-line interface: ``rmiwm <command> [flags]``.

Exit codes: 0 success, 1 watermark absent (or demo mismatch), 2 usage or
parse error, 3 precondition violation, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import golden
from .attacks import KINDS, AttackSpec, apply_attack
from .errors import FormatError, PreconditionError, RmiError
from .image_core import GrayImage, read_pgm, write_pgm
from .keyfile import read_key, write_key
from .metrics import compare
from .rmi import MASK64, RmiKey, generate_key
from .watermark import DEFAULT_THRESHOLD, embed, extract_watermark, recover_original, verify

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4


def _positive_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonneg_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _seed(s):
    v = _nonneg_int(s)
    if v > MASK64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _fraction(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}")
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {v}")
    return v


def _rect(s):
    parts = s.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("rect must be x,y,w,h")
    return tuple(_nonneg_int(p) for p in parts)


def cmd_gen_key(args):
    key = generate_key(args.width, args.height, args.seed)
    if args.explicit:
        key = key.as_explicit()
    write_key(args.out, key)
    return EXIT_OK


def cmd_embed(args):
    host = read_pgm(args.host)
    key = read_key(args.key)
    write_pgm(args.out, embed(host, key))
    return EXIT_OK


def cmd_recover(args):
    marked = read_pgm(args.watermarked)
    key = read_key(args.key)
    write_pgm(args.out, recover_original(marked, key))
    return EXIT_OK


def cmd_verify(args):
    report = verify(
        read_pgm(args.watermarked), read_pgm(args.original), read_key(args.key), args.threshold
    )
    print(f"match_ratio={report.match_ratio:.6f}")
    print(f"ncc={report.ncc:.6f}")
    print(f"decision={report.decision}")
    return EXIT_OK if report.present else EXIT_ABSENT


_ATTACK_PARAMS = {
    "identity": set(),
    "uniform_noise": {"amplitude", "seed"},
    "salt_pepper": {"density", "seed"},
    "crop_fill": {"rect", "fill"},
    "quantize": {"levels"},
}


def attack_spec_from_args(args) -> AttackSpec:
    given = {
        name
        for name in ("amplitude", "density", "rect", "fill", "levels", "seed")
        if getattr(args, name) is not None
    }
    extra = given - _ATTACK_PARAMS[args.kind]
    if extra:
        flags = ", ".join("--" + n for n in sorted(extra))
        raise FormatError(f"{flags} not applicable to --kind {args.kind}")
    spec = AttackSpec(
        kind=args.kind,
        amplitude=args.amplitude,
        density=args.density,
        rect=args.rect,
        fill=args.fill,
        levels=args.levels,
        seed=args.seed or 0,
    )
    spec.validate()
    return spec


def cmd_attack(args):
    spec = attack_spec_from_args(args)
    write_pgm(args.out, apply_attack(read_pgm(args.inp), spec))
    return EXIT_OK


def cmd_metrics(args):
    sys.stdout.write(compare(read_pgm(args.a), read_pgm(args.b)).to_text())
    return EXIT_OK


def _print_matrix(title, rows, out):
    print(title, file=out)
    for row in rows:
        print("\t".join(str(v) for v in row), file=out)
    print(file=out)


def run_demo(host=None, key=None, expected=None, out=None) -> bool:
    """Embed the worked-example key into the worked-example block and check
    every entry against the published watermarked block."""
    host = golden.HOST if host is None else host
    key = golden.KEY if key is None else key
    expected = golden.WATERMARKED if expected is None else expected
    out = out or sys.stdout
    host_img = GrayImage(host)
    rmi = RmiKey(key)
    marked = embed(host_img, rmi)
    want = np.asarray(expected)

    _print_matrix("host (8x8 block):", host, out)
    _print_matrix("key (8x8 RMI):", key, out)
    _print_matrix("watermarked (host + key):", marked.pixels.tolist(), out)

    matches = int(np.count_nonzero(marked.pixels == want))
    recovered_ok = recover_original(GrayImage(want), rmi) == host_img
    extracted_ok = np.array_equal(extract_watermark(GrayImage(want), host_img).values, rmi.entries)
    print(f"embed matches expected: {matches}/{want.size}", file=out)
    print(f"recover original from expected: {'ok' if recovered_ok else 'MISMATCH'}", file=out)
    print(f"extract watermark from expected: {'ok' if extracted_ok else 'MISMATCH'}", file=out)

    passed = matches == want.size and recovered_ok and extracted_ok
    print("PASS" if passed else "FAIL", file=out)
    return passed


def cmd_demo_paper(args):
    try:
        return EXIT_OK if run_demo() else EXIT_ABSENT
    except RmiError as e:
        print(f"error: {e}", file=sys.stderr)
        print("FAIL")
        return EXIT_ABSENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmiwm", description="Random matrix image watermarking")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-key", help="generate a seeded RMI key file")
    p.add_argument("--width", type=_positive_int, required=True)
    p.add_argument("--height", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--explicit", action="store_true", help="write every entry instead of the seed")
    p.set_defaults(func=cmd_gen_key)

    p = sub.add_parser("embed", help="add a key to a host image")
    p.add_argument("--host", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("recover", help="subtract a key to recover the original image")
    p.add_argument("--watermarked", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("verify", help="check a watermarked image against original and key")
    p.add_argument("--watermarked", required=True)
    p.add_argument("--original", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--threshold", type=_fraction, default=DEFAULT_THRESHOLD)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("attack", help="apply a deterministic corruption")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--amplitude", type=_nonneg_int)
    p.add_argument("--density", type=_fraction)
    p.add_argument("--rect", type=_rect)
    p.add_argument("--fill", type=_nonneg_int)
    p.add_argument("--levels", type=_nonneg_int)
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("metrics", help="MSE / PSNR / NCC between two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("demo-paper", help="reproduce the 8x8 worked example")
    p.set_defaults(func=cmd_demo_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
