"""Command-line front end: ``ffwm <command> ...``.

Exit codes: 0 success (or CLEAN), 1 tampering detected, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .blockwise import GrayImage, blockwise_transform
from .errors import FiniteFieldError, PgmFormatError
from .gf_core import PrimeField, find_unimodular_zeta, find_zeta
from .pgm import read_pgm, write_pgm
from .transforms import TransformKind, ZetaConfig
from .watermark import (
    WatermarkImage,
    authenticate,
    bernoulli_tamper,
    embed,
    extract,
    psnr,
)

EXIT_OK = 0
EXIT_TAMPERED = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def _write(path: str, img: GrayImage, ascii_: bool) -> None:
    # wide results go out as 16-bit, never clamped
    maxval = 65535 if img.maxval > 255 else img.maxval
    write_pgm(path, img, binary=not ascii_, maxval=maxval)


def _config(args) -> ZetaConfig:
    return ZetaConfig.from_values(args.p, args.zeta, args.kind, args.block)


def _load_watermark(args, cfg: ZetaConfig) -> WatermarkImage:
    img = read_pgm(args.watermark)
    if not args.reduce and img.pixels.max() >= cfg.p:
        raise CliError(
            f"watermark {args.watermark} has pixel {int(img.pixels.max())} >= p={cfg.p}; "
            "pass --reduce to map it into GF(p)"
        )
    return WatermarkImage.from_image(img, cfg.p, reduce=args.reduce, placement=args.placement)


def cmd_find_zeta(args) -> int:
    f = PrimeField(args.p)
    found = find_unimodular_zeta(f, args.order) if args.unimodular_only else find_zeta(f, args.order)
    for z in found:
        print(z)
    return EXIT_OK


def cmd_transform(args) -> int:
    cfg = _config(args)
    img = read_pgm(args.inp)
    direction = "inverse" if args.inverse else "forward"
    out = blockwise_transform(img, cfg, direction, pad=args.pad)
    _write(args.out, out, args.ascii)
    return EXIT_OK


def cmd_embed(args) -> int:
    cfg = _config(args)
    img = read_pgm(args.inp)
    wm = _load_watermark(args, cfg)
    _write(args.out, embed(img, wm, cfg, pad=args.pad), args.ascii)
    return EXIT_OK


def cmd_extract(args) -> int:
    cfg = _config(args)
    marked = read_pgm(args.inp)
    original = read_pgm(args.reference)
    wm = extract(original, marked, cfg, pad=args.pad)
    _write(args.out, wm.to_image(), args.ascii)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    data = read_pgm(args.inp)
    signature = read_pgm(args.signature)
    wm_ref = _load_watermark(args, cfg)
    extracted, tmap = authenticate(data, signature, wm_ref, cfg, pad=args.pad)
    _write(args.out, extracted.to_image(), args.ascii)
    mask_path = args.mask or str(Path(args.out).with_name(Path(args.out).stem + "_mask.pgm"))
    _write(mask_path, tmap.to_mask(255), args.ascii)
    if tmap.any_tampered:
        print(f"TAMPERED: {tmap.count} block(s)")
        return EXIT_TAMPERED
    print("CLEAN")
    return EXIT_OK


def cmd_tamper(args) -> int:
    img = read_pgm(args.inp)
    out, mask = bernoulli_tamper(img, args.bernoulli, args.seed)
    _write(args.out, out, args.ascii)
    print(f"incremented {int(mask.sum())} pixel(s)")
    return EXIT_OK


def cmd_psnr(args) -> int:
    a = read_pgm(args.a)
    b = read_pgm(args.b)
    value = psnr(a, b)
    print("inf" if math.isinf(value) else f"{value:.4f}")
    return EXIT_OK


def _add_transform_options(sp: argparse.ArgumentParser, watermark: bool = False) -> None:
    sp.add_argument("--p", type=int, required=True, help="prime modulus")
    sp.add_argument("--zeta", required=True, help='generator as "a+bj"')
    sp.add_argument("--kind", choices=[k.value for k in TransformKind], required=True)
    sp.add_argument("--block", type=int, help="blocklength N (checked against zeta)")
    sp.add_argument("--pad", action="store_true",
                    help="zero-pad images whose sides are not multiples of N")
    sp.add_argument("--ascii", action="store_true", help="write P2 instead of P5")
    if watermark:
        sp.add_argument("--watermark", required=True, help="watermark PGM")
        sp.add_argument("--reduce", action="store_true",
                        help="reduce watermark pixels mod p instead of rejecting them")
        sp.add_argument("--placement", choices=["tile", "top-left"], default="tile")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffwm",
        description="Finite-field transforms and fragile watermarking on PGM images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("find-zeta", help="list elements of GI(p) with a given order")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--unimodular-only", action=argparse.BooleanOptionalAction, default=True)
    sp.set_defaults(func=cmd_find_zeta)

    sp = sub.add_parser("transform", help="blockwise 2-D transform of a residue image")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--inverse", action="store_true")
    _add_transform_options(sp)
    sp.set_defaults(func=cmd_transform)

    for name, text in (("embed", "embed a fragile watermark"),
                       ("sign", "generate signature data for a raw image")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--in", dest="inp", required=True)
        sp.add_argument("--out", required=True)
        _add_transform_options(sp, watermark=True)
        sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("extract", help="recover a watermark from marked and original images")
    sp.add_argument("--in", dest="inp", required=True, help="watermarked image")
    sp.add_argument("--reference", required=True, help="original image")
    sp.add_argument("--out", required=True)
    _add_transform_options(sp)
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("verify", help="authenticate raw data against its signature")
    sp.add_argument("--in", dest="inp", required=True, help="raw data to check")
    sp.add_argument("--signature", required=True)
    sp.add_argument("--out", required=True, help="extracted watermark PGM")
    sp.add_argument("--mask", help="tamper mask PGM (default: <out>_mask.pgm)")
    _add_transform_options(sp, watermark=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tamper", help="increment pixels with Bernoulli probability")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--bernoulli", type=float, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--ascii", action="store_true")
    sp.set_defaults(func=cmd_tamper)

    sp = sub.add_parser("psnr", help="PSNR in dB between two images")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_psnr)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FiniteFieldError, PgmFormatError, OSError, ValueError) as exc:
        print(f"ffwm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
