"""``coinfrac`` command line.

Exit codes: 0 success, 2 usage or input error, 3 resource cap exceeded,
4 I/O failure.
"""
from __future__ import annotations

import argparse
import sys

from .coins import CoinSet, GeometricFamilySpec, make_geometric
from .enumeration import DEFAULT_CAP, enumerate_divisions
from .errors import CoinfracError, DomainError, ResourceLimitError
from .figures import FIGURES, reproduce_figures
from .ifs import construct_inductive
from .render import MODES, RenderSpec, write_image
from .reports import analyze, convergence, format_convergence, format_report
from .serialization import from_csv, read_csv, to_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_IO = 4


def _family(text: str) -> GeometricFamilySpec:
    try:
        return GeometricFamilySpec.parse(text)
    except CoinfracError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ratio_family(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"family must be r,c or r,c,m, got {text!r}")
    try:
        spec = GeometricFamilySpec(int(parts[0]), int(parts[1]), 0)
    except (ValueError, CoinfracError) as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return spec.r, spec.c


def _coins(text: str) -> CoinSet:
    try:
        return CoinSet.parse(text)
    except CoinfracError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinfrac", description="Coin-division fractals: generate, render and analyze."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write the division set of a coin set as CSV")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", type=_family, metavar="R,C,M")
    source.add_argument("--coins", type=_coins, metavar="V:C,...")
    gen.add_argument("--players", type=_positive, default=3)
    gen.add_argument("--method", choices=("enumerate", "inductive"), default="enumerate")
    gen.add_argument("--out", default="-", help="output path, '-' for stdout")
    gen.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    ren = sub.add_parser("render", help="rasterize a CSV division set to PGM (or SVG)")
    ren.add_argument("csv", help="input CSV, '-' for stdin")
    ren.add_argument("--out", required=True, help="output .pgm or .svg path")
    ren.add_argument("--size", default="512x512", metavar="WxH")
    ren.add_argument("--mode", choices=MODES, default="binary")
    ren.add_argument("--margin", type=float, default=0.05)

    ana = sub.add_parser("analyze", help="dimension, class, completeness and counts")
    ana.add_argument("--family", type=_family, required=True, metavar="R,C,M")
    ana.add_argument("--players", type=_positive, default=3)
    ana.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    con = sub.add_parser("convergence", help="Hausdorff distances between consecutive scaled sets")
    con.add_argument("--family", type=_ratio_family, required=True, metavar="R,C[,M]",
                     help="m, if given, is ignored")
    con.add_argument("--players", type=_positive, default=3)
    con.add_argument("--m-max", type=int, default=8)
    con.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    fig = sub.add_parser("figures", help="render the reference figures as PGM files")
    fig.add_argument("--out", required=True, help="output directory")
    fig.add_argument("names", nargs="*", metavar="NAME",
                     help="subset of: " + ", ".join(f.name for f in FIGURES))
    return parser


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "wb") as fh:
            fh.write(text.encode("utf-8"))


def _run(args) -> int:
    if args.command == "generate":
        if args.family is not None:
            if args.method == "inductive":
                divisions = construct_inductive(args.family, args.players, cap=args.cap)
            else:
                divisions = enumerate_divisions(make_geometric(args.family), args.players, cap=args.cap)
        else:
            if args.method == "inductive":
                raise DomainError("--method inductive needs --family")
            divisions = enumerate_divisions(args.coins, args.players, cap=args.cap)
        _emit(to_csv(divisions), args.out)
    elif args.command == "render":
        spec = RenderSpec.from_size(args.size, margin=args.margin, mode=args.mode)
        divisions = from_csv(sys.stdin.read()) if args.csv == "-" else read_csv(args.csv)
        write_image(divisions, spec, args.out)
    elif args.command == "analyze":
        sys.stdout.write(format_report(analyze(args.family, args.players, cap=args.cap)))
    elif args.command == "convergence":
        r, c = args.family
        steps = convergence(r, c, args.players, args.m_max, cap=args.cap)
        sys.stdout.write(format_convergence(steps))
    elif args.command == "figures":
        unknown = set(args.names) - {f.name for f in FIGURES}
        if unknown:
            raise DomainError(f"unknown figure(s): {', '.join(sorted(unknown))}")
        for name, path in reproduce_figures(args.out, args.names or None).items():
            sys.stdout.write(f"{name}: {path}\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ResourceLimitError as exc:
        print(f"coinfrac: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CoinfracError as exc:
        print(f"coinfrac: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"coinfrac: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
