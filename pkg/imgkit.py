#!/usr/bin/env python3
"""
imgkit CLI Tool

Runs the panorama stitching and coins segmentation pipelines, applies single
operations to PNM images and prints image summaries.

Exit codes: 0 success, 1 usage or configuration error, 2 I/O or file format
error, 3 processing failure (including "no consensus" from RANSAC).
"""

import argparse
import logging
import sys

from src.core import FormatError, ImageKitError
from src.service import (
    CoinsDemo,
    ConfigError,
    ImageInspector,
    OperationRunner,
    PanoramaStitcher,
    UnknownOperationError,
    load_settings,
    override,
)
from src.service.operation_runner import USAGE as OPERATION_USAGE

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_PROCESSING = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors reported as exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _crop(text: str):
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        values = ()
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected R0,R1,C0,C1, got '{text}'")
    return values


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="imgkit", description="imgkit image processing CLI Tool")
    parser.add_argument("--verbose", action="store_true", help="Log pipeline details to standard error")
    parser.add_argument("--config", metavar="FILE", help="JSON settings file (see config.json)")
    parser.add_argument("--dry-run", action="store_true",
                        help="Show what would be written without touching the disk")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    stitch = commands.add_parser("stitch", help="Register IMAGE1 onto IMAGE0 and blend both")
    stitch.add_argument("image0", help="Reference frame (PGM/PPM)")
    stitch.add_argument("image1", help="Frame warped onto the reference (PGM/PPM)")
    stitch.add_argument("output", help="Output PPM mosaic")
    stitch.add_argument("--crop", type=_crop, metavar="R0,R1,C0,C1", help="Crop both frames first")
    stitch.add_argument("--scale", type=float, help="Working resolution factor (default 0.25)")
    stitch.add_argument("--keypoints", type=int, help="ORB keypoints per frame (default 1000)")
    stitch.add_argument("--fast-threshold", type=float, help="FAST threshold on [0, 1] (default 0.05)")
    stitch.add_argument("--min-samples", type=int, help="RANSAC sample size (default 4)")
    stitch.add_argument("--residual-threshold", type=float, help="RANSAC inlier distance (default 2)")
    stitch.add_argument("--max-trials", type=int, help="RANSAC trials (default 100)")
    stitch.add_argument("--seed", type=int, help="RANSAC seed (default 0)")
    stitch.add_argument("--debug-dir", metavar="DIR", help="Write keypoints, matches and model here")
    stitch.add_argument("--float-clip", action=argparse.BooleanOptionalAction, default=None,
                        help="Clamp out-of-range values when writing (default on)")

    coins = commands.add_parser("coins-demo", help="Run the coins segmentation walkthrough")
    coins.add_argument("image", help="Input PGM (PPM is converted to grey)")
    coins.add_argument("outdir", help="Directory for the step outputs")
    coins.add_argument("--block-size", type=int, help="Adaptive threshold block (default 95)")
    coins.add_argument("--offset", type=float, help="Adaptive threshold offset (default -15)")
    coins.add_argument("--min-distance", type=int, help="Peak separation (default 20)")
    coins.add_argument("--sigma", type=float, help="Canny smoothing (default 3)")
    coins.add_argument("--low-threshold", type=float, help="Canny low threshold (default 10)")
    coins.add_argument("--high-threshold", type=float, help="Canny high threshold (default 80)")

    apply = commands.add_parser("apply", help="Apply one operation", epilog=OPERATION_USAGE)
    apply.add_argument("operation", help="Operation, e.g. gaussian:2 or canny:3,10,80")
    apply.add_argument("input", help="Input PGM/PPM")
    apply.add_argument("output", help="Output PGM/PPM")

    info = commands.add_parser("info", help="Print 'width height channels kind min max'")
    info.add_argument("input", help="Input PGM/PPM")
    return parser


def cmd_stitch(args, settings) -> int:
    stitch_settings = override(settings.stitch, vars(args))
    stitcher = PanoramaStitcher(stitch_settings, args.dry_run)
    result = stitcher.run(args.image0, args.image1, args.output, args.debug_dir)
    print(f"✓ Stitched {args.image1} onto {args.image0}: "
          f"{result.ransac.inlier_count}/{len(result.matches)} inliers -> {args.output}")
    return EXIT_OK


def cmd_coins_demo(args, settings) -> int:
    coins_settings = override(settings.coins, vars(args))
    report = CoinsDemo(coins_settings, args.dry_run).run(args.image, args.outdir)
    print(f"✓ Coins demo: {len(report.peaks)} peaks, {len(report.regions)} regions -> {args.outdir}")
    return EXIT_OK


def cmd_apply(args, settings) -> int:
    OperationRunner(args.dry_run).run(args.operation, args.input, args.output)
    print(f"✓ Applied {args.operation}: {args.input} -> {args.output}")
    return EXIT_OK


def cmd_info(args, settings) -> int:
    print(ImageInspector().describe(args.input))
    return EXIT_OK


COMMANDS = {
    "stitch": cmd_stitch,
    "coins-demo": cmd_coins_demo,
    "apply": cmd_apply,
    "info": cmd_info,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        settings = load_settings(args.config)
        return COMMANDS[args.command](args, settings)
    except (ConfigError, UnknownOperationError) as e:
        print(f"✗ {e}", file=sys.stderr)
        if isinstance(e, UnknownOperationError):
            print(OPERATION_USAGE, file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError) as e:
        print(f"✗ I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except ImageKitError as e:
        print(f"✗ {args.command} failed: {e}", file=sys.stderr)
        return EXIT_PROCESSING


if __name__ == "__main__":
    sys.exit(main())
