"""Command line surface: build, qml, tags, verify, render.

Exit codes: 0 success, 1 suite failure, 2 argument or input errors.  The
environment variable LAMINA_SEED overrides --seed for the verify command.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .chords import Chord
from .cubic_tags import FullPortrait, mixed_tag, tags_relation
from .formats import lamination_text, parse_lamination, parse_portrait, tag_report
from .render import RenderSpec, render_svg
from .quad_minor import qml_enumerate
from .lamination import FiniteLamination, InconsistentPortrait
from .suites import SUITES, run_suite

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lamina", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="pullback lamination from a portrait file")
    p_build.add_argument("--portrait", required=True)
    p_build.add_argument("--depth", type=int, required=True)
    p_build.add_argument("--out", default=None)

    p_qml = sub.add_parser("qml", help="enumerate the quadratic minor chords")
    p_qml.add_argument("--period", type=int, required=True)
    p_qml.add_argument("--out", default=None)
    p_qml.add_argument("--svg", default=None)
    p_qml.add_argument("--image-reading", action="store_true",
                       help="emit doubling images of the passing chords instead")

    p_tags = sub.add_parser("tags", help="mixed tags for a directory of portraits")
    p_tags.add_argument("--portraits", required=True, help="directory of .portrait files")
    p_tags.add_argument("--depth", type=int, default=3)
    p_tags.add_argument("--out", default=None)
    p_tags.add_argument("--figures", default=None, help="directory for per-tag SVG figures")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--samples", type=int, default=None,
                          help="sample count (default: the suite's own default)")
    p_verify.add_argument("--seed", type=int, default=1)

    p_render = sub.add_parser("render", help="render a lamination file to SVG")
    p_render.add_argument("--lamination", required=True)
    p_render.add_argument("--out", required=True)
    p_render.add_argument("--size", type=int, default=800)
    p_render.add_argument("--style", choices=["hyperbolic", "straight"], default="hyperbolic")
    p_render.add_argument("--labels", action="store_true")
    p_render.add_argument("--highlight", default="",
                          help="semicolon-separated chords, e.g. '1/7 2/7;2/7 4/7'")
    return parser


def _write(path, text, fallback=sys.stdout):
    if path is None:
        fallback.write(text)
    else:
        Path(path).write_text(text)


def cmd_build(args) -> int:
    try:
        spec = parse_portrait(Path(args.portrait).read_text())
        lam = spec.build(args.depth)
    except (OSError, ValueError, InconsistentPortrait) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(args.out, lamination_text(lam))
    return 0


def cmd_qml(args) -> int:
    try:
        chords = qml_enumerate(args.period, image_reading=args.image_reading)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    lam = FiniteLamination(2, chords)
    _write(args.out, lamination_text(lam))
    if args.svg:
        Path(args.svg).write_text(render_svg(lam, RenderSpec()))
    return 0


def cmd_tags(args) -> int:
    directory = Path(args.portraits)
    files = sorted(directory.glob("*.portrait"))
    if not files:
        print(f"error: no .portrait files in {directory}", file=sys.stderr)
        return 2
    blocks = []
    failures = 0
    for f in files:
        try:
            spec = parse_portrait(f.read_text())
            lam = spec.build(args.depth)
            sets = spec.convex_sets()
            if len(sets) == 1:
                fp = FullPortrait(sets[0], sets[0])
            elif len(sets) == 2:
                fp = FullPortrait(sets[0], sets[1])
            else:
                raise ValueError(f"{f.name}: a tag needs one or two critical sets")
            blocks.append((f.name, mixed_tag(lam, fp)))
        except (ValueError, InconsistentPortrait) as exc:
            print(f"error: {f.name}: {exc}", file=sys.stderr)
            return 2
    matrix = []
    for i in range(len(blocks)):
        row = []
        for j in range(len(blocks)):
            if i == j:
                row.append("equal")
            else:
                rel = tags_relation(blocks[i][1], blocks[j][1])
                row.append(rel)
                if i < j and rel == "properly_overlapping":
                    failures += 1
        matrix.append(row)
    _write(args.out, tag_report(blocks, matrix))
    if args.figures:
        figdir = Path(args.figures)
        figdir.mkdir(parents=True, exist_ok=True)
        for name, tag in blocks:
            svg = render_svg((tag.cocritical_factor, tag.minor_factor), RenderSpec(size=400))
            (figdir / (Path(name).stem + ".svg")).write_text(svg)
    return 1 if failures else 0


def cmd_verify(args) -> int:
    seed = int(os.environ.get("LAMINA_SEED", args.seed))
    if args.samples is None:
        result = SUITES[args.suite](seed=seed)
    else:
        result = run_suite(args.suite, args.samples, seed)
    sys.stdout.write(result.text())
    return 0 if result.passed else 1


def cmd_render(args) -> int:
    try:
        lam = parse_lamination(Path(args.lamination).read_text())
        highlight = tuple(
            Chord.parse(tok) for tok in args.highlight.split(";") if tok.strip()
        )
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    spec = RenderSpec(
        size=args.size,
        geodesic_style=args.style,
        labels=args.labels,
        highlight=highlight,
    )
    Path(args.out).write_text(render_svg(lam, spec))
    return 0


_COMMANDS = {
    "build": cmd_build,
    "qml": cmd_qml,
    "tags": cmd_tags,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
