"""Command-line surface: ``card``, ``metric``, ``verify``, ``render``.

Exit codes are a stable contract: 0 success/agreement, 1 usage error,
2 input error (unreadable/invalid scene or output path), 3 verification
disagreement.
"""

from __future__ import annotations

import argparse
import sys

from .errors import EnumerationCapError
from .lattice import (
    DEFAULT_ENUM_CAP,
    DigitalCircle,
    DigitalDisc,
    PixelPoint,
    circle_cardinality_closed,
    disc_cardinality_closed,
    enumerate_circle,
    enumerate_disc,
)
from .metrics import hausdorff_distance, symmetric_difference_metric
from .proximity import (
    FORMULAS,
    DiscPair,
    intersection_cardinality_oracle,
    run_sweep,
    verify_pair,
)
from .render import render_ascii, render_ppm, render_svg
from .scene import SceneError, load_scene

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3

REPORT_COLUMNS = ("R1", "R2", "gamma", "delta", "regime", "oracle_m", "closed_m", "formula")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract reserves 2 for input
    # errors, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="discprox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_card = sub.add_parser("card", parents=[], help="closed-form vs enumerated cardinalities")
    p_card.add_argument("--disc", type=int, metavar="R", help="disc radius")
    p_card.add_argument("--circle", type=int, metavar="r", help="circle radius")
    p_card.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)

    p_metric = sub.add_parser("metric", help="proximity report for two labeled discs")
    p_metric.add_argument("--scene", required=True)
    p_metric.add_argument("label_a")
    p_metric.add_argument("label_b")
    p_metric.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)

    p_verify = sub.add_parser("verify", help="sweep closed forms against the oracle")
    p_verify.add_argument("--max-radius", type=int, required=True)
    p_verify.add_argument("--max-offset", type=int, required=True)
    p_verify.add_argument("--formulas", default=",".join(FORMULAS),
                          help="comma list from thm1,thm2,thm3,corollary")
    p_verify.add_argument("--format", choices=("tsv",), default="tsv")
    p_verify.add_argument("--out", help="TSV report path (default: stdout)")
    p_verify.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)

    p_render = sub.add_parser("render", help="draw a scene")
    p_render.add_argument("--scene", required=True)
    p_render.add_argument("--format", choices=("ascii", "pixmap", "vector"), default="ascii")
    p_render.add_argument("--out", help="output path (default: stdout)")
    p_render.add_argument("--boundaries", action="store_true",
                          help="mark boundary circles instead of filled discs")
    return parser


def _write_out(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_card(args) -> int:
    if args.disc is None and args.circle is None:
        print("discprox card: error: give --disc and/or --circle", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    if args.circle is not None:
        r = args.circle
        if r < 0:
            print(f"discprox card: error: negative radius {r}", file=sys.stderr)
            return EXIT_USAGE
        try:
            closed = str(circle_cardinality_closed(r))
        except ValueError:
            closed = "undefined (closed form requires r >= 1)"
        enum, agree = _enumerated(lambda: enumerate_circle(DigitalCircle(PixelPoint(0, 0), r),
                                                           args.enum_cap), closed)
        rows.append(("circle", r, closed, enum, agree))
    if args.disc is not None:
        radius = args.disc
        if radius < 0:
            print(f"discprox card: error: negative radius {radius}", file=sys.stderr)
            return EXIT_USAGE
        closed = str(disc_cardinality_closed(radius))
        enum, agree = _enumerated(lambda: enumerate_disc(DigitalDisc(PixelPoint(0, 0), radius),
                                                         args.enum_cap), closed)
        rows.append(("disc", radius, closed, enum, agree))
    print("kind\tradius\tclosed\tenumerated\tagree")
    for row in rows:
        print("\t".join(str(c) for c in row))
    return EXIT_OK


def _enumerated(thunk, closed: str) -> tuple[str, str]:
    try:
        card = thunk().cardinality
    except EnumerationCapError:
        return "skipped (enumeration cap)", "skipped"
    if closed.isdigit():
        return str(card), ("ok" if int(closed) == card else "MISMATCH")
    return str(card), "skipped"


def cmd_metric(args) -> int:
    scene = load_scene(args.scene)
    try:
        disc_a, disc_b = scene.get(args.label_a), scene.get(args.label_b)
    except KeyError as exc:
        print(f"discprox metric: error: unknown label {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    pair = DiscPair(disc_a, disc_b)
    set_a = enumerate_disc(disc_a, args.enum_cap)
    set_b = enumerate_disc(disc_b, args.enum_cap)
    inter = intersection_cardinality_oracle(pair, args.enum_cap)
    report = verify_pair(pair, enum_cap=args.enum_cap)
    print(f"pair: {args.label_a} vs {args.label_b}")
    print(f"card_a={set_a.cardinality}")
    print(f"card_b={set_b.cardinality}")
    print(f"card_intersection={inter}")
    print(f"m={symmetric_difference_metric(set_a, set_b)}")
    print(f"hausdorff={hausdorff_distance(set_a, set_b)}")
    print(f"regime: {report.regime}")
    if not report.closed:
        print("no closed form applies")
    for formula, value in report.closed.items():
        verdict = "agree" if report.agreement[formula] else "DISAGREE"
        print(f"closed {formula}: {value} {verdict}")
    return EXIT_OK


def _parse_formulas(text: str) -> tuple[str, ...]:
    names = tuple(t for t in (s.strip() for s in text.split(",")) if t)
    bad = [n for n in names if n not in FORMULAS]
    if bad or not names:
        raise ValueError(f"unknown formulas {bad}; choose from {','.join(FORMULAS)}")
    return names


def cmd_verify(args) -> int:
    try:
        formulas = _parse_formulas(args.formulas)
    except ValueError as exc:
        print(f"discprox verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.max_radius < 0 or args.max_offset < 0:
        print("discprox verify: error: bounds must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if args.enum_cap is not None and args.max_radius > args.enum_cap:
        print("discprox verify: error: max radius above enumeration cap", file=sys.stderr)
        return EXIT_USAGE
    result = run_sweep(args.max_radius, args.max_offset, formulas, args.enum_cap)
    lines = ["\t".join(REPORT_COLUMNS)]
    for report in result.reports:
        d2 = report.pair.d2
        for formula in report.disagreements:
            lines.append("\t".join(map(str, (
                report.pair.d1.R, d2.R, d2.center.x, d2.center.y,
                report.regime, report.oracle_m, report.closed[formula], formula,
            ))))
    _write_out("\n".join(lines) + "\n", args.out)
    disagreements = result.disagreement_rows
    print(
        f"verify: formulas={','.join(formulas)} max_radius={args.max_radius} "
        f"max_offset={args.max_offset} pairs_checked={result.pairs_checked} "
        f"disagreements={disagreements}"
    )
    return EXIT_DISAGREE if disagreements else EXIT_OK


def cmd_render(args) -> int:
    scene = load_scene(args.scene)
    if args.format == "ascii":
        text = render_ascii(scene, boundaries=args.boundaries)
    elif args.format == "pixmap":
        text = render_ppm(scene)
    else:
        text = render_svg(scene)
    _write_out(text, args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {"card": cmd_card, "metric": cmd_metric, "verify": cmd_verify,
                "render": cmd_render}
    try:
        return handlers[args.command](args)
    except (SceneError, EnumerationCapError) as exc:
        print(f"discprox {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"discprox {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
