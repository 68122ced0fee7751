"""Command-line front end: invariants, constructions, and the verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .braid import BraidError, BraidWord, family_braid, parse_braid
from .checks import (
    CheckError, REGISTRY, calibrate_convention, fixtures_dir, get_check,
    pinned_convention, run_check,
)
from .diagram import DiagramError, LinkDiagram, braid_closure_diagram, encircle, load_pd, save_pd
from .fibering import FiberingError, Pattern, pattern_link
from .invariants import InvariantError, homfly, mfw_bound
from .laurent import LaurentError
from .presentation import PresentationError
from .fibering import link_alexander

USER_ERRORS = (BraidError, DiagramError, LaurentError, PresentationError,
               FiberingError, InvariantError, CheckError, OSError)


def _diagram_from_args(args) -> LinkDiagram:
    if args.pd and args.braid is not None:
        raise DiagramError("give either --braid or --pd, not both")
    if args.pd:
        return load_pd(args.pd)
    if args.braid is None:
        raise DiagramError("one of --braid or --pd is required")
    if not args.strands:
        raise BraidError("--strands is required with --braid")
    return braid_closure_diagram(parse_braid(args.braid, args.strands))


def cmd_invariant(args) -> int:
    diagram = _diagram_from_args(args)
    if args.kind == "alexander":
        print(link_alexander(diagram).render())
        return 0
    convention = pinned_convention(fixtures_dir(args.fixtures))
    if args.kind == "homfly":
        print(homfly(diagram, convention).render())
    else:
        print(mfw_bound(diagram, convention))
    return 0


def cmd_construct(args) -> int:
    axes = args.axes.split(",") if args.axes else []
    if args.what == "closure":
        word = parse_braid(args.braid, args.strands)
        diagram = braid_closure_diagram(word)
        default = "closure.pd"
    elif args.what == "encircle":
        word = parse_braid(args.braid, args.strands)
        diagram = encircle(word, axes or ["+"])
        default = "encircle.pd"
    elif args.what == "pattern-link":
        word = parse_braid(args.braid, args.strands)
        diagram = pattern_link(Pattern(braid=word))
        default = "pattern_link.pd"
    else:  # family
        word = family_braid(args.name, args.param)
        if axes:
            diagram = encircle(word, axes)
            default = f"{args.name}_{args.param}_encircled.pd"
        else:
            diagram = braid_closure_diagram(word)
            default = f"{args.name}_{args.param}.pd"
    out = args.out or default
    save_pd(diagram, out)
    print(f"wrote {out}: {diagram.component_count()} components, "
          f"{diagram.crossing_count()} crossings")
    return 0


def cmd_verify(args) -> int:
    fixtures = fixtures_dir(args.fixtures)
    lines = []
    if args.calibrate:
        convention = calibrate_convention(fixtures)
        print(f"pinned HOMFLY convention: {convention}")
        return 0
    convention = pinned_convention(fixtures)
    specs = REGISTRY if args.check in (None, "all") else (get_check(args.check),)
    lines.append(f"verify: checks={args.check or 'all'} convention={convention}")
    overall = True
    for spec in specs:
        result = run_check(spec, fixtures)
        overall &= result.passed
        status = "PASS" if result.passed else "FAIL"
        timing = "" if args.no_timing else f" time {result.elapsed:.2f}s (budget {result.budget:.0f}s)"
        lines.append(f"check {result.name} {status}{timing}")
        lines.append(f"  expected: {result.expected}")
        lines.append(f"  computed: {result.computed}")
    lines.append(f"overall {'PASS' if overall else 'FAIL'}")
    print("\n".join(lines))
    return 0 if overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotfiber",
        description="Exact link invariants and fibering checks for satellite patterns")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="compute an invariant of a braid closure or PD file")
    inv.add_argument("kind", choices=["alexander", "homfly", "mfw"])
    inv.add_argument("--braid", help="braid word, e.g. 's1 s1 s1'")
    inv.add_argument("--strands", type=int, help="strand count for --braid")
    inv.add_argument("--pd", help="path to a PD file")
    inv.add_argument("--fixtures", help="fixtures directory override")
    inv.set_defaults(func=cmd_invariant)

    con = sub.add_parser("construct", help="build a diagram and write it as a PD file")
    con.add_argument("what", choices=["closure", "encircle", "pattern-link", "family"])
    con.add_argument("--braid", help="braid word")
    con.add_argument("--strands", type=int)
    con.add_argument("--name", choices=["beta", "morton"], help="family name")
    con.add_argument("--param", type=int, help="family parameter")
    con.add_argument("--axes", help="comma-separated axis orientations, e.g. +,-")
    con.add_argument("--encircle", dest="axes", help="alias for --axes")
    con.add_argument("--out", help="output PD path")
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--check", help="run a single named check (default: all)")
    ver.add_argument("--calibrate", action="store_true",
                     help="pin the HOMFLY convention from the recursion gate")
    ver.add_argument("--fixtures", help="fixtures directory override")
    ver.add_argument("--no-timing", action="store_true",
                     help="omit timings for byte-identical reports")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
