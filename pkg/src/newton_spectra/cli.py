"""Command-line driver.

Exit status: 0 success, 2 parse or usage error, 3 unsupported input (not
convenient, not simplicial, degenerate), 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .basis import BasisError
from .fixtures import NAMES, load_fixture
from .geometry import GeometryError
from .germ import GermError, NotConvenientError, format_monomial, parse_germ
from .hodge import ClassificationError
from .local import PlacementError
from .oracle import OracleError
from .pipeline import ComputationResult, ConsistencyError, PreconditionError, compute
from .spp import diff_spp, emit_spp, frac_str, parse_spp_text, SppParseError

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def render_table(r: ComputationResult) -> str:
    v = r.germ.variables
    lines = [f"germ      {r.to_json()['germ']}", f"variables {','.join(v)}", f"milnor    {r.milnor}", ""]
    lines.append("spectral pairs (alpha, w) : m")
    for (a, w), m in r.spectral_pairs.items():
        lines.append(f"  ({frac_str(a):>7}, {w}) : {m}")
    lines += ["", "hodge numbers h^{p,q}_chi"]
    for (p, q, chi), d in sorted(r.hodge.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1])):
        lines.append(f"  p={p} q={q} chi={frac_str(chi):>6} : {d}")
    lines += ["", "basis (monomial  h  p q chi)"]
    for i, (e, c) in enumerate(r.basis_in_order(), 1):
        mono = format_monomial(e.monomial, v, compressed=True)
        lines.append(f"  [{i}] {mono:<12} {frac_str(e.h):>6}  {c.p} {c.q} {frac_str(c.chi)}")
    checks = r.diagnostics.get("checks")
    if checks:
        lines += ["", "checks"]
        lines += [f"  {k}: {val}" for k, val in checks.items()]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_germ(args):
    if args.fixture:
        fx = load_fixture(args.fixture)
        return parse_germ(fx.germ, fx.variables), fx
    if not args.germ:
        raise GermError("no germ given; use --germ or --fixture")
    variables = [s.strip() for s in args.vars.split(",")] if args.vars else None
    return parse_germ(args.germ, variables), None


def compute_command(args) -> int:
    try:
        g, fx = _load_germ(args)
    except GermError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = compute(g, nondegeneracy=not args.no_nondegeneracy_check, check=args.check)
    except (PreconditionError, NotConvenientError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PRECONDITION
    except (ConsistencyError, BasisError, ClassificationError, PlacementError, GeometryError, OracleError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if result.milnor != len(result.basis):
        print("internal consistency failure: basis size differs from Milnor number", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        text = json.dumps(result.to_json(), indent=2) + "\n"
    elif args.format == "spp":
        text = emit_spp(result.spectral_pairs) + "\n"
    else:
        text = render_table(result)
    _emit(text, args.out)
    if args.check and fx is not None:
        d = diff_spp(result.spectral_pairs, fx.reference)
        if d:
            print("\n".join(["reference mismatch:"] + d.lines()), file=sys.stderr)
            return EXIT_INTERNAL
    return EXIT_OK


def diff_command(args) -> int:
    try:
        left = parse_spp_text(Path(args.computed).read_text())
        right = parse_spp_text(Path(args.reference).read_text())
    except (OSError, SppParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    d = diff_spp(left, right)
    if d:
        print("\n".join(d.lines()))
        return 1
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newton-spectra", description="Spectral pairs of Newton non-degenerate germs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    c = sub.add_parser("compute", help="compute Milnor number, basis, Hodge numbers and spectral pairs")
    src = c.add_mutually_exclusive_group()
    src.add_argument("-f", "--germ", help='polynomial, e.g. "x^5+y^7" or "x15+x6y4+x3y6+y12"')
    src.add_argument("--fixture", choices=NAMES, help="built-in reference germ")
    c.add_argument("--vars", help="comma-separated variable names (default: the letters used, x, y, z, w first)")
    c.add_argument("--format", choices=("json", "spp", "table"), default="table")
    c.add_argument("--check", action="store_true", help="run the brute-force oracles and cross-checks")
    c.add_argument(
        "--no-nondegeneracy-check",
        action="store_true",
        help="assume non-degeneracy instead of testing every face",
    )
    c.add_argument("--out", help="write output to this file")
    c.set_defaults(func=compute_command)
    d = sub.add_parser("diff", help="compare two spectral-pair files")
    d.add_argument("computed")
    d.add_argument("reference")
    d.set_defaults(func=diff_command)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
