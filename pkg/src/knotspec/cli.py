"""Command-line front end.

Exit status is 0 on success, 2 on invalid input and 1 on internal errors.
Set ``KNOTSPEC_COLOR=0`` to disable ANSI styling on terminals.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import __version__
from .braids import (
    BraidWord,
    exponent_sum,
    free_reduce,
    pretzel_cable_correction,
    residual_two_strand_word,
    torus_braid_word,
)
from .errors import KnotSpecError, ParseError
from .exactnum import (
    ContinuedFraction,
    cf_canonical,
    cf_enumerate_ht,
    cf_eval,
    format_fraction,
    parse_fraction,
)
from .families import CableKnot, PretzelKnot, parse_knot
from .render import fourplat_svg, pillowcase_svg
from .spectrum import (
    PRIMITIVE,
    STANDARD,
    Status,
    bridge_spectrum,
    conjectured_cable_spectrum,
    conjectured_pretzel_cable_spectrum,
    tunnel_number,
)
from .surfaces import HTSurface, euler_characteristic, isotopy_classes

_COLORS = {
    Status.EXACT: "\033[32m",
    Status.UPPER_BOUND: "\033[36m",
    Status.CONJECTURAL: "\033[33m",
    Status.UNKNOWN: "\033[2m",
}
_RESET = "\033[0m"


def _use_color(stream) -> bool:
    return os.environ.get("KNOTSPEC_COLOR", "1") != "0" and hasattr(stream, "isatty") and stream.isatty()


def _emit(args, payload: dict, text: str, out):
    if getattr(args, "json", False):
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _parse_coefficients(tokens: list[str]) -> tuple[int, ...]:
    """Accept ``2 3``, ``2,3`` or ``[2,3]``."""
    text = " ".join(tokens).replace("[", " ").replace("]", " ").replace(",", " ")
    coeffs = []
    for tok in text.split():
        try:
            coeffs.append(int(tok))
        except ValueError:
            raise ParseError(f"bad coefficient {tok!r}", tok) from None
    return tuple(coeffs)


# --- subcommands ------------------------------------------------------------


def _cmd_cfrac(args, out):
    x = parse_fraction(args.fraction)
    if args.ht:
        # denominators strictly drop along an admissible expansion, so q terms suffice
        found = sorted(cf_enumerate_ht(x, args.depth or x.denominator))
        payload = {"fraction": format_fraction(x), "expansions": [str(cf) for cf in found]}
        _emit(args, payload, "\n".join(str(cf) for cf in found), out)
    else:
        cf = cf_canonical(x)
        _emit(args, {"fraction": format_fraction(x), "canonical": str(cf)}, str(cf), out)


def _colored(spectrum, out) -> str:
    if not _use_color(out):
        return str(spectrum)
    parts = [f"{_COLORS[e.status]}{e.text()}{_RESET}" for e in spectrum.entries]
    return "(" + ", ".join(parts) + ")"


def _conjectural_spectrum(knot):
    if not isinstance(knot, CableKnot):
        raise KnotSpecError("conjectural evaluators apply to cable knots only")
    m, n = knot.pattern.m, knot.pattern.n
    if isinstance(knot.companion, PretzelKnot):
        return conjectured_pretzel_cable_spectrum(knot.companion, m, n)
    return conjectured_cable_spectrum(bridge_spectrum(knot.companion, STANDARD), m, n)


def _cmd_spectrum(args, out):
    knot = parse_knot(args.knot)
    if args.conjectural:
        result = _conjectural_spectrum(knot)
    else:
        result = bridge_spectrum(knot, PRIMITIVE if args.primitive else STANDARD)
    _emit(args, result.to_json(), _colored(result, out), out)


def _cmd_tunnel(args, out):
    result = tunnel_number(parse_knot(args.knot))
    _emit(args, result.to_json(), str(result), out)


def _cmd_surfaces(args, out):
    x = parse_fraction(args.fraction)
    coeffs = _parse_coefficients(args.expansion)
    tail = cf_eval(ContinuedFraction(0, coeffs))
    r = x - tail
    if r.denominator != 1:
        raise KnotSpecError(f"[{','.join(map(str, coeffs))}] is not an expansion of {format_fraction(x)}")
    expansion = ContinuedFraction(r.numerator, coeffs)
    if args.euler:
        surface = HTSurface(expansion, args.sheets, (0,) * (expansion.k - 1))
        chi = euler_characteristic(surface)
        payload = {"expansion": str(expansion), "n": args.sheets, "euler_characteristic": chi}
        _emit(args, payload, str(chi), out)
    else:
        report = isotopy_classes(expansion, args.sheets)
        lines = [f"{report.class_count} classes"]
        lines += ["(" + ", ".join(map(str, rep)) + ")" for rep in report.representatives]
        _emit(args, report.to_json(), "\n".join(lines), out)


def _cmd_braid(args, out):
    if args.torus is not None:
        word = torus_braid_word(*args.torus)
    elif args.correction is not None:
        word = pretzel_cable_correction(*args.correction)
    elif args.residual is not None:
        knot = parse_knot(args.residual[0])
        if not isinstance(knot, PretzelKnot):
            raise KnotSpecError(f"--residual needs a pretzel knot, got {knot}")
        try:
            n = int(args.residual[1])
        except ValueError:
            raise ParseError(f"bad torus parameter {args.residual[1]!r}", args.residual[1]) from None
        word = residual_two_strand_word(knot, 2, n)
    else:
        word = free_reduce(BraidWord.parse(args.reduce))
    payload = {"strands": word.strands, "word": str(word), "exponent_sum": exponent_sum(word)}
    _emit(args, payload, str(word), out)


def _cmd_render(args, out):
    if args.fourplat is not None:
        svg = fourplat_svg(ContinuedFraction(0, _parse_coefficients(args.fourplat)), args.closed)
    else:
        svg = pillowcase_svg(parse_fraction(args.pillowcase))
    if args.out in (None, "-"):
        out.write(svg)
    else:
        Path(args.out).write_text(svg, encoding="utf-8")


# --- parser -----------------------------------------------------------------


# let "-2/5" through as a positional argument, like "-2"
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cfrac", help="continued-fraction expansions of p/q")
    p.add_argument("fraction")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--canonical", action="store_true", help="odd-length single-sign expansion (default)")
    mode.add_argument("--ht", action="store_true", help="all expansions with every |b_i| >= 2")
    p.add_argument("--depth", type=int, default=None, help="maximum expansion length for --ht")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cfrac)

    p = sub.add_parser("spectrum", help="bridge spectrum of a knot literal")
    p.add_argument("knot")
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--conjectural", action="store_true", help="apply the conjectural cabling formulas")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("tunnel", help="tunnel number or bound")
    p.add_argument("knot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tunnel)

    p = sub.add_parser("surfaces", help="invariants of carried incompressible surfaces")
    p.add_argument("fraction")
    p.add_argument("--expansion", nargs="+", required=True, metavar="B")
    p.add_argument("--sheets", type=int, required=True)
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--euler", action="store_true")
    what.add_argument("--classes", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_surfaces)

    p = sub.add_parser("braid", help="braid-word arithmetic")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--torus", nargs=2, type=int, metavar=("M", "N"))
    what.add_argument("--correction", nargs=2, type=int, metavar=("M", "P"))
    what.add_argument("--residual", nargs=2, metavar=("PRETZEL", "N"))
    what.add_argument("--reduce", metavar="WORD")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("render", help="SVG tangle diagrams")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--fourplat", nargs="+", metavar="B")
    what.add_argument("--pillowcase", metavar="P/Q")
    p.add_argument("--closed", action="store_true", help="close the 4-plat into a knot")
    p.add_argument("--out", metavar="FILE", help="write here instead of standard output")
    p.set_defaults(func=_cmd_render)
    for p in [parser, *sub.choices.values()]:
        p._negative_number_matcher = _NEGATIVE
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        args.func(args, out)
    except ParseError as exc:
        err.write(f"knotspec: parse error at {exc.token!r}: {exc}\n")
        return 2
    except KnotSpecError as exc:
        err.write(f"knotspec: {type(exc).__name__}: {exc}\n")
        return 2
    except Exception as exc:  # noqa: BLE001
        err.write(f"knotspec: internal error: {exc!r}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
