"""Command-line front end: ``plcommute <command> ...``.

Maps are read from files in the ``x,y; x,y; ...`` text format.  Reports
are JSON on stdout with rationals written as ``"p/q"`` strings.

Exit status: 0 on success or a true verdict, 1 when a checked property
is false (maps do not commute, no conjugacy found, ...), 2 on usage or
input errors, which are also reported as JSON on stderr.
"""
import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from . import commutators, conjugacy, families, lattice
from .plmap import PLMap, compose, evaluate, format_fraction, format_plmap, parse_plmap, parse_points, to_fraction
from .render import render_quadrant_svg, scene_for

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _emit_error("UsageError", message)
        sys.exit(EXIT_ERROR)


def _emit_error(kind, message):
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, PLMap):
        return format_plmap(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def _print_json(obj):
    print(json.dumps(to_jsonable(obj), indent=2))


def _read(path) -> str:
    if path is None:
        raise UsageError("missing map file argument")
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _map(path) -> PLMap:
    return parse_plmap(_read(path))


def _write_or_print(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rational(text) -> Fraction:
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


# -- commands -----------------------------------------------------------------

def cmd_eval(args):
    print(format_fraction(evaluate(_map(args.g), args.x)))
    return EXIT_OK


def cmd_compose(args):
    _write_or_print(format_plmap(compose(_map(args.g), _map(args.psi))) + "\n", args.out)
    return EXIT_OK


def cmd_xi(args):
    _write_or_print(format_plmap(commutators.xi(args.t)) + "\n", args.out)
    return EXIT_OK


def cmd_commute(args):
    report = commutators.commutes(_map(args.g), _map(args.psi), args.method)
    _print_json(report)
    return EXIT_OK if report.commutes else EXIT_FALSE


def cmd_lattice(args):
    g, psi = _map(args.g), _map(args.psi)
    lat = lattice.determinating_lattice(g, psi)
    data = to_jsonable(lat)
    data.update(counts=list(lat.counts), expected_counts=list(lat.expected_counts),
                counts_match=lat.counts_match)
    data["points"] = to_jsonable(lattice.abcd_points(g, psi, lat)._asdict())
    data.update(to_jsonable(lattice.kink_pairs(g, psi, lat)))
    _write_or_print(json.dumps(data, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_pairs(args):
    g, psi = _map(args.g), _map(args.psi)
    lat = lattice.determinating_lattice(g, psi)
    pts = lattice.abcd_points(g, psi, lat)
    data = to_jsonable(lattice.kink_pairs(g, psi, lat))
    data["points"] = to_jsonable(pts._asdict())
    print(json.dumps(data, indent=2))
    return EXIT_OK


def cmd_conjugacy(args):
    if args.action == "find":
        h = conjugacy.find_tent_conjugacy(_map(args.g))
        if h is None:
            _print_json({"found": False})
            return EXIT_FALSE
        if args.out:
            _write_or_print(format_plmap(h) + "\n", args.out)
        _print_json({"found": True, "h": h})
        return EXIT_OK
    if args.action == "verify":
        f0 = _map(args.f) if args.f else commutators.tent()
        report = conjugacy.verify_conjugacy(f0, _map(args.g), _map(args.h))
        _print_json(report)
        return EXIT_OK if report.is_conjugacy else EXIT_FALSE
    report = conjugacy.tent_necessary_conditions(_map(args.g))
    _print_json(report)
    ok = report.derivative_at_zero_check and report.right_leg_check
    return EXIT_OK if ok else EXIT_FALSE


def cmd_family(args):
    inst = families.make_family(args.id, args.a, args.b)
    psi = inst.psi if args.t == 3 else conjugacy.conjugate(commutators.xi(args.t), inst.h)
    for m, path in ((inst.g, args.out_g), (psi, args.out_psi), (inst.h, args.out_h)):
        if path:
            _write_or_print(format_plmap(m) + "\n", path)
    _print_json({"family_id": inst.family_id, "params": inst.params, "t": args.t,
                 "g": inst.g, "psi": psi, "h": inst.h,
                 "slope_relations": families.slope_relations(inst) if args.t == 3 else []})
    return EXIT_OK


def cmd_complete_left(args):
    g = families.complete_from_left(parse_points(_read(args.gl)))
    _write_or_print(format_plmap(g) + "\n", args.out)
    return EXIT_OK


def cmd_render(args):
    g, psi = _map(args.g), _map(args.psi)
    scene = scene_for(g, psi, with_lattice=not args.no_lattice, labels=args.labels,
                      sat_points=args.x or ())
    _write_or_print(render_quadrant_svg(scene), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plcommute", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a map at a rational point")
    p.add_argument("--g", required=True)
    p.add_argument("--x", required=True, type=_rational)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compose", help="write g o psi")
    p.add_argument("--g", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("xi", help="write the t-piece sawtooth commutator of the tent map")
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("commute", help="decide whether g and psi commute")
    p.add_argument("--g", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--method", choices=("exact", "sat", "both"), default="both")
    p.set_defaults(func=cmd_commute)

    p = sub.add_parser("lattice", help="determinating lattice, A/B/C/D points and P, Q")
    p.add_argument("--g", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("pairs", help="A/B/C/D points and the kink-pair sets P, Q")
    p.add_argument("--g", required=True)
    p.add_argument("--psi", required=True)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("conjugacy", help="PL conjugacy to the tent map")
    p.add_argument("action", choices=("find", "verify", "check"))
    p.add_argument("--g", required=True)
    p.add_argument("--f", help="source map for verify (default: tent)")
    p.add_argument("--h")
    p.add_argument("--out", help="file for the conjugacy found by 'find'")
    p.set_defaults(func=cmd_conjugacy)

    p = sub.add_parser("family", help="generate a commuting pair from a family")
    p.add_argument("--id", required=True, choices=families.FAMILY_IDS)
    p.add_argument("--a", required=True, type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--out-g")
    p.add_argument("--out-psi")
    p.add_argument("--out-h")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("complete-left", help="complete an increasing leg to a tent conjugate")
    p.add_argument("--gl", required=True, help="points from (0,0) to (v,1)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_complete_left)

    p = sub.add_parser("render", help="four-quadrant SVG diagram")
    p.add_argument("--g", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--x", type=_rational, action="append",
                   help="highlight SAT(x); may be repeated")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--no-lattice", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "conjugacy" and args.action == "verify" and not args.h:
        _emit_error("UsageError", "conjugacy verify needs --h")
        return EXIT_ERROR
    try:
        return args.func(args)
    except (ValueError, UsageError, OSError, TypeError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
