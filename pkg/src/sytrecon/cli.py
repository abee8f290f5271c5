"""``syt`` command line front end.

Exit codes: 0 success, 1 ambiguous or not injective, 2 usage or input
errors, 3 inconsistent input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import textio
from .errors import NoCandidate, ShapeAmbiguous, SytError
from .minors import MinorMultiset, MinorSet, minor_multiset, minor_set
from .reconstruction import (
    AMBIGUOUS,
    INCONSISTENT,
    bound_report,
    reconstruct,
    recover_shape,
)
from .tableau import enumerate_syt
from .taquin import dual_promotion, jdt_delete, jdt_delete_traced, promotion
from .verify import (
    CONJECTURES,
    MODES,
    check_identities,
    default_conjecture_range,
    injectivity_sweep,
    verify_conjecture,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _positive(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="syt", description="Jeu de taquin minors of standard Young tableaux.")
    p.add_argument("--output", "-o", default="-", help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list every standard tableau of size n")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--count-only", action="store_true")

    s = sub.add_parser("delete", help="jeu de taquin deletion of one entry")
    s.add_argument("--input", required=True)
    s.add_argument("--entry", type=int, required=True)
    s.add_argument("--trace", action="store_true", help="also print the slide path")

    s = sub.add_parser("promote", help="promotion, or dual promotion with --dual")
    s.add_argument("--input", required=True)
    s.add_argument("--dual", action="store_true")

    s = sub.add_parser("minors", help="set or multiset of k-minors")
    s.add_argument("--input", required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--multiset", action="store_true")

    s = sub.add_parser("reconstruct", help="recover a tableau from a minor file")
    s.add_argument("--minors", required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--mode", choices=MODES, default=None,
                   help="defaults to whatever the file holds")

    s = sub.add_parser("shape-recover", help="recover a shape from the shapes of its k-minors")
    s.add_argument("--shapes", required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)

    s = sub.add_parser("sweep", help="exhaustive injectivity sweep")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--mode", choices=MODES, default="set")
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable output")

    s = sub.add_parser("identities", help="exhaustive identity checks")
    s.add_argument("--n-max", type=_positive, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("conjecture", help="desk-scale conjecture check")
    s.add_argument("--which", choices=CONJECTURES, required=True)
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--n-min", type=_positive)
    s.add_argument("--n-max", type=_positive)
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--no-timing", action="store_true")

    s = sub.add_parser("bounds", help="multiset reconstruction size bounds")
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _cmd_enumerate(args, out):
    if args.count_only:
        streamed = sum(1 for _ in enumerate_syt(args.n))
        out.append(str(streamed))
        return EXIT_OK
    out.append(textio.format_tableaux(enumerate_syt(args.n)).rstrip("\n"))
    return EXIT_OK


def _cmd_delete(args, out):
    T = textio.parse_tableau(_read(args.input))
    if args.trace:
        result, trace = jdt_delete_traced(T, args.entry)
        out.append(str(result))
        path = " ".join(f"({c.row},{c.col})" for c in trace.slide_path)
        out.append(f"\npath: {path}\ncorner: ({trace.terminal_corner.row},{trace.terminal_corner.col})")
    else:
        out.append(str(jdt_delete(T, args.entry)))
    return EXIT_OK


def _cmd_promote(args, out):
    T = textio.parse_tableau(_read(args.input))
    out.append(str(dual_promotion(T) if args.dual else promotion(T)))
    return EXIT_OK


def _cmd_minors(args, out):
    T = textio.parse_tableau(_read(args.input))
    if args.multiset:
        out.append(textio.format_minor_multiset(minor_multiset(T, args.k)).rstrip("\n"))
    else:
        out.append(textio.format_minor_set(minor_set(T, args.k)).rstrip("\n"))
    return EXIT_OK


def _cmd_reconstruct(args, out):
    minors = textio.parse_minors(_read(args.minors))
    if args.mode == "set" and isinstance(minors, MinorMultiset):
        minors = minors.support()
    elif args.mode == "multiset" and isinstance(minors, MinorSet):
        raise _Usage("multiset mode needs a file with count lines")
    result = reconstruct(minors, args.n, args.k)
    out.append(textio.format_result(result).rstrip("\n"))
    if result.status == AMBIGUOUS:
        return EXIT_NEGATIVE
    if result.status == INCONSISTENT:
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_shape_recover(args, out):
    shapes = textio.parse_shapes(_read(args.shapes))
    try:
        shape = recover_shape(shapes, args.n, args.k)
    except ShapeAmbiguous as exc:
        out.append("ambiguous\n" + textio.format_shapes(exc.candidates).rstrip("\n"))
        return EXIT_NEGATIVE
    except NoCandidate:
        out.append("inconsistent")
        return EXIT_INCONSISTENT
    out.append(" ".join(map(str, shape.rows)))
    return EXIT_OK


def _cmd_sweep(args, out):
    report = injectivity_sweep(args.n, args.k, args.mode, args.jobs)
    timing = not args.no_timing
    out.append(report.to_json(timing) if args.format == "json" else report.to_text())
    return EXIT_OK if report.injective else EXIT_NEGATIVE


def _cmd_identities(args, out):
    report = check_identities(args.n_max)
    if args.format == "json":
        out.append(json.dumps(report.to_dict(), sort_keys=True))
    else:
        out.append(report.to_text())
    return EXIT_OK


def _cmd_conjecture(args, out):
    if args.n_min is None and args.n_max is None:
        n_values = default_conjecture_range(args.which, args.k)
    else:
        default = default_conjecture_range(args.which, args.k)
        lo = args.n_min if args.n_min is not None else (default[0] if default else args.k + 1)
        hi = args.n_max if args.n_max is not None else (default[-1] if default else lo)
        n_values = list(range(lo, hi + 1))
    if not n_values:
        raise _Usage("empty n range")
    report = verify_conjecture(args.which, args.k, n_values, args.jobs)
    timing = not args.no_timing
    out.append(report.to_json(timing) if args.format == "json" else report.to_text())
    return EXIT_OK if report.holds else EXIT_NEGATIVE


def _cmd_bounds(args, out):
    b = bound_report(args.k)
    if args.format == "json":
        out.append(json.dumps({
            "k": b.k, "eq41_min_n": b.eq41_min_n,
            "closed_form_bound": b.closed_form_bound, "cubic_bound": b.cubic_bound,
        }, sort_keys=True))
    else:
        out.append(f"k = {b.k}\n"
                   f"eq41_min_n = {b.eq41_min_n}\n"
                   f"closed_form_bound = {b.closed_form_bound:.4f} (n >= {b.closed_form_min_n})\n"
                   f"cubic_bound = {b.cubic_bound:.4f} (n >= {b.cubic_min_n})")
    return EXIT_OK


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "delete": _cmd_delete,
    "promote": _cmd_promote,
    "minors": _cmd_minors,
    "reconstruct": _cmd_reconstruct,
    "shape-recover": _cmd_shape_recover,
    "sweep": _cmd_sweep,
    "identities": _cmd_identities,
    "conjecture": _cmd_conjecture,
    "bounds": _cmd_bounds,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except (_Usage, SytError) as exc:
        print(f"syt {args.command}: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    text = "\n".join(out) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
