"""Command-line front end: sequence generation, convolution verification,
recurrence decomposition, and Bell-polynomial inspection.

Output goes to stdout as plain text, CSV, or one JSON object per line.
Exit codes: 0 success / all checks matched, 1 a verification check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import conv, seq
from .bellpoly import bell_eval, bell_eval_recurrence, bell_symbolic
from .ring import format_element, parse_element
from .seq import PRESET_NAMES, BellSequenceSpec, RecurrenceSpec


def _element_list(text: str) -> list:
    values = [parse_element(atom) for atom in text.split(",") if atom.strip() != ""]
    if not values:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return values


def _non_negative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {n}")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def _param_pair(text: str) -> tuple:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=INT, got {text!r}")
    return key.strip(), int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellseq",
        description="Exact Bell-polynomial sequence families and their convolution identities.",
    )
    parser.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    parser.add_argument("--quiet", action="store_true", help="suppress output, keep exit code")
    # accepted before or after the subcommand; SUPPRESS keeps the subparser
    # from clobbering a value given up front
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p):
        p.add_argument("--a", type=int, default=None)
        p.add_argument("--b", type=int, default=None)
        p.add_argument("--c", type=_element_list, default=None, metavar="LIST")
        p.add_argument("--preset", choices=PRESET_NAMES, default=None)
        p.add_argument("--param", type=_param_pair, action="append", default=[], metavar="KEY=INT")

    p_seq = sub.add_parser("seq", parents=[common],
                         help="print y_0..y_N (or the offset-adjusted classical sequence)")
    add_spec_flags(p_seq)
    p_seq.add_argument("--n", type=_non_negative, required=True)
    p_seq.add_argument("--apply-offset", action="store_true")

    p_conv = sub.add_parser("conv", parents=[common],
                          help="r-fold convolution: verify closed form against the oracle")
    add_spec_flags(p_conv)
    p_conv.add_argument("--n", type=_non_negative, required=True)
    p_conv.add_argument("--r", type=_positive, required=True)
    p_conv.add_argument("--delta", type=_non_negative, default=0)
    group = p_conv.add_mutually_exclusive_group()
    group.add_argument("--check", action="store_true", default=True,
                       help="compare against the composition oracle (default)")
    group.add_argument("--closed-only", action="store_true",
                       help="print closed-form values without the oracle")

    p_dec = sub.add_parser("decompose", parents=[common],
                         help="express a linear recurrence via shifted y values")
    p_dec.add_argument("--coeffs", type=_element_list, required=True, metavar="LIST")
    p_dec.add_argument("--init", type=_element_list, required=True, metavar="LIST")
    p_dec.add_argument("--n", type=_non_negative, required=True)

    p_bell = sub.add_parser("bell", parents=[common],
                          help="partial Bell polynomial, symbolic or evaluated")
    p_bell.add_argument("--n", type=_non_negative, required=True)
    p_bell.add_argument("--k", type=_non_negative, required=True)
    p_bell.add_argument("--symbolic", action="store_true")
    p_bell.add_argument("--x", type=_element_list, default=None, metavar="LIST")
    p_bell.add_argument("--cross-check", action="store_true")

    return parser


def _resolve_spec(args, parser) -> tuple:
    """(spec, offset) from --preset or from --a/--b/--c."""
    params = dict(args.param)
    if args.preset is not None:
        if args.a is not None or args.b is not None or args.c is not None:
            parser.error("--preset conflicts with --a/--b/--c")
        b = params.pop("b", None)
        if params:
            parser.error(f"unknown --param keys: {', '.join(sorted(params))}")
        try:
            return seq.preset(args.preset, b=b)
        except ValueError as exc:
            parser.error(str(exc))
    if args.a is None or args.b is None or args.c is None:
        parser.error("either --preset or all of --a, --b, --c are required")
    if params:
        parser.error("--param is only meaningful with --preset fuss_catalan")
    try:
        return BellSequenceSpec(args.a, args.b, tuple(args.c)), 0
    except ValueError as exc:
        parser.error(str(exc))


class _Emitter:
    """Collects kind-tagged records and renders them in one format."""

    _CSV_FIELDS = {
        "sequence": ("n", "value"),
        "convolution": ("r", "n", "value"),
        "verification": ("r", "n", "lhs", "rhs", "matched"),
        "decomposition": ("lambdas", "values", "recurrence_ok"),
        "bellpoly": ("n", "k", "terms", "value", "cross_check"),
    }

    def __init__(self, fmt: str, quiet: bool, out):
        self.fmt = fmt
        self.quiet = quiet
        self.out = out
        self._csv_header_done = False

    def emit(self, record: dict, plain: str):
        if self.quiet:
            return
        if self.fmt == "plain":
            print(plain, file=self.out)
        elif self.fmt == "json":
            print(json.dumps(record), file=self.out)
        else:
            fields = self._CSV_FIELDS[record["kind"]]
            if not self._csv_header_done:
                print(",".join(("kind",) + fields), file=self.out)
                self._csv_header_done = True
            cells = [record["kind"]]
            for f in fields:
                v = record.get(f, "")
                if isinstance(v, bool):
                    v = "true" if v else "false"
                elif isinstance(v, (list, tuple)):
                    v = ";".join(str(item) for item in v)
                cells.append(str(v))
            print(",".join(cells), file=self.out)


def _cmd_seq(args, parser, emitter) -> int:
    spec, offset = _resolve_spec(args, parser)
    if args.apply_offset:
        window = seq.bell_transform(spec, args.n + max(0, -offset))
        values = window.shifted(offset, args.n + 1)
    else:
        values = list(seq.bell_transform(spec, args.n).values)
    for i, v in enumerate(values):
        text = format_element(v)
        emitter.emit({"kind": "sequence", "n": i, "value": text}, text)
    return 0


def _cmd_conv(args, parser, emitter) -> int:
    spec, _ = _resolve_spec(args, parser)
    if args.delta > 0 and (spec.a != 0 or spec.b != 1):
        parser.error("shift formula stated for a=0, b=1 family")

    def closed(r, n):
        if args.delta > 0:
            return conv.shifted_convolution_closed(spec.c, r, n, args.delta)
        return conv.convolution_closed(spec, r, n)

    if args.closed_only:
        for n in range(1, args.n + 1):
            v = closed(args.r, n)
            text = format_element(v)
            emitter.emit(
                {"kind": "convolution", "r": args.r, "n": n, "value": text},
                f"r={args.r} n={n} {text}",
            )
        return 0

    window = seq.bell_transform(spec, args.n)
    all_matched = True
    for n in range(1, args.n + 1):
        lhs = conv.convolution_oracle(window, args.r, n, args.delta)
        rhs = closed(args.r, n)
        report = conv.ConvolutionReport(args.r, n, lhs, rhs, lhs == rhs)
        all_matched &= report.matched
        rec = report.to_record()
        emitter.emit(
            rec,
            f"r={rec['r']} n={rec['n']} lhs={rec['lhs']} rhs={rec['rhs']} "
            + ("ok" if rec["matched"] else "MISMATCH"),
        )
    return 0 if all_matched else 1


def _cmd_decompose(args, parser, emitter) -> int:
    if len(args.coeffs) != len(args.init):
        parser.error(
            f"--coeffs and --init must have equal length, got {len(args.coeffs)} and {len(args.init)}"
        )
    rec_spec = RecurrenceSpec(tuple(args.coeffs), tuple(args.init))
    d = rec_spec.order
    if args.n < d - 1:
        parser.error(f"--n must be at least d-1 = {d - 1}")
    lambdas, window = seq.decompose(rec_spec, args.n)
    ok = True
    for n in range(d, len(window)):
        expected = 0
        for i, ci in enumerate(rec_spec.coefficients, start=1):
            expected = expected + ci * window.value_at(n - i)
        ok &= window.value_at(n) == expected
    record = {
        "kind": "decomposition",
        "lambdas": [format_element(v) for v in lambdas],
        "values": [format_element(v) for v in window.values],
        "recurrence_ok": ok,
    }
    plain = "\n".join(
        [
            "lambdas: " + ",".join(record["lambdas"]),
            "sequence: " + ",".join(record["values"]),
            "recurrence: " + ("ok" if ok else "MISMATCH"),
        ]
    )
    emitter.emit(record, plain)
    return 0 if ok else 1


def _cmd_bell(args, parser, emitter) -> int:
    n, k = args.n, args.k
    if args.symbolic:
        if args.x is not None:
            parser.error("--symbolic conflicts with --x")
        text = str(bell_symbolic(n, k))
        emitter.emit({"kind": "bellpoly", "n": n, "k": k, "terms": text}, text)
        return 0
    if args.x is None:
        parser.error("either --symbolic or --x is required")
    if k <= n and len(args.x) < n - k + 1:
        parser.error(f"--x needs at least n-k+1 = {n - k + 1} entries, got {len(args.x)}")
    value = bell_eval(n, k, args.x)
    record = {"kind": "bellpoly", "n": n, "k": k, "value": format_element(value)}
    plain = record["value"]
    ok = True
    if args.cross_check:
        ok = value == bell_eval_recurrence(n, k, args.x)
        record["cross_check"] = "ok" if ok else "mismatch"
        plain += f" (cross-check: {record['cross_check']})"
    emitter.emit(record, plain)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emitter = _Emitter(args.format, args.quiet, sys.stdout)
    handler = {
        "seq": _cmd_seq,
        "conv": _cmd_conv,
        "decompose": _cmd_decompose,
        "bell": _cmd_bell,
    }[args.command]
    return handler(args, parser, emitter)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
