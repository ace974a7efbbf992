"""Command-line interface: verification suites, tables, and expansion.

``iqsl2 verify <suite>`` runs one verification suite and exits zero iff
every check passed.  ``iqsl2 table`` emits the structure-constant table.
``iqsl2 expand`` prints a divided power or coproduct in a chosen
presentation.  All output uses the canonical coefficient grammar, so equal
elements serialize byte-identically.
"""

from __future__ import annotations

import argparse
import sys

from .errors import IqslError
from .verify import (
    SUITES,
    emit_table,
    expand_comult,
    expand_idp,
    run_suite,
)

_FAMILIES = ("ev", "odd")
_WITNESS_STDOUT_LIMIT = 2000


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="iqsl2",
        description=(
            "Exact verification of divided-power multiplication and "
            "comultiplication formulas, structure-constant tables, and "
            "element expansion."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify",
        help="run a verification suite",
        description=(
            "Run one verification suite and print a per-check summary. "
            "Exit status is zero iff every check passed. For element-level "
            "suites --max replaces the default grid bound (subject to the "
            "IQSL2_MAX_N ceiling, default 24); for the qidentities suite "
            "the per-identity grids are fixed caps and --max can only "
            "shrink them."
        ),
    )
    p_verify.add_argument("suite", choices=SUITES, metavar="suite",
                          help="one of: " + ", ".join(SUITES))
    p_verify.add_argument("--max", type=int, default=None, metavar="N",
                          help="grid bound (default: per-suite)")
    p_verify.add_argument("--varsigma", choices=("generic", "q-inverse"),
                          default="generic",
                          help="coefficient mode (default: generic)")
    p_verify.add_argument("--json", metavar="PATH", default=None,
                          help="also write the full report as JSON")

    p_table = sub.add_parser(
        "table",
        help="emit the structure-constant table",
        description=(
            "Emit one family's multiplication structure constants for all "
            "m + n <= N as CSV or JSON."
        ),
    )
    p_table.add_argument("--family", choices=_FAMILIES, required=True)
    p_table.add_argument("--max", type=int, required=True, metavar="N",
                         help="maximum total degree m + n")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", metavar="PATH", default=None,
                         help="output file (default: stdout)")

    p_expand = sub.add_parser(
        "expand",
        help="print a divided power or coproduct",
        description=(
            "Serialize one element canonically. 'idp' prints a divided "
            "power (--basis B for the polynomial presentation, pbw for the "
            "normal form); 'comult' prints a coproduct (--form theorem for "
            "the closed formula, fhy for its reversed-order variant, direct "
            "for the coproduct of the normal form). Equal presentations "
            "serialize byte-identically."
        ),
    )
    p_expand.add_argument("kind", choices=("idp", "comult"))
    p_expand.add_argument("--family", choices=_FAMILIES, required=True)
    p_expand.add_argument("--n", type=int, required=True)
    p_expand.add_argument("--basis", choices=("B", "pbw"), default=None,
                          help="presentation for 'idp' (default: B)")
    p_expand.add_argument("--form", choices=("theorem", "fhy", "direct"),
                          default=None,
                          help="presentation for 'comult' (default: theorem)")
    return parser


def _print_report(report, out=None):
    out = out if out is not None else sys.stdout
    good, total = report.counts
    params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    print(
        f"suite {report.suite}: {good}/{total} checks passed "
        f"({params}) [{report.wall_time_s}s]",
        file=out,
    )
    failures = report.failures()
    for c in failures[:20]:
        witness = c.witness or ""
        if len(witness) > _WITNESS_STDOUT_LIMIT:
            witness = witness[:_WITNESS_STDOUT_LIMIT] + " ... (truncated; use --json for the full witness)"
        print(f"FAIL {c.id} {c.params}: {witness}", file=out)
    if len(failures) > 20:
        print(f"... and {len(failures) - 20} more failures", file=out)
    print("PASS" if report.passed else "FAIL", file=out)


def _cmd_verify(args):
    mode = "specialized" if args.varsigma == "q-inverse" else "generic"
    report = run_suite(args.suite, args.max, mode)
    _print_report(report)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    return 0 if report.passed else 1


def _cmd_table(args):
    text = emit_table(args.family, args.max, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_expand(args, parser):
    if args.kind == "idp":
        if args.form is not None:
            parser.error("--form applies only to 'expand comult'")
        text = expand_idp(args.family, args.n, args.basis or "B")
    else:
        if args.basis is not None:
            parser.error("--basis applies only to 'expand idp'")
        text = expand_comult(args.family, args.n, args.form or "theorem")
    print(text)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            return _cmd_table(args)
        return _cmd_expand(args, parser)
    except (IqslError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
