"""Command-line front door: validate files, print reports, set exit codes.

Exit codes: 0 every file well-formed, 1 at least one file is not, 2 usage or
I/O error. Text output is one compiler-style line per diagnostic
(path:line:col: severity: CODE: message) plus a per-file summary; --json
emits an array of report objects instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .docio import load_file
from .options import EncodingMode, ParserOptions
from .wellformed import check_document

_PROG = "xmlcheck"


@dataclass
class CliInvocation:
    command: str
    paths: list[str] = field(default_factory=list)
    require_declaration: bool = True
    json_output: bool = False
    max_errors: int = 100
    encoding: EncodingMode = EncodingMode.UTF8
    quiet: bool = False


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=_PROG, description="Check XML files for well-formedness."
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    validate = commands.add_parser(
        "validate", help="validate one or more files and report every violation"
    )
    validate.add_argument("paths", nargs="+", metavar="path", help="XML file(s) to check")
    validate.add_argument(
        "--json", action="store_true", help="emit a JSON report array instead of text"
    )
    validate.add_argument(
        "--no-require-declaration",
        dest="require_declaration",
        action="store_false",
        help="do not demand an <?xml ...?> declaration",
    )
    validate.add_argument(
        "--max-errors", type=int, default=100, metavar="N",
        help="cap the number of reported diagnostics per file (default 100)",
    )
    validate.add_argument(
        "--encoding", choices=["utf8", "ascii"], default="utf8",
        help="decoder to use when reading files (default utf8)",
    )
    validate.add_argument(
        "--quiet", action="store_true", help="suppress output; exit code only"
    )

    commands.add_parser("version", help="print the version and exit")

    fmt_check = commands.add_parser(
        "fmt-check", help="reserved for a future formatting check"
    )
    fmt_check.add_argument("paths", nargs="*", metavar="path")
    return parser


def parse_argv(argv: list[str] | None = None) -> CliInvocation:
    """Parse arguments; argparse exits with code 2 on usage errors."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "validate":
        if args.max_errors < 1:
            parser.error("--max-errors must be at least 1")
        return CliInvocation(
            command="validate",
            paths=list(args.paths),
            require_declaration=args.require_declaration,
            json_output=args.json,
            max_errors=args.max_errors,
            encoding=EncodingMode(args.encoding),
            quiet=args.quiet,
        )
    return CliInvocation(command=args.command, paths=getattr(args, "paths", []))


def run(invocation: CliInvocation) -> int:
    if invocation.command == "version":
        print(f"{_PROG} {__version__}")
        return 0
    if invocation.command == "fmt-check":
        print(f"{_PROG}: fmt-check is reserved and not implemented yet", file=sys.stderr)
        return 2

    options = ParserOptions(
        require_declaration=invocation.require_declaration,
        max_errors=invocation.max_errors,
        encoding_mode=invocation.encoding,
    )
    io_error = False
    any_not_well_formed = False
    json_reports: list[dict] = []
    for path in invocation.paths:
        try:
            document = load_file(path, invocation.encoding)
        except OSError as err:
            reason = err.strerror or str(err)
            print(f"{_PROG}: {path}: {reason}", file=sys.stderr)
            io_error = True
            continue
        report = check_document(
            document.text,
            document_uri=path,
            options=options,
            extra_diagnostics=document.load_diagnostics,
        )
        if not report.well_formed:
            any_not_well_formed = True
        if invocation.quiet:
            continue
        if invocation.json_output:
            json_reports.append(report.to_json_dict())
            continue
        for diagnostic in report.diagnostics:
            start = diagnostic.span.start
            print(
                f"{path}:{start.line}:{start.column}: {diagnostic.severity.value}: "
                f"{diagnostic.code.value}: {diagnostic.message}"
            )
        if report.well_formed:
            print(f"{path}: well-formed")
        else:
            print(
                f"{path}: NOT well-formed "
                f"({report.error_count} errors, {report.warning_count} warnings)"
            )
    if invocation.json_output and not invocation.quiet:
        print(json.dumps(json_reports, indent=2))
    if io_error:
        return 2
    return 1 if any_not_well_formed else 0


def main(argv: list[str] | None = None) -> int:
    return run(parse_argv(argv))


if __name__ == "__main__":
    sys.exit(main())
