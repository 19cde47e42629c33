"""Structural well-formedness checking over the pull reader.

check_document consumes a whole document, applies the structural rules
(single root, properly nested and exactly matched tags, quoted and unique
attributes, declaration placement), folds in every scanner failure, and
returns an ordered, capped ValidationReport. Nothing here raises on bad
input; every problem becomes a positioned diagnostic.
"""

from __future__ import annotations

import re
from typing import Iterable

from .diagnostics import (
    Diagnostic,
    DiagnosticCode,
    Severity,
    ValidationReport,
    assemble_report,
    default_severity,
    diagnostic_catalog,
)
from .names import is_name_char
from .options import DEFAULT_OPTIONS, ParserOptions
from .reader import (
    XML_WHITESPACE,
    EndOfInput,
    MalformedToken,
    NodeEvent,
    NodeKind,
    Reader,
)
from .spans import PositionTracker, SourcePosition, SourceSpan

__all__ = ["check_document", "diagnostic_catalog"]

_ENCODING_NAME = re.compile(r"[A-Za-z][A-Za-z0-9._-]*$")


def _declaration_problem(event: NodeEvent) -> tuple[str, SourceSpan] | None:
    """Validate declaration pseudo-attributes; return the first problem."""
    attrs = event.attributes
    if not attrs or attrs[0].name != "version":
        at = attrs[0].name_span if attrs else event.span
        return ("XML declaration must start with version=\"1.0\"", at)
    version = attrs[0]
    if version.value not in ("1.0", "1.1"):
        return (
            f"XML declaration version must be \"1.0\" or \"1.1\", got \"{version.value}\"",
            version.value_span,
        )
    seen_encoding = False
    seen_standalone = False
    for attr in attrs[1:]:
        if attr.name == "encoding":
            if seen_encoding or seen_standalone:
                return (
                    "encoding must appear exactly once, before standalone",
                    attr.name_span,
                )
            if not _ENCODING_NAME.match(attr.value):
                return (
                    f"\"{attr.value}\" is not a valid encoding name",
                    attr.value_span,
                )
            seen_encoding = True
        elif attr.name == "standalone":
            if seen_standalone:
                return ("standalone must appear at most once", attr.name_span)
            if attr.value not in ("yes", "no"):
                return (
                    f"standalone must be \"yes\" or \"no\", got \"{attr.value}\"",
                    attr.value_span,
                )
            seen_standalone = True
        elif attr.name == "version":
            return ("version must appear exactly once, first", attr.name_span)
        else:
            return (
                f"unknown XML declaration attribute '{attr.name}'",
                attr.name_span,
            )
    return None


def _begins_with_declaration_attempt(source: str) -> bool:
    """True when the document opens with a '<?xml' construct, even a broken one.

    Used to keep MISSING_DECLARATION from piling on top of the specific
    diagnostics a malformed or unterminated declaration already gets.
    """
    text = source.removeprefix("﻿")
    if text[:5].lower() != "<?xml":
        return False
    return len(text) == 5 or not is_name_char(text[5])


def _first_non_whitespace(raw: str, start: SourcePosition) -> SourcePosition | None:
    for i, ch in enumerate(raw):
        if ch not in XML_WHITESPACE:
            tracker = PositionTracker(start.line, start.column)
            tracker.feed(raw[:i])
            return tracker.position
    return None


def check_document(
    source: str,
    document_uri: str | None = None,
    options: ParserOptions | None = None,
    *,
    extra_diagnostics: Iterable[Diagnostic] = (),
) -> ValidationReport:
    """Check a whole document and return the report. Pure and reentrant."""
    options = options if options is not None else DEFAULT_OPTIONS
    reader = Reader(source, document_uri, options)
    diagnostics: list[Diagnostic] = list(extra_diagnostics)
    open_elements: list[tuple[str, SourceSpan]] = []
    root_seen = False
    first_outcome: NodeEvent | MalformedToken | None = None

    def report(
        code: DiagnosticCode,
        message: str,
        span: SourceSpan,
        related: SourceSpan | None = None,
        severity: Severity | None = None,
    ) -> None:
        diagnostics.append(
            Diagnostic(code, severity or default_severity(code), message, span, related)
        )

    while True:
        outcome = reader.read()
        if isinstance(outcome, EndOfInput):
            end_position = outcome.position
            break
        if first_outcome is None:
            first_outcome = outcome
        if isinstance(outcome, MalformedToken):
            report(outcome.code, outcome.message, outcome.span)
            continue
        event = outcome
        kind = event.kind
        if kind is NodeKind.DECLARATION:
            if event is not first_outcome:
                report(
                    DiagnosticCode.BAD_DECLARATION,
                    "XML declaration must be the very first item in the document",
                    event.span,
                )
            else:
                problem = _declaration_problem(event)
                if problem is not None:
                    message, at = problem
                    report(DiagnosticCode.BAD_DECLARATION, message, at)
        elif kind is NodeKind.START_ELEMENT:
            if not open_elements:
                if root_seen:
                    report(
                        DiagnosticCode.MULTIPLE_ROOT_ELEMENTS,
                        f"element '{event.name}' is a second top-level element; "
                        "a document has exactly one root element",
                        event.span,
                    )
                root_seen = True
            seen_attrs: dict[str, SourceSpan] = {}
            for attr in event.attributes:
                if attr.name in seen_attrs:
                    report(
                        DiagnosticCode.DUPLICATE_ATTRIBUTE,
                        f"attribute '{attr.name}' appears more than once in this tag",
                        attr.name_span,
                        related=seen_attrs[attr.name],
                    )
                else:
                    seen_attrs[attr.name] = attr.name_span
            if not event.is_empty_element:
                open_elements.append((event.name, event.span))
        elif kind is NodeKind.END_ELEMENT:
            if not open_elements:
                report(
                    DiagnosticCode.STRAY_END_TAG,
                    f"end tag '</{event.name}>' has no matching open element",
                    event.span,
                )
            elif open_elements[-1][0] == event.name:
                open_elements.pop()
            else:
                top_name, top_span = open_elements[-1]
                report(
                    DiagnosticCode.MISMATCHED_END_TAG,
                    f"end tag '</{event.name}>' does not match open element "
                    f"'{top_name}' (names are case sensitive and must match exactly)",
                    event.span,
                    related=top_span,
                )
                match = next(
                    (
                        i
                        for i in range(len(open_elements) - 2, -1, -1)
                        if open_elements[i][0] == event.name
                    ),
                    None,
                )
                if match is not None:
                    # Close everything above the matching ancestor; the top's
                    # own problem is already the mismatch just reported.
                    for inner_name, inner_span in open_elements[match + 1 : -1]:
                        report(
                            DiagnosticCode.UNCLOSED_ELEMENT,
                            f"element '{inner_name}' is never closed",
                            event.span,
                            related=inner_span,
                        )
                    del open_elements[match:]
        elif kind is NodeKind.TEXT:
            if not open_elements:
                at = _first_non_whitespace(event.raw_text, event.span.start)
                if at is not None:
                    report(
                        DiagnosticCode.CONTENT_OUTSIDE_ROOT,
                        "content is not allowed outside the root element",
                        SourceSpan(at),
                    )
        elif kind is NodeKind.CDATA:
            if not open_elements:
                report(
                    DiagnosticCode.CONTENT_OUTSIDE_ROOT,
                    "a CDATA section is not allowed outside the root element",
                    event.span,
                )
        # Comments and processing instructions are legal anywhere.

    for name, span in reversed(open_elements):
        report(
            DiagnosticCode.UNCLOSED_ELEMENT,
            f"element '{name}' is never closed",
            SourceSpan(end_position),
            related=span,
        )
    if not root_seen:
        report(
            DiagnosticCode.NO_ROOT_ELEMENT,
            "document has no root element",
            SourceSpan(end_position),
        )
    declaration_first = (
        isinstance(first_outcome, NodeEvent)
        and first_outcome.kind is NodeKind.DECLARATION
    ) or (
        isinstance(first_outcome, MalformedToken)
        and first_outcome.code is DiagnosticCode.BAD_DECLARATION
    ) or _begins_with_declaration_attempt(source)
    if options.require_declaration and not declaration_first:
        report(
            DiagnosticCode.MISSING_DECLARATION,
            "document does not begin with an XML declaration "
            "(expected something like <?xml version=\"1.0\"?>)",
            SourceSpan(SourcePosition(1, 1)),
            severity=options.treat_missing_declaration_as,
        )
    return assemble_report(diagnostics, document_uri, options.max_errors)
