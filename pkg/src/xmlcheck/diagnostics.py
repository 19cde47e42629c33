"""Diagnostic codes, severities, the validation report, and its JSON shape."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, NamedTuple

from .spans import SourceSpan


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@unique
class DiagnosticCode(Enum):
    """Stable identifiers for every well-formedness violation we report."""

    MISSING_DECLARATION = "MISSING_DECLARATION"
    BAD_DECLARATION = "BAD_DECLARATION"
    NO_ROOT_ELEMENT = "NO_ROOT_ELEMENT"
    MULTIPLE_ROOT_ELEMENTS = "MULTIPLE_ROOT_ELEMENTS"
    CONTENT_OUTSIDE_ROOT = "CONTENT_OUTSIDE_ROOT"
    MISMATCHED_END_TAG = "MISMATCHED_END_TAG"
    UNCLOSED_ELEMENT = "UNCLOSED_ELEMENT"
    STRAY_END_TAG = "STRAY_END_TAG"
    MALFORMED_TAG = "MALFORMED_TAG"
    UNQUOTED_ATTRIBUTE_VALUE = "UNQUOTED_ATTRIBUTE_VALUE"
    DUPLICATE_ATTRIBUTE = "DUPLICATE_ATTRIBUTE"
    INVALID_NAME = "INVALID_NAME"
    UNDEFINED_ENTITY = "UNDEFINED_ENTITY"
    BAD_CHAR_REF = "BAD_CHAR_REF"
    UNTERMINATED_COMMENT = "UNTERMINATED_COMMENT"
    DOUBLE_HYPHEN_IN_COMMENT = "DOUBLE_HYPHEN_IN_COMMENT"
    UNTERMINATED_CDATA = "UNTERMINATED_CDATA"
    CDATA_END_IN_TEXT = "CDATA_END_IN_TEXT"
    UNTERMINATED_PI = "UNTERMINATED_PI"
    INVALID_ENCODING = "INVALID_ENCODING"
    UNEXPECTED_EOF = "UNEXPECTED_EOF"


_DESCRIPTIONS: dict[DiagnosticCode, str] = {
    DiagnosticCode.MISSING_DECLARATION: "The document does not begin with an XML declaration.",
    DiagnosticCode.BAD_DECLARATION: "An XML declaration is misplaced or has invalid content.",
    DiagnosticCode.NO_ROOT_ELEMENT: "The document contains no element at all.",
    DiagnosticCode.MULTIPLE_ROOT_ELEMENTS: "More than one element sits at the top level.",
    DiagnosticCode.CONTENT_OUTSIDE_ROOT: "Text or CDATA appears outside the root element.",
    DiagnosticCode.MISMATCHED_END_TAG: "An end tag does not match the innermost open element.",
    DiagnosticCode.UNCLOSED_ELEMENT: "An element is opened but never closed.",
    DiagnosticCode.STRAY_END_TAG: "An end tag appears with no element open.",
    DiagnosticCode.MALFORMED_TAG: "Markup could not be scanned as a complete construct.",
    DiagnosticCode.UNQUOTED_ATTRIBUTE_VALUE: "An attribute value is not enclosed in quotes.",
    DiagnosticCode.DUPLICATE_ATTRIBUTE: "The same attribute name appears twice in one tag.",
    DiagnosticCode.INVALID_NAME: "A character cannot start or continue a name here.",
    DiagnosticCode.UNDEFINED_ENTITY: "An entity reference names no predefined entity.",
    DiagnosticCode.BAD_CHAR_REF: "A character or entity reference is malformed or out of range.",
    DiagnosticCode.UNTERMINATED_COMMENT: "A comment is not closed with '-->'.",
    DiagnosticCode.DOUBLE_HYPHEN_IN_COMMENT: "'--' appears inside a comment.",
    DiagnosticCode.UNTERMINATED_CDATA: "A CDATA section is not closed with ']]>'.",
    DiagnosticCode.CDATA_END_IN_TEXT: "The sequence ']]>' appears in plain text content.",
    DiagnosticCode.UNTERMINATED_PI: "A processing instruction is not closed with '?>'.",
    DiagnosticCode.INVALID_ENCODING: "Input bytes are invalid for the selected encoding.",
    DiagnosticCode.UNEXPECTED_EOF: "The input ends in the middle of a construct.",
}


class CatalogEntry(NamedTuple):
    code: DiagnosticCode
    identifier: str
    default_severity: Severity
    description: str


def default_severity(code: DiagnosticCode) -> Severity:
    """Every code defaults to an error; options may soften individual rules."""
    return Severity.ERROR


def diagnostic_catalog() -> tuple[CatalogEntry, ...]:
    """One entry per diagnostic code, for documentation and UI legends."""
    return tuple(
        CatalogEntry(code, code.value, default_severity(code), _DESCRIPTIONS[code])
        for code in DiagnosticCode
    )


@dataclass(frozen=True)
class Diagnostic:
    """One recorded violation: what, how bad, and exactly where."""

    code: DiagnosticCode
    severity: Severity
    message: str
    span: SourceSpan
    related_span: SourceSpan | None = None

    def sort_key(self) -> tuple[int, int, str]:
        return (self.span.start.line, self.span.start.column, self.code.value)

    def to_json_dict(self) -> dict:
        end = self.span.end
        related = self.related_span.start if self.related_span is not None else None
        return {
            "code": self.code.value,
            "severity": self.severity.value,
            "message": self.message,
            "line": self.span.start.line,
            "column": self.span.start.column,
            "endLine": end.line if end is not None else None,
            "endColumn": end.column if end is not None else None,
            "relatedLine": related.line if related is not None else None,
            "relatedColumn": related.column if related is not None else None,
        }


@dataclass(frozen=True)
class ValidationReport:
    """The overall verdict plus the ordered diagnostic list."""

    well_formed: bool
    diagnostics: tuple[Diagnostic, ...]
    error_count: int
    warning_count: int
    document_uri: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "uri": self.document_uri,
            "wellFormed": self.well_formed,
            "errorCount": self.error_count,
            "warningCount": self.warning_count,
            "diagnostics": [d.to_json_dict() for d in self.diagnostics],
        }


def assemble_report(
    diagnostics: Iterable[Diagnostic],
    document_uri: str | None = None,
    max_errors: int = 100,
) -> ValidationReport:
    """Sort, cap, and count diagnostics into a report.

    When the cap drops anything, the last slot becomes a note saying so; the
    note inherits Error severity if any dropped diagnostic was an error, so a
    truncated report can never claim a broken document is well-formed.
    """
    ordered = sorted(diagnostics, key=Diagnostic.sort_key)
    if len(ordered) > max_errors:
        dropped = ordered[max_errors - 1 :]
        severity = (
            Severity.ERROR
            if any(d.severity is Severity.ERROR for d in dropped)
            else Severity.WARNING
        )
        note = Diagnostic(
            code=dropped[0].code,
            severity=severity,
            message=(
                f"diagnostic limit of {max_errors} reached; "
                f"{len(dropped)} further diagnostics from this point on were suppressed"
            ),
            span=dropped[0].span,
        )
        ordered = ordered[: max_errors - 1] + [note]
        ordered.sort(key=Diagnostic.sort_key)
    errors = sum(1 for d in ordered if d.severity is Severity.ERROR)
    return ValidationReport(
        well_formed=errors == 0,
        diagnostics=tuple(ordered),
        error_count=errors,
        warning_count=len(ordered) - errors,
        document_uri=document_uri,
    )
