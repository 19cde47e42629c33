"""xmlcheck: a from-scratch, non-validating XML well-formedness checker.

The package is organized as a pull reader (reader), a structural checker
(wellformed), file and serialization plumbing (docio), and two front ends
(cli, service). Everything reports violations as positioned diagnostics
instead of raising.
"""

__version__ = "0.1.0"

from .diagnostics import (
    CatalogEntry,
    Diagnostic,
    DiagnosticCode,
    Severity,
    ValidationReport,
    diagnostic_catalog,
)
from .docio import (
    DetectedEncoding,
    LoadedDocument,
    SerializeError,
    load_file,
    save_file,
    serialize_events,
)
from .options import DEFAULT_OPTIONS, EncodingMode, ParserOptions
from .reader import (
    Attribute,
    EndOfInput,
    MalformedToken,
    NodeEvent,
    NodeKind,
    Reader,
    resolve_references,
)
from .spans import SourcePosition, SourceSpan
from .wellformed import check_document

__all__ = [
    "Attribute",
    "CatalogEntry",
    "DEFAULT_OPTIONS",
    "DetectedEncoding",
    "Diagnostic",
    "DiagnosticCode",
    "EncodingMode",
    "EndOfInput",
    "LoadedDocument",
    "MalformedToken",
    "NodeEvent",
    "NodeKind",
    "ParserOptions",
    "Reader",
    "SerializeError",
    "Severity",
    "SourcePosition",
    "SourceSpan",
    "ValidationReport",
    "check_document",
    "diagnostic_catalog",
    "load_file",
    "resolve_references",
    "save_file",
    "serialize_events",
    "__version__",
]
