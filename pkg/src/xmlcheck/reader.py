"""Pull-style XML reader: advances node by node with exact source positions.

The reader never raises on malformed input. Each scanning failure surfaces as
a MalformedToken outcome carrying a diagnostic code, the failure span, and the
position where scanning resumed. Where a broken tag can still be understood
(for example an unquoted attribute value), the reader emits the recovered node
event first and the MalformedToken(s) for its defects right after it, so
downstream structural checking keeps working. Structural rules themselves
(matching tags, single root, declaration placement) live in the
wellformedness checker, not here.

Resynchronization after an unrecoverable failure: inside a broken tag, skip
past the next '>' when it appears before the next '<'; otherwise continue at
the next '<' (or end of input).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterator

from .diagnostics import Diagnostic, DiagnosticCode, Severity
from .names import is_name_char, is_name_start_char
from .options import DEFAULT_OPTIONS, ParserOptions
from .spans import PositionTracker, SourcePosition, SourceSpan

# The XML S production; deliberately narrower than str.isspace().
XML_WHITESPACE = " \t\r\n"

PREDEFINED_ENTITIES = {
    "amp": "&",
    "lt": "<",
    "gt": ">",
    "apos": "'",
    "quot": '"',
}


class NodeKind(Enum):
    DECLARATION = auto()
    START_ELEMENT = auto()
    END_ELEMENT = auto()
    TEXT = auto()
    COMMENT = auto()
    PROCESSING_INSTRUCTION = auto()
    CDATA = auto()


@dataclass(frozen=True)
class Attribute:
    """One attribute as written, with references in the value resolved.

    value_span covers the value token as it appears in the source, quotes
    included when present; spans use exclusive end positions.
    """

    name: str
    value: str
    name_span: SourceSpan
    value_span: SourceSpan


@dataclass(frozen=True)
class NodeEvent:
    """One parsed document item.

    depth counts open ancestors: a start tag and its end tag share a depth,
    content between them sits one deeper. raw_text keeps the unresolved
    source slice of a TEXT node so callers can map offsets back to columns.
    """

    kind: NodeKind
    span: SourceSpan
    name: str = ""
    attributes: tuple[Attribute, ...] = ()
    text_content: str = ""
    is_empty_element: bool = False
    depth: int = 0
    raw_text: str = ""


@dataclass(frozen=True)
class MalformedToken:
    """A scanning failure: what was expected, where, and where scanning resumed."""

    code: DiagnosticCode
    message: str
    span: SourceSpan
    resumed_at: SourcePosition


@dataclass(frozen=True)
class EndOfInput:
    """Returned forever once the source is exhausted."""

    position: SourcePosition


ReadOutcome = NodeEvent | MalformedToken | EndOfInput

# (code, message, span) triples collected while a construct is being scanned.
_Issue = tuple[DiagnosticCode, str, SourceSpan]

_VALID_CHAR_RANGES = ((0x20, 0xD7FF), (0xE000, 0xFFFD), (0x10000, 0x10FFFF))


def _is_xml_char(cp: int) -> bool:
    if cp in (0x9, 0xA, 0xD):
        return True
    return any(lo <= cp <= hi for lo, hi in _VALID_CHAR_RANGES)


def _describe_char(ch: str) -> str:
    if ch in XML_WHITESPACE:
        return "whitespace"
    if ch.isprintable():
        return f"'{ch}'"
    return f"U+{ord(ch):04X}"


def _parse_reference(raw: str, i: int) -> tuple[int, str, tuple[DiagnosticCode, str] | None]:
    """Parse one reference starting at raw[i] == '&'.

    Returns (chars consumed, replacement text, problem). Malformed or unknown
    references pass the consumed source through literally.
    """
    n = len(raw)
    j = i + 1
    if j < n and raw[j] == "#":
        j += 1
        if j < n and raw[j] == "x":
            j += 1
            digits = "0123456789abcdefABCDEF"
            base = 16
        else:
            digits = "0123456789"
            base = 10
        k = j
        while k < n and raw[k] in digits:
            k += 1
        if k == j or k >= n or raw[k] != ";":
            consumed = max(k, j) - i
            return consumed, raw[i : i + consumed], (
                DiagnosticCode.BAD_CHAR_REF,
                "character reference is malformed: expected digits followed by ';'",
            )
        cp = int(raw[j:k], base)
        if not _is_xml_char(cp):
            return k + 1 - i, raw[i : k + 1], (
                DiagnosticCode.BAD_CHAR_REF,
                f"character reference '&{raw[i + 1:k]};' names an invalid code point",
            )
        return k + 1 - i, chr(cp), None
    k = j
    if k < n and is_name_start_char(raw[k]):
        k += 1
        while k < n and is_name_char(raw[k]):
            k += 1
    if k == j:
        return 1, "&", (
            DiagnosticCode.BAD_CHAR_REF,
            "'&' must begin a reference; use '&amp;' for a literal ampersand",
        )
    name = raw[j:k]
    if k >= n or raw[k] != ";":
        return k - i, raw[i:k], (
            DiagnosticCode.BAD_CHAR_REF,
            f"reference to '{name}' is not terminated: expected ';'",
        )
    if name in PREDEFINED_ENTITIES:
        return k + 1 - i, PREDEFINED_ENTITIES[name], None
    return k + 1 - i, raw[i : k + 1], (
        DiagnosticCode.UNDEFINED_ENTITY,
        f"reference to undefined entity '&{name};' (no DTD is processed; "
        "only amp, lt, gt, apos, quot are predefined)",
    )


def _resolve_content(
    raw: str,
    start: SourcePosition,
    *,
    flag_cdata_end: bool = False,
    flag_lt: bool = False,
) -> tuple[str, list[Diagnostic]]:
    """Resolve references in a raw slice, collecting positioned diagnostics.

    flag_cdata_end reports literal ']]>' (text content); flag_lt reports
    literal '<' (attribute values). Both pass the offending text through.
    """
    out: list[str] = []
    diagnostics: list[Diagnostic] = []
    tracker = PositionTracker(start.line, start.column)
    i, n = 0, len(raw)
    while i < n:
        # Jump to the next character of interest; everything between is plain.
        marks = [raw.find("&", i)]
        if flag_cdata_end:
            marks.append(raw.find("]]>", i))
        if flag_lt:
            marks.append(raw.find("<", i))
        marks = [m for m in marks if m != -1]
        if not marks:
            out.append(raw[i:])
            break
        j = min(marks)
        plain = raw[i:j]
        out.append(plain)
        tracker.feed(plain)
        at = tracker.position
        if raw[j] == "&":
            consumed, replacement, problem = _parse_reference(raw, j)
            if problem is not None:
                code, message = problem
                diagnostics.append(
                    Diagnostic(code, Severity.ERROR, message, SourceSpan(at))
                )
            out.append(replacement)
            tracker.feed(raw[j : j + consumed])
            i = j + consumed
        elif raw[j] == "]":
            diagnostics.append(
                Diagnostic(
                    DiagnosticCode.CDATA_END_IN_TEXT,
                    Severity.ERROR,
                    "']]>' is not allowed in text content; write ']]&gt;' instead",
                    SourceSpan(at),
                )
            )
            out.append("]]>")
            tracker.feed("]]>")
            i = j + 3
        else:
            diagnostics.append(
                Diagnostic(
                    DiagnosticCode.MALFORMED_TAG,
                    Severity.ERROR,
                    "'<' is not allowed in an attribute value (missing closing quote?)",
                    SourceSpan(at),
                )
            )
            out.append("<")
            tracker.feed("<")
            i = j + 1
    return "".join(out), diagnostics


def resolve_references(raw: str, span: SourceSpan) -> tuple[str, list[Diagnostic]]:
    """Replace predefined entities and numeric character references in raw.

    Unknown entity names and malformed references are passed through
    literally and reported as diagnostics positioned inside span.
    """
    return _resolve_content(raw, span.start)


class Reader:
    """Single-pass pull reader over a character sequence.

    Call read() repeatedly; after the input is exhausted every further call
    returns the same EndOfInput. Iterating the reader yields node events and
    malformed tokens, stopping at end of input.
    """

    def __init__(
        self,
        source: str,
        document_uri: str | None = None,
        options: ParserOptions | None = None,
    ) -> None:
        self.source = source
        self.document_uri = document_uri
        self.options = options if options is not None else DEFAULT_OPTIONS
        self.element_stack: list[tuple[str, SourceSpan]] = []
        self._pos = 0
        self._tracker = PositionTracker()
        self._pending: deque[NodeEvent | MalformedToken] = deque()
        if source.startswith("﻿"):
            # A stray byte-order mark; document loading strips these on decode.
            self._advance_to(1)

    @property
    def position(self) -> SourcePosition:
        return self._tracker.position

    def read(self) -> ReadOutcome:
        if self._pending:
            return self._pending.popleft()
        if self._pos >= len(self.source):
            return EndOfInput(self.position)
        if self.source[self._pos] == "<":
            outcomes = self._scan_markup()
        else:
            outcomes = self._scan_text()
        # A fatal issue anchors at the construct start and may precede the
        # spans of recoverable issues found earlier in the same construct;
        # deliver everything in document order (stable, so a recovered event
        # stays ahead of same-position tokens).
        outcomes.sort(key=lambda o: o.span.start)
        self._pending.extend(outcomes)
        return self._pending.popleft()

    def __iter__(self) -> Iterator[NodeEvent | MalformedToken]:
        while True:
            outcome = self.read()
            if isinstance(outcome, EndOfInput):
                return
            yield outcome

    # -- cursor helpers ----------------------------------------------------

    def _advance_to(self, index: int) -> None:
        if index > self._pos:
            self._tracker.feed(self.source[self._pos : index])
            self._pos = index

    def _at_end(self) -> bool:
        return self._pos >= len(self.source)

    def _current(self) -> str:
        return self.source[self._pos] if self._pos < len(self.source) else ""

    def _skip_whitespace(self) -> int:
        start = self._pos
        src, n = self.source, len(self.source)
        i = start
        while i < n and src[i] in XML_WHITESPACE:
            i += 1
        self._advance_to(i)
        return i - start

    def _scan_name(self) -> str:
        src, n = self.source, len(self.source)
        i = self._pos
        j = i + 1
        while j < n and is_name_char(src[j]):
            j += 1
        self._advance_to(j)
        return src[i:j]

    def _malformed(self, code: DiagnosticCode, message: str, span: SourceSpan) -> MalformedToken:
        # Built after the cursor has settled so resumed_at is accurate.
        return MalformedToken(code=code, message=message, span=span, resumed_at=self.position)

    def _issues_to_tokens(self, issues: list[_Issue]) -> list[MalformedToken]:
        return [self._malformed(code, message, span) for code, message, span in issues]

    def _resync_in_tag(self) -> None:
        src = self.source
        gt = src.find(">", self._pos)
        lt = src.find("<", self._pos)
        if gt != -1 and (lt == -1 or gt < lt):
            self._advance_to(gt + 1)
        elif lt != -1:
            self._advance_to(lt)
        else:
            self._advance_to(len(src))

    # -- content -----------------------------------------------------------

    def _scan_text(self) -> list[ReadOutcome]:
        start_pos = self.position
        start = self._pos
        end = self.source.find("<", start)
        if end == -1:
            end = len(self.source)
        raw = self.source[start:end]
        if "&" not in raw and "]]>" not in raw:
            resolved, ref_diagnostics = raw, []
        else:
            resolved, ref_diagnostics = _resolve_content(raw, start_pos, flag_cdata_end=True)
        self._advance_to(end)
        event = NodeEvent(
            kind=NodeKind.TEXT,
            span=SourceSpan(start_pos, self.position),
            text_content=resolved,
            depth=len(self.element_stack),
            raw_text=raw,
        )
        return [event] + [
            self._malformed(d.code, d.message, d.span) for d in ref_diagnostics
        ]

    # -- markup dispatch ---------------------------------------------------

    def _scan_markup(self) -> list[ReadOutcome]:
        src = self.source
        start = self._pos
        start_pos = self.position
        nxt = src[start + 1] if start + 1 < len(src) else ""
        if nxt == "/":
            return self._scan_end_tag(start_pos)
        if nxt == "!":
            return self._scan_bang(start_pos)
        if nxt == "?":
            return self._scan_pi_or_declaration(start_pos)
        if nxt == "":
            self._advance_to(len(src))
            return [
                self._malformed(
                    DiagnosticCode.UNEXPECTED_EOF,
                    "unexpected end of input after '<'",
                    SourceSpan(start_pos),
                )
            ]
        if is_name_start_char(nxt):
            return self._scan_start_tag(start_pos)
        self._advance_to(start + 1)
        bad_span = SourceSpan(self.position)
        message = f"expected a name after '<', found {_describe_char(nxt)}"
        self._resync_in_tag()
        return [self._malformed(DiagnosticCode.INVALID_NAME, message, bad_span)]

    # -- tags ----------------------------------------------------------------

    def _scan_start_tag(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        self._advance_to(self._pos + 1)  # '<'
        name = self._scan_name()
        attributes, issues, terminator = self._scan_tag_attributes(
            construct=f"tag '<{name}'", start_pos=start_pos, declaration=False
        )
        if terminator is None:
            return self._issues_to_tokens(issues)
        event = NodeEvent(
            kind=NodeKind.START_ELEMENT,
            span=SourceSpan(start_pos, self.position),
            name=name,
            attributes=tuple(attributes),
            is_empty_element=terminator == "/>",
            depth=len(self.element_stack),
        )
        if terminator != "/>":
            self.element_stack.append((name, event.span))
        return [event] + self._issues_to_tokens(issues)

    def _scan_end_tag(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        src = self.source
        self._advance_to(self._pos + 2)  # '</'
        if self._at_end():
            return [
                self._malformed(
                    DiagnosticCode.UNEXPECTED_EOF,
                    "end tag is not closed: expected a name and '>' before end of input",
                    SourceSpan(start_pos),
                )
            ]
        ch = self._current()
        if not is_name_start_char(ch):
            bad_span = SourceSpan(self.position)
            message = f"expected an element name after '</', found {_describe_char(ch)}"
            self._resync_in_tag()
            return [self._malformed(DiagnosticCode.INVALID_NAME, message, bad_span)]
        name = self._scan_name()
        self._skip_whitespace()
        issues: list[_Issue] = []
        if self._at_end():
            return [
                self._malformed(
                    DiagnosticCode.UNEXPECTED_EOF,
                    f"end tag '</{name}' is not closed: expected '>' before end of input",
                    SourceSpan(start_pos),
                )
            ]
        if self._current() != ">":
            gt = src.find(">", self._pos)
            lt = src.find("<", self._pos)
            if gt == -1 or (lt != -1 and lt < gt):
                message = f"end tag '</{name}' is not closed: expected '>' before the next '<'"
                self._resync_in_tag()
                return [self._malformed(DiagnosticCode.MALFORMED_TAG, message, SourceSpan(start_pos))]
            issues.append(
                (
                    DiagnosticCode.MALFORMED_TAG,
                    f"end tag '</{name}' contains unexpected {_describe_char(self._current())}: expected '>'",
                    SourceSpan(self.position),
                )
            )
            self._advance_to(gt)
        self._advance_to(self._pos + 1)  # '>'
        depth = max(len(self.element_stack) - 1, 0)
        if self.element_stack:
            self.element_stack.pop()
        event = NodeEvent(
            kind=NodeKind.END_ELEMENT,
            span=SourceSpan(start_pos, self.position),
            name=name,
            depth=depth,
        )
        return [event] + self._issues_to_tokens(issues)

    def _scan_tag_attributes(
        self, construct: str, start_pos: SourcePosition, declaration: bool
    ) -> tuple[list[Attribute], list[_Issue], str | None]:
        """Scan attributes up to the tag terminator.

        Returns (attributes, issues, terminator); terminator is '>', '/>' or
        '?>', or None when the construct had to be abandoned (the fatal issue
        is then the last entry and the cursor is already resynchronized).
        """
        src = self.source
        attributes: list[Attribute] = []
        issues: list[_Issue] = []
        junk_reported = False
        eof_code = DiagnosticCode.UNTERMINATED_PI if declaration else DiagnosticCode.UNEXPECTED_EOF
        closer = "'?>'" if declaration else "'>'"
        while True:
            ws = self._skip_whitespace()
            if self._at_end():
                issues.append(
                    (
                        eof_code,
                        f"{construct} is not closed: expected {closer} before end of input",
                        SourceSpan(start_pos),
                    )
                )
                return attributes, issues, None
            ch = self._current()
            if declaration and ch == "?" and src.startswith("?>", self._pos):
                self._advance_to(self._pos + 2)
                return attributes, issues, "?>"
            if ch == ">":
                self._advance_to(self._pos + 1)
                if declaration:
                    issues.append(
                        (
                            DiagnosticCode.BAD_DECLARATION,
                            "XML declaration must be closed with '?>', found '>'",
                            SourceSpan(self.position),
                        )
                    )
                return attributes, issues, ">"
            if not declaration and ch == "/":
                if src.startswith("/>", self._pos):
                    self._advance_to(self._pos + 2)
                    return attributes, issues, "/>"
                issues.append(
                    (
                        DiagnosticCode.MALFORMED_TAG,
                        f"{construct}: expected '/>' after '/'",
                        SourceSpan(self.position),
                    )
                )
                self._advance_to(self._pos + 1)
                continue
            if ch == "<":
                issues.append(
                    (
                        DiagnosticCode.MALFORMED_TAG,
                        f"{construct} is not closed: expected {closer} before the next '<'",
                        SourceSpan(start_pos),
                    )
                )
                return attributes, issues, None  # resume at the '<'
            if is_name_start_char(ch):
                if ws == 0 and attributes:
                    issues.append(
                        (
                            DiagnosticCode.MALFORMED_TAG,
                            "expected whitespace before the next attribute",
                            SourceSpan(self.position),
                        )
                    )
                fatal = self._scan_attribute(construct, start_pos, declaration, attributes, issues)
                if fatal:
                    return attributes, issues, None
                continue
            # Junk where an attribute name belongs: report once, skip ahead.
            if not junk_reported:
                issues.append(
                    (
                        DiagnosticCode.INVALID_NAME,
                        f"expected an attribute name or {closer} in {construct}, "
                        f"found {_describe_char(ch)}",
                        SourceSpan(self.position),
                    )
                )
                junk_reported = True
            stop = "<?" if declaration else "</>"
            i, n = self._pos + 1, len(src)  # always consume the junk character
            while i < n and src[i] not in stop:
                i += 1
            self._advance_to(i)

    def _scan_attribute(
        self,
        construct: str,
        start_pos: SourcePosition,
        declaration: bool,
        attributes: list[Attribute],
        issues: list[_Issue],
    ) -> bool:
        """Scan one name[=value]; append to attributes/issues. True means fatal."""
        src = self.source
        name_start = self.position
        name = self._scan_name()
        name_span = SourceSpan(name_start, self.position)
        self._skip_whitespace()
        eof_code = DiagnosticCode.UNTERMINATED_PI if declaration else DiagnosticCode.UNEXPECTED_EOF
        closer = "'?>'" if declaration else "'>'"
        if self._current() != "=":
            issues.append(
                (
                    DiagnosticCode.MALFORMED_TAG,
                    f"attribute '{name}' has no value: expected '='",
                    SourceSpan(self.position) if not self._at_end() else SourceSpan(name_span.start),
                )
            )
            attributes.append(Attribute(name, "", name_span, SourceSpan(self.position)))
            return False
        self._advance_to(self._pos + 1)  # '='
        self._skip_whitespace()
        if self._at_end():
            issues.append(
                (
                    eof_code,
                    f"{construct} is not closed: expected {closer} before end of input",
                    SourceSpan(start_pos),
                )
            )
            return True
        ch = self._current()
        if ch in "\"'":
            value_start = self.position
            self._advance_to(self._pos + 1)
            content_start = self.position
            closing = src.find(ch, self._pos)
            if closing == -1:
                self._advance_to(len(src))
                issues.append(
                    (
                        eof_code,
                        f"value of attribute '{name}' is not closed: expected {ch!r}",
                        SourceSpan(value_start),
                    )
                )
                return True
            raw = src[self._pos : closing]
            resolved, ref_diagnostics = _resolve_content(raw, content_start, flag_lt=True)
            issues.extend((d.code, d.message, d.span) for d in ref_diagnostics)
            self._advance_to(closing + 1)
            attributes.append(
                Attribute(name, resolved, name_span, SourceSpan(value_start, self.position))
            )
            return False
        # Unquoted value: adopt the raw token so the tag stays usable.
        value_start = self.position
        i, n = self._pos, len(src)
        while i < n and src[i] not in XML_WHITESPACE and src[i] not in "<>":
            if src[i] == "/" and src.startswith("/>", i):
                break
            if declaration and src[i] == "?" and src.startswith("?>", i):
                break
            i += 1
        token = src[self._pos : i]
        self._advance_to(i)
        if token:
            issues.append(
                (
                    DiagnosticCode.UNQUOTED_ATTRIBUTE_VALUE,
                    f"value of attribute '{name}' must be quoted",
                    SourceSpan(value_start, self.position),
                )
            )
        else:
            issues.append(
                (
                    DiagnosticCode.MALFORMED_TAG,
                    f"attribute '{name}' is missing a value after '='",
                    SourceSpan(value_start),
                )
            )
        attributes.append(
            Attribute(name, token, name_span, SourceSpan(value_start, self.position))
        )
        return False

    # -- comments, CDATA, unsupported declarations ---------------------------

    def _scan_bang(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        src = self.source
        start = self._pos
        if src.startswith("<!--", start):
            return self._scan_comment(start_pos)
        if src.startswith("<![CDATA[", start):
            return self._scan_cdata(start_pos)
        self._advance_to(start + 2)  # '<!'
        if self._at_end():
            return [
                self._malformed(
                    DiagnosticCode.UNEXPECTED_EOF,
                    "unexpected end of input after '<!'",
                    SourceSpan(start_pos),
                )
            ]
        ch = self._current()
        if ch == "-":
            message = "expected a comment: '<!-' must be '<!--'"
        elif ch == "[":
            message = "expected a CDATA section: '<![' must be '<![CDATA['"
        elif is_name_start_char(ch):
            name = self._scan_name()
            if name == "DOCTYPE":
                message = "'<!DOCTYPE' is not supported: document type declarations are not processed"
            else:
                message = f"unrecognized markup declaration '<!{name}'"
        else:
            message = f"expected '<!--' or '<![CDATA[' after '<!', found {_describe_char(ch)}"
        self._resync_in_tag()
        return [self._malformed(DiagnosticCode.MALFORMED_TAG, message, SourceSpan(start_pos))]

    def _scan_comment(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        src = self.source
        content_from = self._pos + 4
        hyphens = src.find("--", content_from)
        if hyphens == -1:
            self._advance_to(len(src))
            return [
                self._malformed(
                    DiagnosticCode.UNTERMINATED_COMMENT,
                    "comment is never closed: expected '-->'",
                    SourceSpan(start_pos),
                )
            ]
        if src.startswith("-->", hyphens):
            content = src[content_from:hyphens]
            self._advance_to(hyphens + 3)
            return [
                NodeEvent(
                    kind=NodeKind.COMMENT,
                    span=SourceSpan(start_pos, self.position),
                    text_content=content,
                    depth=len(self.element_stack),
                )
            ]
        self._advance_to(hyphens)
        bad_span = SourceSpan(self.position)
        closing = src.find("-->", hyphens + 1)
        if closing == -1:
            self._advance_to(len(src))
            return [
                self._malformed(
                    DiagnosticCode.UNTERMINATED_COMMENT,
                    "comment is never closed: expected '-->'",
                    SourceSpan(start_pos),
                )
            ]
        self._advance_to(closing + 3)
        return [
            self._malformed(
                DiagnosticCode.DOUBLE_HYPHEN_IN_COMMENT,
                "'--' is not allowed inside a comment",
                bad_span,
            )
        ]

    def _scan_cdata(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        src = self.source
        content_from = self._pos + 9
        closing = src.find("]]>", content_from)
        if closing == -1:
            self._advance_to(len(src))
            return [
                self._malformed(
                    DiagnosticCode.UNTERMINATED_CDATA,
                    "CDATA section is never closed: expected ']]>'",
                    SourceSpan(start_pos),
                )
            ]
        content = src[content_from:closing]
        self._advance_to(closing + 3)
        return [
            NodeEvent(
                kind=NodeKind.CDATA,
                span=SourceSpan(start_pos, self.position),
                text_content=content,
                depth=len(self.element_stack),
            )
        ]

    # -- processing instructions and the declaration -------------------------

    def _scan_pi_or_declaration(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        src = self.source
        self._advance_to(self._pos + 2)  # '<?'
        if self._at_end():
            return [
                self._malformed(
                    DiagnosticCode.UNTERMINATED_PI,
                    "processing instruction is never closed: expected '?>'",
                    SourceSpan(start_pos),
                )
            ]
        ch = self._current()
        if not is_name_start_char(ch):
            bad_span = SourceSpan(self.position)
            message = f"expected a processing-instruction target after '<?', found {_describe_char(ch)}"
            self._resync_pi()
            return [self._malformed(DiagnosticCode.INVALID_NAME, message, bad_span)]
        target = self._scan_name()
        if target == "xml":
            return self._scan_declaration_rest(start_pos)
        if target.lower() == "xml":
            message = (
                f"XML declaration target must be lowercase 'xml', found '<?{target}'"
            )
            self._resync_pi()
            return [self._malformed(DiagnosticCode.BAD_DECLARATION, message, SourceSpan(start_pos))]
        issues: list[_Issue] = []
        data = ""
        if src.startswith("?>", self._pos):
            self._advance_to(self._pos + 2)
        elif self._at_end():
            return [
                self._malformed(
                    DiagnosticCode.UNTERMINATED_PI,
                    f"processing instruction '<?{target}' is never closed: expected '?>'",
                    SourceSpan(start_pos),
                )
            ]
        else:
            if self._current() in XML_WHITESPACE:
                self._skip_whitespace()
            elif target.lower().startswith("xml"):
                # Something like '<?XMLversion="1.0"?>': a declaration attempt,
                # not a usable processing instruction.
                message = (
                    f"'<?{target}' looks like a malformed XML declaration: "
                    "expected '<?xml' followed by whitespace"
                )
                self._resync_pi()
                return [
                    self._malformed(
                        DiagnosticCode.BAD_DECLARATION, message, SourceSpan(start_pos)
                    )
                ]
            else:
                issues.append(
                    (
                        DiagnosticCode.MALFORMED_TAG,
                        f"expected whitespace between the target '{target}' and "
                        "processing-instruction data",
                        SourceSpan(self.position),
                    )
                )
            closing = src.find("?>", self._pos)
            if closing == -1:
                self._advance_to(len(src))
                return [
                    self._malformed(
                        DiagnosticCode.UNTERMINATED_PI,
                        f"processing instruction '<?{target}' is never closed: expected '?>'",
                        SourceSpan(start_pos),
                    )
                ]
            data = src[self._pos : closing]
            self._advance_to(closing + 2)
        event = NodeEvent(
            kind=NodeKind.PROCESSING_INSTRUCTION,
            span=SourceSpan(start_pos, self.position),
            name=target,
            text_content=data,
            depth=len(self.element_stack),
        )
        return [event] + self._issues_to_tokens(issues)

    def _resync_pi(self) -> None:
        closing = self.source.find("?>", self._pos)
        if closing == -1:
            self._advance_to(len(self.source))
        else:
            self._advance_to(closing + 2)

    def _scan_declaration_rest(self, start_pos: SourcePosition) -> list[ReadOutcome]:
        attributes, issues, terminator = self._scan_tag_attributes(
            construct="XML declaration '<?xml'", start_pos=start_pos, declaration=True
        )
        if terminator is None:
            return self._issues_to_tokens(issues)
        event = NodeEvent(
            kind=NodeKind.DECLARATION,
            span=SourceSpan(start_pos, self.position),
            name="xml",
            attributes=tuple(attributes),
            depth=len(self.element_stack),
        )
        return [event] + self._issues_to_tokens(issues)
