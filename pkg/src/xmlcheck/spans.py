"""1-based line/column positions for locating constructs in source text."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SourcePosition:
    """A point in a document, counted in Unicode scalar values.

    Lines and columns are 1-based; LF, CRLF, and a lone CR each end a line.
    Field order gives tuple comparison in document order.
    """

    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError(f"positions are 1-based, got {self.line}:{self.column}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class SourceSpan:
    """A region of source text: a start position and an optional exclusive end."""

    start: SourcePosition
    end: SourcePosition | None = None

    def __post_init__(self) -> None:
        if self.end is not None and self.end < self.start:
            raise ValueError(f"span end {self.end} precedes start {self.start}")

    def __str__(self) -> str:
        return str(self.start) if self.end is None else f"{self.start}..{self.end}"


def point_span(line: int, column: int) -> SourceSpan:
    """Shorthand for a zero-width span at (line, column)."""
    return SourceSpan(SourcePosition(line, column))


class PositionTracker:
    """Mutable (line, column) cursor advanced by feeding chunks of text.

    A CRLF pair counts as one line break even when the two characters arrive
    in separate chunks.
    """

    __slots__ = ("line", "column", "_pending_cr")

    def __init__(self, line: int = 1, column: int = 1) -> None:
        self.line = line
        self.column = column
        self._pending_cr = False

    @property
    def position(self) -> SourcePosition:
        return SourcePosition(self.line, self.column)

    def feed(self, chunk: str) -> None:
        if not chunk:
            return
        if self._pending_cr and chunk[0] == "\n":
            chunk = chunk[1:]
        self._pending_cr = chunk.endswith("\r")
        if not chunk:
            return
        if "\r" in chunk:
            self._feed_with_carriage_returns(chunk)
            return
        breaks = chunk.count("\n")
        if breaks:
            self.line += breaks
            self.column = len(chunk) - chunk.rfind("\n")
        else:
            self.column += len(chunk)

    def _feed_with_carriage_returns(self, chunk: str) -> None:
        line, column = self.line, self.column
        i, n = 0, len(chunk)
        while i < n:
            ch = chunk[i]
            if ch == "\n":
                line += 1
                column = 1
                i += 1
            elif ch == "\r":
                line += 1
                column = 1
                i += 2 if i + 1 < n and chunk[i + 1] == "\n" else 1
            else:
                column += 1
                i += 1
        self.line, self.column = line, column
