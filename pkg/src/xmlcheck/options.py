"""Strictness and decoding knobs shared by the reader, checker, and front ends."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagnostics import Severity


class EncodingMode(Enum):
    UTF8 = "utf8"
    ASCII = "ascii"


@dataclass(frozen=True)
class ParserOptions:
    require_declaration: bool = True
    max_errors: int = 100
    encoding_mode: EncodingMode = EncodingMode.UTF8
    treat_missing_declaration_as: Severity = Severity.ERROR

    def __post_init__(self) -> None:
        if self.max_errors < 1:
            raise ValueError(f"max_errors must be >= 1, got {self.max_errors}")


DEFAULT_OPTIONS = ParserOptions()
