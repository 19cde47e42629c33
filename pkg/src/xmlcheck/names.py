"""XML name character classes (the Name production, fifth-edition ranges)."""

from __future__ import annotations

from bisect import bisect_right

_NAME_START_RANGES: tuple[tuple[int, int], ...] = (
    (0x3A, 0x3A),  # ':'
    (0x41, 0x5A),  # A-Z
    (0x5F, 0x5F),  # '_'
    (0x61, 0x7A),  # a-z
    (0xC0, 0xD6),
    (0xD8, 0xF6),
    (0xF8, 0x2FF),
    (0x370, 0x37D),
    (0x37F, 0x1FFF),
    (0x200C, 0x200D),
    (0x2070, 0x218F),
    (0x2C00, 0x2FEF),
    (0x3001, 0xD7FF),
    (0xF900, 0xFDCF),
    (0xFDF0, 0xFFFD),
    (0x10000, 0xEFFFF),
)

# Additionally allowed after the first character.
_NAME_EXTRA_RANGES: tuple[tuple[int, int], ...] = (
    (0x2D, 0x2E),  # '-' '.'
    (0x30, 0x39),  # 0-9
    (0xB7, 0xB7),
    (0x300, 0x36F),
    (0x203F, 0x2040),
)


def _table(ranges: tuple[tuple[int, int], ...]) -> tuple[list[int], list[int]]:
    ordered = sorted(ranges)
    return [lo for lo, _ in ordered], [hi for _, hi in ordered]

_START_LO, _START_HI = _table(_NAME_START_RANGES)
_ANY_LO, _ANY_HI = _table(_NAME_START_RANGES + _NAME_EXTRA_RANGES)

# Flat lookup for the ASCII hot path.
_ASCII_START = [_START_LO[bisect_right(_START_LO, cp) - 1] <= cp <= _START_HI[bisect_right(_START_LO, cp) - 1]
                if bisect_right(_START_LO, cp) > 0 else False
                for cp in range(128)]
_ASCII_ANY = [_ANY_LO[bisect_right(_ANY_LO, cp) - 1] <= cp <= _ANY_HI[bisect_right(_ANY_LO, cp) - 1]
              if bisect_right(_ANY_LO, cp) > 0 else False
              for cp in range(128)]


def is_name_start_char(ch: str) -> bool:
    cp = ord(ch)
    if cp < 128:
        return _ASCII_START[cp]
    i = bisect_right(_START_LO, cp) - 1
    return i >= 0 and cp <= _START_HI[i]


def is_name_char(ch: str) -> bool:
    cp = ord(ch)
    if cp < 128:
        return _ASCII_ANY[cp]
    i = bisect_right(_ANY_LO, cp) - 1
    return i >= 0 and cp <= _ANY_HI[i]


def is_name(text: str) -> bool:
    if not text or not is_name_start_char(text[0]):
        return False
    return all(is_name_char(c) for c in text[1:])
