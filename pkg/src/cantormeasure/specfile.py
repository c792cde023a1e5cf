"""Text format for set descriptions.

::

    cantor-spec v1
    # comment
    label middle-thirds
    tail repeat-last
    level r=1/3 digits=0,2

``tail`` is ``repeat-last`` or ``cycle``; numbers may be decimals or ``p/q``.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .construction import CantorError, CantorSpec, InvalidSpec, LevelSpec, TAIL_POLICIES

__all__ = ["SpecParseError", "parse_spec", "format_spec", "load_spec", "fmt"]

HEADER = "cantor-spec v1"


class SpecParseError(CantorError, ValueError):
    def __init__(self, line: int, col: int, message: str, invariant: Optional[str] = None):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.col, self.invariant = line, col, invariant


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return "%.17g" % x


def _number(text: str, line: int, col: int) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(line, col, f"not a number: {text.strip()!r}") from None


def _parse_level(body: str, line: int, col0: int) -> LevelSpec:
    fields = {}
    pos = 0
    for tok in body.split():
        pos = body.index(tok, pos)
        col = col0 + pos
        if "=" not in tok:
            raise SpecParseError(line, col, f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        if key in fields:
            raise SpecParseError(line, col, f"duplicate field {key!r}")
        fields[key] = (val, col + len(key) + 1)
        pos += len(tok)
    for key in ("r", "digits"):
        if key not in fields:
            raise SpecParseError(line, col0, f"level is missing {key}=")
    extra = set(fields) - {"r", "digits"}
    if extra:
        key = sorted(extra)[0]
        raise SpecParseError(line, fields[key][1], f"unknown field {key!r}")
    r = _number(fields["r"][0], line, fields["r"][1])
    text, col = fields["digits"]
    digits = []
    offset = 0
    for part in text.split(","):
        digits.append(_number(part, line, col + offset))
        offset += len(part) + 1
    try:
        return LevelSpec(r, tuple(digits))
    except InvalidSpec as exc:
        raise SpecParseError(line, col0, str(exc), exc.invariant) from None


def parse_spec(text: str) -> CantorSpec:
    lines = text.splitlines()
    header_seen = False
    tail: Optional[str] = None
    label = ""
    levels: List[LevelSpec] = []
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        col0 = len(stripped) - len(stripped.lstrip()) + 1
        content = stripped.strip()
        if not header_seen:
            if content != HEADER:
                raise SpecParseError(lineno, col0, f"expected header {HEADER!r}")
            header_seen = True
            continue
        keyword, _, rest = content.partition(" ")
        rest_col = col0 + len(keyword) + 1
        if keyword == "tail":
            if tail is not None:
                raise SpecParseError(lineno, col0, "tail given twice")
            if rest.strip() not in TAIL_POLICIES:
                raise SpecParseError(lineno, rest_col, f"unknown tail policy {rest.strip()!r}")
            tail = rest.strip()
        elif keyword == "level":
            levels.append(_parse_level(rest, lineno, rest_col))
        elif keyword == "label":
            label = rest.strip()
        else:
            raise SpecParseError(lineno, col0, f"unknown keyword {keyword!r}")
    if not header_seen:
        raise SpecParseError(1, 1, f"missing header {HEADER!r}")
    if tail is None:
        raise SpecParseError(len(lines) or 1, 1, "missing tail line")
    if not levels:
        raise SpecParseError(len(lines) or 1, 1, "no level lines")
    return CantorSpec(tuple(levels), tail, label)


def format_spec(spec: CantorSpec) -> str:
    out = [HEADER]
    if spec.label:
        out.append(f"label {spec.label}")
    out.append(f"tail {spec.tail}")
    for lv in spec.prefix:
        out.append(f"level r={fmt(lv.r)} digits={','.join(fmt(d) for d in lv.digits)}")
    return "\n".join(out) + "\n"


def load_spec(path: Union[str, Path]) -> CantorSpec:
    return parse_spec(Path(path).read_text())
