"""Plain text interchange format for diamonds.

A file starts with the header line ``hodge-diamond v1`` followed by one
``p q mult`` entry per line, base-10 integers separated by single spaces.
``#`` starts a comment, blank lines are ignored, and no bidegree may
repeat.  Multiplicities may be negative, so virtual diamonds round-trip;
bidegrees may not.  ``write_diamond`` emits entries sorted by (p, q),
which makes the format byte deterministic.
"""

from __future__ import annotations

from .diamond import DuplicateEntry, VirtualDiamond

HEADER = "hodge-diamond v1"


class ParseError(ValueError):
    """Malformed diamond file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_diamond(text: str) -> VirtualDiamond:
    entries: dict[tuple[int, int], int] = {}
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != HEADER:
                raise ParseError(f"expected header {HEADER!r}", lineno)
            saw_header = True
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'p q mult', got {line!r}", lineno)
        try:
            p, q, mult = (int(tok, 10) for tok in tokens)
        except ValueError:
            raise ParseError(f"expected 'p q mult', got {line!r}", lineno) from None
        if p < 0 or q < 0:
            raise ParseError(f"bidegree ({p}, {q}) has a negative coordinate", lineno)
        if (p, q) in entries:
            raise DuplicateEntry(f"line {lineno}: bidegree ({p}, {q}) given twice")
        entries[(p, q)] = mult
    if not saw_header:
        raise ParseError(f"missing header {HEADER!r}")
    return VirtualDiamond(entries)


def write_diamond(d: VirtualDiamond) -> str:
    lines = [HEADER]
    lines.extend(f"{p} {q} {mult}" for (p, q), mult in d.items())
    return "\n".join(lines) + "\n"
