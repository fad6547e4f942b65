"""Plain-text ideal files.

::

    # twisted cubic
    field GF 32003
    vars x0 .. x3
    x0*x2 - x1^2
    x1*x3 - x2^2
    x0*x3 - x1*x2

``vars`` takes either a range ``x0 .. xN`` or an explicit list of names.
Headers are optional: the field defaults to GF(32003) and the variables
to those appearing in the generators, sorted.
"""

from __future__ import annotations

import re
from pathlib import Path

from .field import FieldSpec
from .groebner import Ideal
from .polynomial import ParseError, Ring

_RANGE = re.compile(r"^([A-Za-z_]+)(\d+)\s*\.\.\s*([A-Za-z_]+)(\d+)$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _parse_vars(rest: str, lineno: int, col: int) -> tuple[str, ...]:
    m = _RANGE.match(rest.strip())
    if m:
        a, i, b, j = m.group(1), int(m.group(2)), m.group(3), int(m.group(4))
        if a != b or j < i:
            raise ParseError(f"bad variable range {rest.strip()!r}", lineno, col)
        return tuple(f"{a}{k}" for k in range(i, j + 1))
    names = [tok for tok in re.split(r"[\s,]+", rest.strip()) if tok]
    for name in names:
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", lineno, col + rest.find(name))
    if not names:
        raise ParseError("empty variable list", lineno, col)
    if len(set(names)) != len(names):
        raise ParseError("repeated variable name", lineno, col)
    return tuple(names)


def _parse_field(rest: str, lineno: int, col: int) -> FieldSpec:
    toks = rest.split()
    try:
        if toks == ["QQ"]:
            return FieldSpec(0)
        if len(toks) == 2 and toks[0] == "GF":
            return FieldSpec(int(toks[1]))
        if len(toks) == 1 and toks[0].startswith("GF(") and toks[0].endswith(")"):
            return FieldSpec(int(toks[0][3:-1]))
    except ValueError as exc:
        raise ParseError(str(exc), lineno, col) from None
    raise ParseError(f"expected 'field GF <p>' or 'field QQ', got {rest.strip()!r}", lineno, col)


def parse_ideal_text(text: str, field: FieldSpec | None = None) -> Ideal:
    """Parse an ideal file.  ``field`` overrides the header when given."""
    header_field = None
    names = None
    gens: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        word, _, rest = stripped.partition(" ")
        if word == "field":
            if gens:
                raise ParseError("header after generators", lineno, col)
            header_field = _parse_field(rest, lineno, col + 6)
        elif word == "vars":
            if gens:
                raise ParseError("header after generators", lineno, col)
            names = _parse_vars(rest, lineno, col + 5)
        else:
            gens.append((lineno, col, stripped))
    F = field or header_field or FieldSpec()
    if names is None:
        seen = sorted({tok for _, _, g in gens for tok in _NAME.findall(g)},
                      key=lambda s: (re.sub(r"\d+$", "", s), int(re.search(r"\d*$", s).group() or -1)))
        if not seen:
            raise ParseError("no variables: add a 'vars' line", 1, 1)
        names = tuple(seen)
    ring = Ring(names, F)
    polys = []
    for lineno, col, g in gens:
        try:
            polys.append(ring.parse(g))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, col - 1 + (exc.column or 1)) from None
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), lineno, col) from None
    return Ideal(ring, polys)


def read_ideal(path: str | Path, field: FieldSpec | None = None) -> Ideal:
    return parse_ideal_text(Path(path).read_text(), field)


def format_ideal_file(ideal: Ideal, comment: str | None = None) -> str:
    ring = ideal.ring
    F = ring.field
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append("field QQ" if F.characteristic == 0 else f"field GF {F.characteristic}")
    names = ring.names
    m = re.fullmatch(r"([A-Za-z_]+)(\d+)", names[0])
    if m and names == tuple(f"{m.group(1)}{k}" for k in range(int(m.group(2)), int(m.group(2)) + len(names))):
        lines.append(f"vars {names[0]} .. {names[-1]}")
    else:
        lines.append("vars " + " ".join(names))
    lines += [g.to_str() for g in ideal.generators]
    return "\n".join(lines) + "\n"
