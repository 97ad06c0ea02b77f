"""Reading and writing the arrangement and weak-vector text formats.

Arrangement files are UTF-8, one directive per line, ``#`` starts a comment::

    field rational | field prime <p> | field extension <k> <c0> <c1> ... <ck>
    line <a> <b> <c>

Weak-vector files hold a single inline spec such as
``d=14;t2=9,t3=16,t4=4,t5=1`` (comments allowed).
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, ArrangementError, ProjectiveLine, WeakCombinatorics
from .exactfield import FieldDescriptor, extension, parse_scalar, prime_field, rationals

__all__ = ["ParseError", "parse_arrangement", "read_arrangement", "format_arrangement", "read_input"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<string>"):
        self.line, self.column, self.source = line, column, source
        where = source if line is None else f"{source}:{line}:{column or 1}"
        super().__init__(f"{where}: {message}")


def _tokens(raw: str):
    """Split a line into (column, token) pairs, keeping bracketed vectors whole."""
    out, i, n = [], 0, len(raw)
    while i < n:
        if raw[i].isspace():
            i += 1
            continue
        start = i
        if raw[i] == "[":
            j = raw.find("]", i)
            if j < 0:
                raise ValueError(start + 1, "unterminated '['")
            i = j + 1
        else:
            while i < n and not raw[i].isspace():
                i += 1
        out.append((start + 1, raw[start:i].replace(" ", "")))
    return out


def _parse_field(toks, lineno, source) -> FieldDescriptor:
    if len(toks) < 2:
        raise ParseError("field directive needs a kind", lineno, toks[0][0], source)
    kind = toks[1][1]
    try:
        if kind == "rational":
            if len(toks) != 2:
                raise ParseError("'field rational' takes no arguments", lineno, toks[2][0], source)
            return rationals()
        if kind == "prime":
            if len(toks) != 3:
                raise ParseError("'field prime' takes exactly one argument", lineno, toks[1][0], source)
            return prime_field(int(toks[2][1]))
        if kind == "extension":
            k = int(toks[2][1])
            coeffs = [Fraction(t) for _, t in toks[3:]]
            if len(coeffs) != k + 1:
                raise ParseError(f"extension of degree {k} needs {k + 1} coefficients", lineno, toks[2][0], source)
            return extension(coeffs)
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad field directive: {exc}", lineno, toks[1][0], source) from None
    raise ParseError(f"unknown field kind {kind!r}", lineno, toks[1][0], source)


def parse_arrangement(text: str, source: str = "<string>") -> Arrangement:
    field = None
    lines: list[ProjectiveLine] = []
    origin: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0]
        try:
            toks = _tokens(raw)
        except ValueError as exc:
            col, msg = exc.args
            raise ParseError(msg, lineno, col, source) from None
        if not toks:
            continue
        head = toks[0][1]
        if head == "field":
            if field is not None:
                raise ParseError("field declared twice", lineno, 1, source)
            field = _parse_field(toks, lineno, source)
        elif head == "line":
            if field is None:
                raise ParseError("'line' before 'field'", lineno, 1, source)
            if len(toks) != 4:
                raise ParseError("a line needs three coefficients", lineno, toks[0][0], source)
            coeffs = []
            for col, tok in toks[1:]:
                try:
                    coeffs.append(parse_scalar(field, tok))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(str(exc), lineno, col, source) from None
            try:
                line = ProjectiveLine(tuple(coeffs))
            except ArrangementError as exc:
                raise ParseError(str(exc), lineno, 1, source) from None
            key = line.key()
            if key in origin:
                raise ParseError(
                    f"duplicate line: lines {origin[key]} and {len(lines)} coincide",
                    lineno, 1, source,
                )
            origin[key] = len(lines)
            lines.append(line)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, toks[0][0], source)
    if field is None:
        raise ParseError("missing field directive", None, None, source)
    return Arrangement(lines, field)


def read_arrangement(path) -> Arrangement:
    path = Path(path)
    return parse_arrangement(path.read_text(encoding="utf-8"), source=str(path))


def format_arrangement(arr: Arrangement, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    out.append("field " + " ".join(arr.field.spec_tokens()))
    out += [f"line {line}" for line in arr.lines]
    return "\n".join(out) + "\n"


def read_input(path_or_spec: str):
    """Return an Arrangement or WeakCombinatorics from a file path or inline spec."""
    p = Path(path_or_spec)
    if p.exists():
        text = p.read_text(encoding="utf-8")
        body = [l.split("#", 1)[0].strip() for l in text.splitlines()]
        body = [l for l in body if l]
        if body and body[0].startswith("d="):
            if len(body) != 1:
                raise ParseError("weak-vector file must hold exactly one spec", None, None, str(p))
            try:
                return WeakCombinatorics.parse(body[0])
            except ArrangementError as exc:
                raise ParseError(str(exc), None, None, str(p)) from None
        return parse_arrangement(text, str(p))
    try:
        return WeakCombinatorics.parse(path_or_spec)
    except ArrangementError as exc:
        raise ParseError(str(exc)) from None
