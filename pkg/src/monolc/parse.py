"""Reading ideal description files.

Format::

    # comments start with '#'
    vars a b c d
    field rational          (optional; or 'field gf 32003')
    ab, cd
    a*c^2                   (more generators, comma or newline separated)

Generator lines may start with the keyword ``gens``.  ``*`` between
variables is optional; variable names are matched greedily, longest first.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .combinat import MonomialIdeal, format_monomial, minimalize
from .errors import ArgumentError, MonolcError
from .linalg import QQ, Field

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(MonolcError, ValueError):
    def __init__(self, message: str, source: str = "<input>", line: int = 0, col: int = 0):
        self.message = message
        self.source = source
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line:
            return f"{self.source}:{self.line}:{self.col}: {self.message}"
        return f"{self.source}: {self.message}"


@dataclass(frozen=True)
class IdealSpec:
    vars: tuple[str, ...]
    gens: tuple[tuple[int, ...], ...]
    field: Field = QQ

    def ideal(self) -> MonomialIdeal:
        return minimalize(self.gens, n=len(self.vars))

    def canonical_text(self) -> str:
        gens = ", ".join(format_monomial(g, self.vars) for g in self.ideal().gens)
        return f"vars {' '.join(self.vars)}\nfield {field_text(self.field)}\n{gens}\n"

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()


def field_text(field: Field) -> str:
    return f"gf {field.characteristic}" if field.characteristic else "rational"


def parse_monomial(text: str, names: Sequence[str], source: str = "<input>", line: int = 0, col: int = 1):
    """Exponent vector of a monomial such as ``a*b^2*c`` or ``x1^2x3``."""
    order = sorted(range(len(names)), key=lambda j: -len(names[j]))
    exps = [0] * len(names)
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if s == "1":
        return tuple(exps)
    if not s:
        raise ParseError("empty generator", source, line, col)
    pos = 0
    expect_factor = True
    while pos < len(s):
        here = col + lead + pos
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "*":
            if expect_factor:
                raise ParseError("unexpected '*'", source, line, here)
            expect_factor = True
            pos += 1
            continue
        j = next((j for j in order if s.startswith(names[j], pos)), None)
        if j is None:
            raise ParseError(f"unknown variable at {s[pos:]!r}", source, line, here)
        pos += len(names[j])
        e = 1
        m = re.compile(r"\s*\^\s*(-?\d+)").match(s, pos)
        if m:
            e = int(m.group(1))
            if e < 1:
                raise ParseError(f"exponent must be at least 1, got {e}", source, line, col + lead + m.start(1))
            pos = m.end()
        elif s.startswith("^", pos):
            raise ParseError("missing exponent after '^'", source, line, col + lead + pos)
        exps[j] += e
        expect_factor = False
    if expect_factor:
        raise ParseError("generator ends with '*'", source, line, col + lead + len(s))
    return tuple(exps)


def parse_ideal_text(text: str, source: str = "<input>") -> IdealSpec:
    names: Optional[tuple[str, ...]] = None
    field = QQ
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        keyword = stripped.split(None, 1)[0].lower()
        if keyword == "vars":
            if names is not None:
                raise ParseError("duplicate 'vars' line", source, lineno, indent + 1)
            declared = stripped.split()[1:]
            if not declared:
                raise ParseError("'vars' needs at least one variable", source, lineno, indent + 1)
            seen = set()
            for name in declared:
                if not _NAME.match(name):
                    raise ParseError(f"bad variable name {name!r}", source, lineno, body.find(name) + 1)
                if name in seen:
                    raise ParseError(f"variable {name!r} declared twice", source, lineno, body.rfind(name) + 1)
                seen.add(name)
            names = tuple(declared)
            continue
        if keyword == "field":
            try:
                field = Field.parse(stripped[len("field"):])
            except ArgumentError as exc:
                raise ParseError(str(exc), source, lineno, indent + 1) from None
            continue
        if names is None:
            raise ParseError("the first line must declare variables with 'vars'", source, lineno, indent + 1)
        start = indent
        if keyword == "gens":
            start = indent + len("gens")
        offset = start
        for piece in body[start:].split(","):
            if piece.strip():
                gens.append(parse_monomial(piece, names, source, lineno, offset + 1))
            elif body[start:].strip():
                raise ParseError("empty generator between commas", source, lineno, offset + 1)
            offset += len(piece) + 1
    if names is None:
        raise ParseError("missing 'vars' line", source)
    if not gens:
        raise ParseError("no generators given", source)
    return IdealSpec(names, tuple(gens), field)


def parse_ideal_file(path) -> IdealSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from None
    return parse_ideal_text(text, str(path))


def parse_degree(text: str, n: int) -> tuple[int, ...]:
    """A comma-separated multidegree such as ``-1,0,-1,0``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"multidegree must be comma-separated integers, got {text!r}", "--alpha") from None
    if len(values) != n:
        raise ParseError(f"multidegree has {len(values)} entries but there are {n} variables", "--alpha")
    return values


def parse_box(text: str, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``lo..hi`` where each side is one integer (repeated) or a full multidegree."""
    if ".." not in text:
        raise ParseError(f"box must look like lo..hi, got {text!r}", "--box")
    lo, hi = text.split("..", 1)

    def side(s):
        s = s.strip()
        if "," in s:
            return parse_degree(s, n)
        try:
            return (int(s),) * n
        except ValueError:
            raise ParseError(f"bad box bound {s!r}", "--box") from None

    return side(lo), side(hi)
