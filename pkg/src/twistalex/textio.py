"""Line-oriented knot input format.

Lin presentation::

    knot trefoil
    lin genus=1
    pair: x1 | x1 x2^-1
    pair: x2^-1 x1 | x2^-1

Generic presentation::

    knot trefoil-wirtinger
    presentation
    gens: a b
    rel: a b a b^-1 a^-1 b^-1

Words are whitespace-separated tokens ``name``, ``name^-1`` or ``name^k``.
Text after ``#`` is a comment.  A Lin file may also carry ``rep: k1 k2 ...``
lines giving explicit metabelian exponent vectors.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import ParseError
from .group import LinPresentation, Presentation, Word

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class KnotInput:
    name: str
    kind: str  # "lin" or "presentation"
    body: Union[LinPresentation, Presentation]
    reps: tuple[tuple[int, ...], ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_lin(self) -> bool:
        return self.kind == "lin"

    def presentation(self) -> Presentation:
        return self.body.to_presentation() if self.is_lin else self.body


def parse_word(text: str, names: Sequence[str], line: int | None = None,
               col0: int = 1, forbidden: Sequence[str] = ()) -> Word:
    """Parse a word; ``col0`` is the column of ``text[0]`` for diagnostics."""
    index = {n: i for i, n in enumerate(names)}
    letters = []
    for match in re.finditer(r"\S+", text):
        tok = match.group(0)
        col = col0 + match.start()
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"malformed token {tok!r}", line, col)
        name, power = m.group(1), m.group(2)
        if name in forbidden:
            raise ParseError(f"generator {name!r} may not appear here", line, col)
        if name not in index:
            raise ParseError(f"unknown generator {name!r}", line, col)
        k = int(power) if power is not None else 1
        if k == 0:
            raise ParseError(f"zero exponent in token {tok!r}", line, col)
        letters.append((index[name], k))
    return Word(letters)


def parse_input(text: str) -> KnotInput:
    """Parse and validate a knot input file."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            lines.append((lineno, content.rstrip()))
    if not lines:
        raise ParseError("empty input", 1)

    lineno, first = lines[0]
    parts = first.split()
    if parts[0] != "knot" or len(parts) != 2:
        raise ParseError("expected 'knot <name>'", lineno, 1)
    name = parts[1]
    if len(lines) < 2:
        raise ParseError("missing 'lin genus=<g>' or 'presentation' header", lineno)
    lineno, header = lines[1]
    header_parts = header.split()
    if header_parts[0] == "lin":
        return _parse_lin(name, lineno, header, lines[2:])
    if header_parts == ["presentation"]:
        return _parse_generic(name, lines[2:])
    raise ParseError("expected 'lin genus=<g>' or 'presentation'", lineno, 1)


def _split_keyword(lineno, content, keyword):
    stripped = content.lstrip()
    offset = len(content) - len(stripped)
    if not stripped.startswith(keyword + ":"):
        return None
    rest = stripped[len(keyword) + 1:]
    return rest, offset + len(keyword) + 2  # 1-based column of rest[0]


def _parse_lin(name, header_line, header, body) -> KnotInput:
    m = re.fullmatch(r"\s*lin\s+genus=(\d+)\s*", header)
    if not m:
        raise ParseError("expected 'lin genus=<g>'", header_line, 1)
    genus = int(m.group(1))
    if genus < 1:
        raise ParseError("genus must be positive", header_line, header.index("=") + 2)
    x_names = tuple(f"x{i + 1}" for i in range(2 * genus))
    gen_names = x_names + ("mu",)
    pairs, reps, warnings = [], [], []
    for lineno, content in body:
        split = _split_keyword(lineno, content, "pair")
        if split is not None:
            rest, col = split
            if rest.count("|") != 1:
                raise ParseError("a pair needs exactly one '|'", lineno, col)
            left, right = rest.split("|")
            plus = parse_word(left, gen_names, lineno, col, forbidden=("mu",))
            minus = parse_word(right, gen_names, lineno, col + len(left) + 1, forbidden=("mu",))
            if plus.is_identity() and minus.is_identity():
                warnings.append(f"line {lineno}: both pair words are empty; relator is trivial")
            pairs.append((plus, minus))
            continue
        split = _split_keyword(lineno, content, "rep")
        if split is not None:
            rest, col = split
            try:
                vec = tuple(int(x) for x in rest.replace(",", " ").split())
            except ValueError:
                raise ParseError("rep exponents must be integers", lineno, col) from None
            if len(vec) != 2 * genus:
                raise ParseError(f"rep needs {2 * genus} exponents", lineno, col)
            reps.append(vec)
            continue
        raise ParseError("expected 'pair:' or 'rep:' line", lineno, 1)
    if len(pairs) != 2 * genus:
        last = body[-1][0] if body else header_line
        raise ParseError(f"genus {genus} needs {2 * genus} pairs, found {len(pairs)}", last)
    lin = LinPresentation(genus, tuple(pairs), x_names)
    return KnotInput(name, "lin", lin, tuple(reps), tuple(warnings))


def _parse_generic(name, body) -> KnotInput:
    if not body:
        raise ParseError("missing 'gens:' line")
    lineno, content = body[0]
    split = _split_keyword(lineno, content, "gens")
    if split is None:
        raise ParseError("expected 'gens: <names>'", lineno, 1)
    rest, col = split
    gens = rest.split()
    for match in re.finditer(r"\S+", rest):
        if not _NAME.match(match.group(0)):
            raise ParseError(f"bad generator name {match.group(0)!r}", lineno, col + match.start())
    if len(set(gens)) != len(gens):
        raise ParseError("duplicate generator names", lineno, col)
    if not gens:
        raise ParseError("at least one generator is required", lineno, col)
    rels = []
    for lineno, content in body[1:]:
        split = _split_keyword(lineno, content, "rel")
        if split is None:
            raise ParseError("expected 'rel: <word>'", lineno, 1)
        rest, col = split
        rels.append(parse_word(rest, gens, lineno, col))
    return KnotInput(name, "presentation", Presentation(tuple(gens), tuple(rels)))


def emit_input(k: KnotInput) -> str:
    """Inverse of parse_input."""
    out = [f"knot {k.name}"]
    if k.is_lin:
        L = k.body
        names = L.generator_names
        out.append(f"lin genus={L.genus}")
        for plus, minus in L.pairs:
            out.append(f"pair: {plus.to_string(names)} | {minus.to_string(names)}".rstrip())
        for vec in k.reps:
            out.append("rep: " + " ".join(str(x) for x in vec))
    else:
        P = k.body
        out.append("presentation")
        out.append("gens: " + " ".join(P.generators))
        for r in P.relators:
            out.append(f"rel: {r.to_string(P.generators)}".rstrip())
    return "\n".join(out) + "\n"
