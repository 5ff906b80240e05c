"""Built-in Lin presentations for 3_1, 4_1, 5_1 and 5_2."""
from __future__ import annotations

from .textio import KnotInput, emit_input, parse_input

BUILTIN_SOURCES = {
    "trefoil": """\
knot trefoil
lin genus=1
pair: x1 | x1 x2^-1
pair: x2^-1 x1 | x2^-1
""",
    "figure8": """\
knot figure8
lin genus=1
pair: x1 | x1 x2^-1
pair: x2 x1 | x2
""",
    "5_1": """\
knot 5_1
lin genus=2
pair: x1 | x1 x2^-1
pair: x2^-1 x1 | x3 x2^-1
pair: x2^-1 x3 | x3 x4^-1
pair: x4^-1 x3 | x4^-1
""",
    "5_2": """\
knot 5_2
lin genus=1
pair: x1 | x1 x2^-1
pair: x2^-2 x1 | x2^-2
""",
}


def list_examples() -> list[str]:
    return list(BUILTIN_SOURCES)


def builtin(name: str) -> KnotInput:
    try:
        return parse_input(BUILTIN_SOURCES[name])
    except KeyError:
        raise KeyError(f"unknown built-in knot {name!r}; choose from {list_examples()}") from None


def builtin_lin(name: str):
    return builtin(name).body


__all__ = ["BUILTIN_SOURCES", "builtin", "builtin_lin", "emit_input", "list_examples"]
