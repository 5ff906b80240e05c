"""Command-line front end.

Exit status: 0 on success, 1 for input errors, 2 when a factorization
check comes out false.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import knots
from .errors import ParseError, TwistAlexError
from .group import abelianization
from .representations import (
    adjoint,
    check_relations,
    enumerate_metabelian,
    lin_rep_from_exponents,
    solution_set,
    working_modulus,
)
from .serialize import class_to_json, invariant_to_json, rep_to_json, report_to_json
from .textio import KnotInput, parse_input
from .twisted import alexander_polynomial, knot_determinant, verify_factorization, wada_invariant

EXIT_OK, EXIT_INPUT, EXIT_FINDING = 0, 1, 2


class InputError(Exception):
    pass


def load_knot(path: str) -> KnotInput:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return parse_input(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _require_lin(k: KnotInput, command: str):
    if not k.is_lin:
        raise InputError(f"'{command}' needs a Lin presentation; {k.name} is a generic one")
    return k.body


def _parse_rep_flag(value: str) -> tuple[int, ...]:
    body = value[2:] if value.startswith("k=") else value
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError:
        raise InputError(f"--rep expects k=<e1>,<e2>,...; got {value!r}") from None


def _modulus(n: int, requested: int | None) -> int:
    need = working_modulus(n)
    if requested is None:
        return need
    if requested % need:
        raise InputError(f"--modulus {requested} must be a multiple of lcm(4, {n}) = {need}")
    return requested


def _pivot(P, name: str | None):
    if name is None:
        return None
    if name not in P.generators:
        raise InputError(f"--pivot {name!r} is not a generator of the presentation")
    return P.index(name)


def _basics(k: KnotInput):
    P = k.presentation()
    P.require_deficiency_one()
    alpha = abelianization(P)
    delta = alexander_polynomial(P, alpha)
    return P, alpha, delta, knot_determinant(delta)


def _selected_classes(k: KnotInput, L, n, m, opts):
    """Metabelian classes chosen by --rep, rep: lines, --class, or all of them."""
    explicit = []
    if getattr(opts, "rep", None):
        explicit = [_parse_rep_flag(opts.rep)]
    elif k.reps:
        explicit = list(k.reps)
    P = L.to_presentation()
    if explicit:
        out = []
        for vec in explicit:
            try:
                cls, rho = lin_rep_from_exponents(L, vec, n, m)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            if cls.is_trivial():
                raise InputError(f"exponent vector {vec} is zero mod {n} (reducible)")
            if not check_relations(P, rho):
                raise InputError(f"exponent vector {vec} violates the relations mod {n}")
            out.append((cls.canonicalize(), rho))
        return out
    classes = enumerate_metabelian(L, n, m)
    which = getattr(opts, "class_index", None)
    if which is not None:
        if not 1 <= which <= len(classes):
            raise InputError(f"--class must be between 1 and {len(classes)}")
        classes = [classes[which - 1]]
    return classes


# commands ------------------------------------------------------------------

def cmd_alexander(k: KnotInput, opts) -> dict:
    _, alpha, delta, n = _basics(k)
    return {"knot": k.name, "abelianization": list(alpha),
            "alexander": invariant_to_json(delta), "determinant": n}


def cmd_metabelian(k: KnotInput, opts) -> dict:
    L = _require_lin(k, "metabelian")
    P, _, delta, n = _basics(k)
    m = _modulus(n, opts.modulus)
    classes = enumerate_metabelian(L, n, m)
    return {
        "knot": k.name,
        "determinant": n,
        "modulus": m,
        "solution_count": len(solution_set(L, n)),
        "expected_class_count": (n - 1) // 2,
        "class_count": len(classes),
        "classes": [rep_to_json(rho, P.generators, cls) for cls, rho in classes],
    }


def cmd_twisted(k: KnotInput, opts) -> dict:
    L = _require_lin(k, "twisted")
    P, alpha, _, n = _basics(k)
    m = _modulus(n, opts.modulus)
    pivot = _pivot(P, opts.pivot)
    rows = []
    for cls, rho in _selected_classes(k, L, n, m, opts):
        target = adjoint(rho) if opts.adjoint else rho
        res = wada_invariant(P, alpha, target, pivot)
        rows.append({
            "class": class_to_json(cls),
            "pivot": P.generators[res.pivot],
            "numerator": invariant_to_json(res.numerator),
            "denominator": invariant_to_json(res.denominator),
            "invariant": invariant_to_json(res.reduced),
        })
    return {"knot": k.name, "adjoint": bool(opts.adjoint), "modulus": m, "results": rows}


def cmd_verify(k: KnotInput, opts) -> dict:
    L = _require_lin(k, "verify")
    P, _, delta, n = _basics(k)
    m = _modulus(n, opts.modulus)
    pivot = _pivot(P, opts.pivot)
    reports = [verify_factorization(L, cls, m, pivot)
               for cls, _ in _selected_classes(k, L, n, m, opts)]
    return {"knot": k.name, "determinant": n, "modulus": m,
            "alexander": invariant_to_json(delta),
            "reports": [report_to_json(r) for r in reports],
            "all_hold": all(r.all_hold for r in reports)}


def run_pipeline(k: KnotInput, opts) -> dict:
    """Alexander polynomial, determinant, classes, twisted invariants and checks."""
    out = cmd_alexander(k, opts)
    if not k.is_lin:
        return out
    L = k.body
    n = out["determinant"]
    m = _modulus(n, getattr(opts, "modulus", None))
    pivot = _pivot(k.presentation(), getattr(opts, "pivot", None))
    classes = _selected_classes(k, L, n, m, opts)
    reports = [verify_factorization(L, cls, m, pivot) for cls, _ in classes]
    out.update({
        "modulus": m,
        "solution_count": len(solution_set(L, n)),
        "expected_class_count": (n - 1) // 2,
        "class_count": len(classes),
        "reports": [report_to_json(r) for r in reports],
        "all_hold": all(r.all_hold for r in reports),
    })
    return out


# text rendering ------------------------------------------------------------

def _text(obj) -> str:
    if obj is None:
        return "-"
    return obj["text"]


def render_text(command: str, data: dict) -> str:
    lines = []
    if command == "examples":
        return "\n".join(data["examples"]) + "\n"
    lines.append(f"knot: {data['knot']}")
    if "alexander" in data:
        lines.append(f"Alexander polynomial: {_text(data['alexander'])}")
    if "determinant" in data:
        lines.append(f"determinant |Delta(-1)|: {data['determinant']}")
    if "class_count" in data:
        lines.append(f"metabelian classes: {data['class_count']} "
                     f"(expected {data['expected_class_count']}, "
                     f"solutions {data['solution_count']})")
    if command == "metabelian":
        for c in data["classes"]:
            lines.append(f"  {c['class']['label']}")
    if command == "twisted":
        kind = "Ad(rho)" if data["adjoint"] else "rho"
        for r in data["results"]:
            lines.append(f"  {r['class']['label']}: Delta^{kind} = {_text(r['invariant'])}"
                         f"  [pivot {r['pivot']}]")
    for r in data.get("reports", []):
        checks = r["checks"]
        status = "ok" if all(checks.values()) else "FAILED"
        lines.append(f"  {r['class']['label']} (associated {r['associated_class']['label']}): {status}")
        lines.append(f"    Delta^Ad(rho)   = {_text(r['twisted_adjoint'])}")
        lines.append(f"    Delta^rho       = {_text(r['twisted_rho'])}")
        lines.append(f"    Delta^rho_hat   = {_text(r['twisted_rho_hat'])}")
        lines.append(f"    P               = {_text(r['P'])}")
        lines.append("    " + ", ".join(f"{k}={v}" for k, v in checks.items()))
        for d in r["diagnostics"]:
            lines.append(f"    ! {d}")
    return "\n".join(lines) + "\n"


# argument parsing ----------------------------------------------------------

COMMANDS = {
    "alexander": cmd_alexander,
    "metabelian": cmd_metabelian,
    "twisted": cmd_twisted,
    "verify": cmd_verify,
    "run": run_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--pivot", help="generator used as g_l in the denominator")
    common.add_argument("--modulus", type=int, help="cyclotomic modulus of the working field")

    parser = argparse.ArgumentParser(prog="twistalex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("alexander", "metabelian", "verify"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        if name == "verify":
            p.add_argument("--class", dest="class_index", type=int)
            p.add_argument("--rep", help="explicit exponent vector, e.g. k=1,2")
    p = sub.add_parser("twisted", parents=[common])
    p.add_argument("file")
    p.add_argument("--class", dest="class_index", type=int, help="1-based class index")
    p.add_argument("--adjoint", action="store_true", help="use Ad(rho) instead of rho")
    p.add_argument("--rep", help="explicit exponent vector, e.g. k=1,2")
    p = sub.add_parser("run", parents=[common])
    p.add_argument("name", help="built-in knot name (see 'examples') or a file path")
    p.add_argument("--class", dest="class_index", type=int)
    p.add_argument("--rep", help="explicit exponent vector, e.g. k=1,2")
    sub.add_parser("examples", parents=[common])
    return parser


def main(argv=None) -> int:
    opts = build_parser().parse_args(argv)
    context = ""
    try:
        if opts.command == "examples":
            data = {"examples": knots.list_examples()}
        else:
            if opts.command == "run":
                if opts.name in knots.BUILTIN_SOURCES:
                    k = knots.builtin(opts.name)
                else:
                    k = load_knot(opts.name)
            else:
                k = load_knot(opts.file)
            context = f"{k.name}: "
            for w in k.warnings:
                print(f"warning: {w}", file=sys.stderr)
            data = COMMANDS[opts.command](k, opts)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TwistAlexError as exc:
        print(f"error: {context}{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if opts.format == "json":
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(render_text(opts.command, data))
    if data.get("all_hold") is False:
        return EXIT_FINDING
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
