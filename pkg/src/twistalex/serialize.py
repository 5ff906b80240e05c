"""JSON encodings of polynomials, representations and factorization reports."""
from __future__ import annotations

from fractions import Fraction

from .algebra.cyclotomic import CycloNumber
from .algebra.laurent import LaurentPoly, RationalFunction
from .representations import MetabelianClass, Representation


def cyclo_to_json(c: CycloNumber) -> dict:
    return {"m": c.m, "coords": [f"{x.numerator}/{x.denominator}" for x in c.coords]}


def cyclo_from_json(obj) -> CycloNumber:
    return CycloNumber(obj["m"], [Fraction(s) for s in obj["coords"]])


def poly_to_json(p: LaurentPoly) -> list:
    """``[[exponent, coeff], ...]`` sorted by exponent."""
    return [[d, cyclo_to_json(p.terms[d])] for d in sorted(p.terms)]


def poly_from_json(obj, m: int | None = None) -> LaurentPoly:
    if not obj:
        return LaurentPoly.zero(m if m is not None else 1)
    coeffs = {int(d): cyclo_from_json(c) for d, c in obj}
    mod = next(iter(coeffs.values())).m
    return LaurentPoly(mod, coeffs)


def invariant_to_json(x) -> dict:
    """Tagged form for a value that may be a polynomial or a rational function."""
    if x is None:
        return None
    if isinstance(x, RationalFunction):
        return {"kind": "rational",
                "numerator": poly_to_json(x.numerator),
                "denominator": poly_to_json(x.denominator),
                "text": str(x)}
    return {"kind": "polynomial", "terms": poly_to_json(x), "text": str(x)}


def invariant_from_json(obj):
    if obj is None:
        return None
    if obj["kind"] == "rational":
        return RationalFunction(poly_from_json(obj["numerator"]),
                                poly_from_json(obj["denominator"]))
    return poly_from_json(obj["terms"])


def matrix_to_json(a) -> list:
    return [[cyclo_to_json(x) for x in row] for row in a]


def rep_to_json(rho: Representation, names, cls: MetabelianClass | None = None) -> dict:
    out = {
        "dimension": rho.dimension,
        "modulus": rho.modulus,
        "generators": {name: matrix_to_json(a) for name, a in zip(names, rho.images)},
    }
    if rho.label:
        out["label"] = rho.label
    if cls is not None:
        out["class"] = class_to_json(cls)
    return out


def rep_from_json(obj, names) -> Representation:
    images = tuple(tuple(tuple(cyclo_from_json(x) for x in row) for row in obj["generators"][n])
                   for n in names)
    return Representation(images, obj["modulus"], obj.get("label", ""))


def class_to_json(cls: MetabelianClass) -> dict:
    return {"exponents": list(cls.exponents), "n": cls.n, "label": cls.label}


def report_to_json(report) -> dict:
    return {
        "class": class_to_json(report.cls),
        "associated_class": class_to_json(report.hat_cls),
        "associated_exponents_literal": list(report.hat_exponents_literal),
        "alexander": invariant_to_json(report.alexander),
        "twisted_rho": invariant_to_json(report.twisted_rho),
        "twisted_rho_hat": invariant_to_json(report.twisted_rho_hat),
        "twisted_adjoint": invariant_to_json(report.twisted_adjoint),
        "P": invariant_to_json(report.P),
        "Q": invariant_to_json(report.Q),
        "checks": report.booleans(),
        "diagnostics": list(report.diagnostics),
    }
