"""Laurent polynomials in one variable t over a cyclotomic field."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import ModulusMismatch, NotDivisible
from .cyclotomic import CycloNumber, format_cyclo, lcm


class LaurentPoly:
    """A finite sum of ``c_d * t^d`` with c_d in Q(zeta_m) and d any integer.

    ``terms`` maps exponent to a nonzero coefficient.  The modulus is kept
    even for the zero polynomial so that arithmetic stays well typed.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        clean = {}
        if terms:
            for d, c in dict(terms).items():
                if not isinstance(c, CycloNumber):
                    c = CycloNumber.from_rational(m, c)
                elif c.m != m:
                    raise ModulusMismatch(f"coefficient modulus {c.m} differs from {m}")
                if not c.is_zero():
                    clean[int(d)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, m, terms):
        obj = cls.__new__(cls)
        obj.m = m
        obj.terms = terms
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, m: int) -> "LaurentPoly":
        return cls._raw(m, {})

    @classmethod
    def constant(cls, m: int, c) -> "LaurentPoly":
        return cls(m, {0: c})

    @classmethod
    def monomial(cls, m: int, d: int, c=1) -> "LaurentPoly":
        return cls(m, {d: c})

    @classmethod
    def t(cls, m: int = 1) -> "LaurentPoly":
        return cls.monomial(m, 1)

    @classmethod
    def from_coeffs(cls, m: int, coeffs, low: int = 0) -> "LaurentPoly":
        """Build from a list of coefficients, lowest degree ``low`` first."""
        return cls(m, {low + i: c for i, c in enumerate(coeffs)})

    # inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return min(self.terms)

    def span(self) -> int:
        return self.degree() - self.min_degree()

    def coeff(self, d: int) -> CycloNumber:
        return self.terms.get(d, CycloNumber.zero(self.m))

    def leading_coeff(self) -> CycloNumber:
        return self.terms[self.degree()]

    def exponents(self):
        return sorted(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def has_only_even_degrees(self) -> bool:
        return all(d % 2 == 0 for d in self.terms)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.m != self.m:
                raise ModulusMismatch(f"moduli {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, Rational, CycloNumber)):
            return LaurentPoly.constant(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out[d] + c if d in out else c
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
        return LaurentPoly._raw(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.m, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, CycloNumber)):
            if isinstance(other, CycloNumber) and other.m != self.m:
                raise ModulusMismatch(f"moduli {self.m} and {other.m} differ")
            if other == 0:
                return LaurentPoly.zero(self.m)
            return LaurentPoly._raw(self.m, {d: c * other for d, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d = d1 + d2
                p = c1 * c2
                out[d] = out[d] + p if d in out else p
        return LaurentPoly._raw(self.m, {d: c for d, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials are invertible")
            (d, c), = self.terms.items()
            return LaurentPoly._raw(self.m, {d * k: c ** k})
        result = LaurentPoly.constant(self.m, 1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw(self.m, {d + k: c for d, c in self.terms.items()})

    def divmod_poly(self, q: "LaurentPoly"):
        """Long division of ordinary polynomials (both supported in degrees >= 0)."""
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        qdeg = q.degree()
        inv = q.terms[qdeg].inverse()
        quot = {}
        while rem:
            top = max(rem)
            if top < qdeg:
                break
            c = rem[top] * inv
            shift = top - qdeg
            quot[shift] = c
            for d, qc in q.terms.items():
                e = d + shift
                v = rem[e] - c * qc if e in rem else -(c * qc)
                if v.is_zero():
                    rem.pop(e, None)
                else:
                    rem[e] = v
        return LaurentPoly._raw(self.m, quot), LaurentPoly._raw(self.m, rem)

    def divide_exact(self, q: "LaurentPoly") -> "LaurentPoly":
        """Return r with ``self == q * r`` in Q(zeta_m)[t, t^-1].

        Raises NotDivisible if no such Laurent polynomial exists.
        """
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.m)
        a, b = self.min_degree(), q.min_degree()
        quot, rem = self.shift(-a).divmod_poly(q.shift(-b))
        if rem:
            raise NotDivisible(f"({q}) does not divide ({self})")
        return quot.shift(a - b)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, CycloNumber)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = (1 / Fraction(other)) if not isinstance(other, CycloNumber) else other.inverse()
            return self * inv
        return self.divide_exact(other)

    def substitute(self, c) -> "LaurentPoly":
        """Return p(c*t): the degree-d coefficient is multiplied by c^d."""
        c = _as_scalar(self.m, c)
        if c.is_zero():
            raise ZeroDivisionError("substitution t -> 0*t")
        return LaurentPoly._raw(self.m, {d: a * c ** d for d, a in self.terms.items()})

    def evaluate(self, c) -> CycloNumber:
        """Exact value of the polynomial at t = c."""
        c = _as_scalar(self.m, c)
        if c.is_zero():
            if any(d < 0 for d in self.terms):
                raise ZeroDivisionError("evaluation at 0 with negative exponents")
            return self.coeff(0)
        total = CycloNumber.zero(self.m)
        for d, a in self.terms.items():
            total = total + a * c ** d
        return total

    def reflect(self) -> "LaurentPoly":
        """p(t^-1)."""
        return LaurentPoly._raw(self.m, {-d: c for d, c in self.terms.items()})

    def embed(self, m2: int) -> "LaurentPoly":
        if m2 == self.m:
            return self
        return LaurentPoly._raw(m2, {d: c.embed(m2) for d, c in self.terms.items()})

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly(self.m, {d: f(c) for d, c in self.terms.items()})

    # normalization ------------------------------------------------------
    def normalize(self) -> "LaurentPoly":
        """Canonical representative of the orbit {±t^k * p}.

        Exponents are shifted so the minimum degree is 0, then the sign is
        chosen so that the first nonzero rational coordinate of the top
        coefficient is positive.
        """
        if self.is_zero():
            raise ValueError("the zero polynomial has no unit normalization")
        p = self.shift(-self.min_degree())
        lead = p.leading_coeff()
        first = next(c for c in lead.coords if c)
        return -p if first < 0 else p

    def unit_sign_shift(self):
        """Return (sign, shift) with ``self == sign * t^shift * self.normalize()``."""
        n = self.normalize()
        k = self.min_degree()
        return (1 if n.shift(k) == self else -1), k

    def eq_up_to_units(self, other: "LaurentPoly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if other.m != self.m:
            m = lcm(self.m, other.m)
            return self.embed(m).normalize() == other.embed(m).normalize()
        return self.normalize() == other.normalize()

    # comparisons / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.m == other.m and self.terms == other.terms
        if isinstance(other, (int, Rational, CycloNumber)):
            try:
                return self == LaurentPoly.constant(self.m, other)
            except ModulusMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.m}, {self})"

    def __str__(self):
        return format_poly(self)


def _as_scalar(m, c) -> CycloNumber:
    if isinstance(c, CycloNumber):
        if c.m != m:
            raise ModulusMismatch(f"moduli {m} and {c.m} differ")
        return c
    return CycloNumber.from_rational(m, c)


def format_poly(p: LaurentPoly, var: str = "t") -> str:
    """Render highest degree first, e.g. ``t^2 + (z5^2 + 1)*t - 1``."""
    if p.is_zero():
        return "0"
    pieces = []
    for d in sorted(p.terms, reverse=True):
        c = p.terms[d]
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        sign = "+"
        if c.is_rational():
            q = c.coords[0]
            if q < 0:
                sign, q = "-", -q
            if not mono:
                body = str(q)
            elif q == 1:
                body = mono
            else:
                body = f"{q}*{mono}"
        else:
            nz = [x for x in c.coords if x]
            text = format_cyclo(c)
            if len(nz) == 1:
                if text.startswith("-"):
                    sign, text = "-", text[1:]
                body = f"{text}*{mono}" if mono else text
            else:
                body = f"({text})*{mono}" if mono else f"({text})"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """Quotient of two Laurent polynomials.

    The denominator is kept unit-normalized; the unit is pushed into the
    numerator.  No gcd cancellation is attempted beyond exact division.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.m != denominator.m:
            raise ModulusMismatch("numerator and denominator moduli differ")
        sign, k = denominator.unit_sign_shift()
        self.denominator = denominator.normalize()
        self.numerator = numerator.shift(-k) * sign

    def as_poly(self):
        """The exact quotient as a LaurentPoly, or None if the division is not exact."""
        try:
            return self.numerator.divide_exact(self.denominator)
        except NotDivisible:
            return None

    def is_polynomial(self) -> bool:
        return self.as_poly() is not None

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numerator * other.numerator,
                                    self.denominator * other.denominator)
        if isinstance(other, LaurentPoly):
            return RationalFunction(self.numerator * other, self.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numerator * other.denominator,
                                    self.denominator * other.numerator)
        if isinstance(other, LaurentPoly):
            return RationalFunction(self.numerator, self.denominator * other)
        return NotImplemented

    def substitute(self, c) -> "RationalFunction":
        return RationalFunction(self.numerator.substitute(c), self.denominator.substitute(c))

    def eq_up_to_units(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = RationalFunction(other, LaurentPoly.constant(other.m, 1))
        m = lcm(self.numerator.m, other.numerator.m)
        lhs = self.numerator.embed(m) * other.denominator.embed(m)
        rhs = other.numerator.embed(m) * self.denominator.embed(m)
        return lhs.eq_up_to_units(rhs)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.numerator * other.denominator) == (other.numerator * self.denominator)
        return NotImplemented

    def __hash__(self):
        return hash(("rf", self.denominator))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


# functional aliases for the module surface ---------------------------------

def poly_divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p.divide_exact(q)


def poly_substitute(p: LaurentPoly, c) -> LaurentPoly:
    return p.substitute(c)


def poly_evaluate(p: LaurentPoly, c) -> CycloNumber:
    return p.evaluate(c)


def normalize_units(p: LaurentPoly) -> LaurentPoly:
    return p.normalize()


def eq_up_to_units(p, q) -> bool:
    if isinstance(p, RationalFunction):
        return p.eq_up_to_units(q)
    if isinstance(q, RationalFunction):
        return q.eq_up_to_units(p)
    return p.eq_up_to_units(q)
