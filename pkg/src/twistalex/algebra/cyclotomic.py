"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

An element is stored by its rational coordinates in the power basis
``1, z, ..., z^(phi(m)-1)`` where ``z = exp(2 pi i / m)``; coordinates are
always reduced modulo the m-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from ..errors import ModulusMismatch


def _poly_divmod_int(num, den):
    """Divide integer polynomials (low degree first); ``den`` must be monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed as ``(x^m - 1) / prod(Phi_d for d | m, d < m)``.
    """
    if m < 1:
        raise ValueError("cyclotomic modulus must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of z^k for k = 0 .. m-1."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as a rational coordinate")


class CycloNumber:
    """An element of Q(zeta_m), immutable and hashable.

    Stored as integer numerators over one positive common denominator,
    with the content reduced so that equal elements have equal storage.
    """

    __slots__ = ("m", "_num", "_den", "_hash")

    def __init__(self, m: int, coords):
        deg = euler_phi(m)
        coords = [_to_fraction(c) for c in coords]
        den, nums = _clear_denominators(coords)
        if len(nums) > deg:
            nums = _reduce(m, nums, 0)
        elif len(nums) < deg:
            nums = nums + [0] * (deg - len(nums))
        _init(self, m, nums, den)

    @classmethod
    def _make(cls, m, nums, den=1) -> "CycloNumber":
        obj = cls.__new__(cls)
        _init(obj, m, nums, den)
        return obj

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """Rational coordinates in the power basis."""
        d = self._den
        return tuple(Fraction(x, d) for x in self._num)

    # constructors -------------------------------------------------------
    @classmethod
    def root(cls, m: int, k: int = 1) -> "CycloNumber":
        """Return zeta_m^k."""
        if m < 1:
            raise ValueError("cyclotomic modulus must be positive")
        return cls._make(m, _power_table(m)[k % m])

    @classmethod
    def from_rational(cls, m: int, value) -> "CycloNumber":
        q = _to_fraction(value)
        return cls._make(m, (q.numerator,) + (0,) * (euler_phi(m) - 1), q.denominator)

    @classmethod
    def zero(cls, m: int) -> "CycloNumber":
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycloNumber":
        return cls.from_rational(m, 1)

    @classmethod
    def sqrt_minus_one(cls, m: int) -> "CycloNumber":
        if m % 4:
            raise ValueError(f"Q(zeta_{m}) does not contain sqrt(-1)")
        return cls.root(m, m // 4)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self):
        return any(self._num)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.m != self.m:
                raise ModulusMismatch(f"moduli {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, Rational)):
            return CycloNumber.from_rational(self.m, other)
        return NotImplemented

    def _combine(self, other, sign):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        if da == db:
            nums = [a + sign * b for a, b in zip(self._num, other._num)]
            return CycloNumber._make(self.m, nums, da)
        g = gcd(da, db)
        fa, fb = db // g, da // g
        nums = [a * fa + sign * b * fb for a, b in zip(self._num, other._num)]
        return CycloNumber._make(self.m, nums, da * fa)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __neg__(self):
        obj = CycloNumber.__new__(CycloNumber)
        obj.m, obj._num, obj._den, obj._hash = self.m, tuple(-a for a in self._num), self._den, None
        return obj

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloNumber):
            c = _to_fraction(other)
            return CycloNumber._make(self.m, [a * c.numerator for a in self._num],
                                     self._den * c.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, other._num
        den = self._den * other._den
        if len(a) == 1:
            return CycloNumber._make(self.m, (a[0] * b[0],), den)
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber._make(self.m, _reduce(self.m, prod, 0), den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNumber.from_rational(self.m, 1 / self.to_fraction())
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        s = _xgcd_inverse(list(self.coords), phi)
        return CycloNumber(self.m, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloNumber):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / _to_fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycloNumber.from_rational(self.m, other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _permute_powers(self, m2, step):
        """Image under z^i -> z_m2^(i * step), coordinates reduced in Q(zeta_m2)."""
        table = _power_table(m2)
        out = [0] * euler_phi(m2)
        for i, c in enumerate(self._num):
            if c:
                for j, v in enumerate(table[(i * step) % m2]):
                    if v:
                        out[j] += c * v
        return CycloNumber._make(m2, out, self._den)

    def conjugate(self) -> "CycloNumber":
        """Complex conjugation, the automorphism zeta_m -> zeta_m^-1."""
        return self._permute_powers(self.m, -1)

    def embed(self, m2: int) -> "CycloNumber":
        """The same field element viewed inside Q(zeta_m2); requires m | m2."""
        if m2 % self.m:
            raise ModulusMismatch(f"Q(zeta_{self.m}) does not embed in Q(zeta_{m2})")
        if m2 == self.m:
            return self
        return self._permute_powers(m2, m2 // self.m)

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.m == other.m and self._den == other._den and self._num == other._num
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.m, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"CycloNumber({self.m}, {[str(c) for c in self.coords]})"

    def __str__(self):
        return format_cyclo(self)


def _init(obj, m, nums, den):
    if den != 1:
        g = gcd(den, *nums)
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
    obj.m = m
    obj._num = tuple(nums)
    obj._den = den
    obj._hash = None


def _clear_denominators(coords):
    den = 1
    for c in coords:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return 1, [c.numerator for c in coords]
    return den, [c.numerator * (den // c.denominator) for c in coords]


def _reduce(m: int, coords, zero=Fraction(0)):
    """Reduce a coordinate list of any length modulo Phi_m."""
    table = _power_table(m)
    deg = len(table[0])
    out = list(coords[:deg]) + [zero] * max(0, deg - len(coords))
    for k in range(deg, len(coords)):
        c = coords[k]
        if c:
            for j, v in enumerate(table[k % m]):
                if v:
                    out[j] += c * v
    return out


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a, b):
    a = list(a)
    inv = 1 / b[-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _trim(q), _trim(a[: len(b) - 1])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _xgcd_inverse(a, phi):
    """Return s with s*a = 1 mod phi (a and phi coprime, phi irreducible)."""
    r0, r1 = _trim(list(phi)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # r1 is a nonzero constant
    c = r1[0]
    return [x / c for x in s1]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def common_modulus(*values) -> int:
    m = 1
    for v in values:
        m = lcm(m, v.m)
    return m


def format_cyclo(a: CycloNumber) -> str:
    """Human-readable form in the power basis, e.g. ``z5^2 + 2`` (z5 is zeta_5)."""
    if a.is_rational():
        return str(a.coords[0])
    parts = []
    for i in range(len(a.coords) - 1, -1, -1):
        c = a.coords[i]
        if not c:
            continue
        if i == 0:
            mono = str(abs(c))
        else:
            z = f"z{a.m}" if i == 1 else f"z{a.m}^{i}"
            mono = z if abs(c) == 1 else f"{abs(c)}*{z}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mono))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, mono in parts[1:]:
        text += f" {sign} {mono}"
    return text


def cyclo_new(m: int, k: int) -> CycloNumber:
    """zeta_m^k."""
    return CycloNumber.root(m, k)


def embed_modulus(a: CycloNumber, m2: int) -> CycloNumber:
    return a.embed(m2)
