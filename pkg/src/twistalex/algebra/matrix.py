"""Dense matrices over Q(zeta_m)[t, t^-1] and over Q(zeta_m).

Scalar matrices are plain tuples of row tuples of CycloNumber; the helpers
below treat them functionally.  PolyMatrix wraps a grid of LaurentPoly.
"""
from __future__ import annotations

from ..errors import ModulusMismatch
from .cyclotomic import CycloNumber
from .laurent import LaurentPoly


# scalar matrices -----------------------------------------------------------

def identity(m: int, d: int):
    one, zero = CycloNumber.one(m), CycloNumber.zero(m)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def scalar_matrix(m: int, rows):
    """Coerce nested numbers (ints, Fractions, CycloNumbers) into a scalar matrix."""
    out = []
    for row in rows:
        out.append(tuple(c if isinstance(c, CycloNumber) else CycloNumber.from_rational(m, c)
                         for c in row))
    return tuple(out)


def matmul(a, b):
    n, k, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for r in range(k):
                x, y = a[i][r], b[r][j]
                if x.is_zero() or y.is_zero():
                    continue
                xy = x * y
                acc = xy if acc is None else acc + xy
            row.append(acc if acc is not None else CycloNumber.zero(a[0][0].m))
        out.append(tuple(row))
    return tuple(out)


def matscale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def trace(a) -> CycloNumber:
    total = a[0][0]
    for i in range(1, len(a)):
        total = total + a[i][i]
    return total


def scalar_det(a) -> CycloNumber:
    """Determinant over the field by Gaussian elimination."""
    n = len(a)
    rows = [list(r) for r in a]
    det = CycloNumber.one(a[0][0].m)
    for k in range(n):
        piv = next((i for i in range(k, n) if not rows[i][k].is_zero()), None)
        if piv is None:
            return CycloNumber.zero(det.m)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        p = rows[k][k]
        det = det * p
        inv = p.inverse()
        for i in range(k + 1, n):
            f = rows[i][k] * inv
            if not f.is_zero():
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return det


def matinv(a):
    """Inverse over the field by Gauss-Jordan elimination."""
    n = len(a)
    m = a[0][0].m
    eye = identity(m, n)
    rows = [list(a[i]) + list(eye[i]) for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not rows[i][k].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[k], rows[piv] = rows[piv], rows[k]
        inv = rows[k][k].inverse()
        rows[k] = [x * inv for x in rows[k]]
        for i in range(n):
            if i != k and not rows[i][k].is_zero():
                f = rows[i][k]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return tuple(tuple(r[n:]) for r in rows)


def matrix_embed(a, m2: int):
    return tuple(tuple(x.embed(m2) for x in row) for row in a)


def block_diag(*blocks):
    m = blocks[0][0][0].m
    n = sum(len(b) for b in blocks)
    zero = CycloNumber.zero(m)
    out = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


# polynomial matrices -------------------------------------------------------

class PolyMatrix:
    """Rectangular grid of Laurent polynomials sharing one cyclotomic modulus."""

    __slots__ = ("m", "rows", "cols", "entries")

    def __init__(self, entries, m: int | None = None):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            # 0x0 matrices are legitimate (empty Fox minor)
            self.m = m if m is not None else 1
            self.rows, self.cols = len(entries), 0
            self.entries = tuple(tuple(r) for r in entries)
            return
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise ValueError("rows of unequal length")
        if m is None:
            m = entries[0][0].m
        for r in entries:
            for p in r:
                if p.m != m:
                    raise ModulusMismatch(f"entry modulus {p.m} differs from {m}")
        self.m = m
        self.rows, self.cols = len(entries), width
        self.entries = tuple(tuple(r) for r in entries)

    @classmethod
    def from_scalar(cls, a, t_power: int = 0) -> "PolyMatrix":
        """t^t_power times a scalar matrix."""
        m = a[0][0].m
        return cls([[LaurentPoly.monomial(m, t_power, x) if not x.is_zero()
                     else LaurentPoly.zero(m) for x in row] for row in a], m)

    @classmethod
    def zeros(cls, m: int, rows: int, cols: int) -> "PolyMatrix":
        z = LaurentPoly.zero(m)
        return cls([[z] * cols for _ in range(rows)], m)

    @classmethod
    def identity(cls, m: int, d: int) -> "PolyMatrix":
        return cls.from_scalar(identity(m, d))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(r, s)]
                           for r, s in zip(self.entries, other.entries)], self.m)

    def __sub__(self, other):
        return PolyMatrix([[a - b for a, b in zip(r, s)]
                           for r, s in zip(self.entries, other.entries)], self.m)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.cols != other.rows:
                raise ValueError("incompatible shapes")
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = LaurentPoly.zero(self.m)
                    for k in range(self.cols):
                        a, b = self.entries[i][k], other.entries[k][j]
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return PolyMatrix(out, self.m)
        return PolyMatrix([[a * other for a in r] for r in self.entries], self.m)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def substitute(self, c) -> "PolyMatrix":
        return PolyMatrix([[a.substitute(c) for a in r] for r in self.entries], self.m)

    def __repr__(self):
        body = "; ".join(", ".join(str(p) for p in r) for r in self.entries)
        return f"PolyMatrix([{body}])"


def block_matrix(blocks) -> PolyMatrix:
    """Assemble a PolyMatrix from a 2D grid of PolyMatrix blocks."""
    rows = []
    for block_row in blocks:
        height = block_row[0].rows
        for i in range(height):
            row = []
            for b in block_row:
                row.extend(b.entries[i])
            rows.append(row)
    m = blocks[0][0].m if blocks and blocks[0] else 1
    return PolyMatrix(rows, m)


def determinant(M: PolyMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free Bareiss elimination.

    Each row is first multiplied by a power of t so that all entries are
    ordinary polynomials; the accumulated unit is divided back out.
    """
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n, m = M.rows, M.m
    if n == 0:
        return LaurentPoly.constant(m, 1)
    rows = []
    total_shift = 0
    for r in M.entries:
        nz = [p.min_degree() for p in r if p]
        if not nz:
            return LaurentPoly.zero(m)
        s = -min(nz)
        total_shift += s
        rows.append([p.shift(s) for p in r])

    sign = 1
    prev = LaurentPoly.constant(m, 1)
    for k in range(n - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if swap is None:
                return LaurentPoly.zero(m)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            lead = rows[i][k]
            new = rows[i]
            for j in range(k + 1, n):
                val = pivot * new[j]
                if lead and rows[k][j]:
                    val = val - lead * rows[k][j]
                if k > 0 and val:
                    val, rem = val.divmod_poly(prev)
                    assert not rem, "Bareiss division must be exact"
                new[j] = val
            new[k] = LaurentPoly.zero(m)
        prev = pivot
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(-total_shift)


def cofactor_determinant(M: PolyMatrix) -> LaurentPoly:
    """Laplace expansion along the first row; exponential, kept as an oracle."""
    if M.rows != M.cols:
        raise ValueError("non-square matrix")
    n = M.rows
    if n == 0:
        return LaurentPoly.constant(M.m, 1)
    if n == 1:
        return M.entries[0][0]
    total = LaurentPoly.zero(M.m)
    for j in range(n):
        a = M.entries[0][j]
        if not a:
            continue
        minor = PolyMatrix([r[:j] + r[j + 1:] for r in M.entries[1:]], M.m)
        term = a * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
