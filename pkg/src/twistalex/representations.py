"""Matrix representations of presented groups, with the metabelian SL(2) family.

Metabelian representations are described through a Lin presentation.  An
exponent vector ``k`` over Z/n gives

    x_i -> diag(zeta_n^k_i, zeta_n^-k_i),    mu -> [[0, 1], [-1, 0]],

which respects the relations exactly when
``sum_j (e_j(a_i^+) + e_j(a_i^-)) k_j == 0 (mod n)`` for every pair i.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Sequence

from .algebra.cyclotomic import CycloNumber, lcm
from .algebra.matrix import (
    block_diag,
    identity,
    matinv,
    matmul,
    matscale,
    scalar_det,
    scalar_matrix,
    trace,
)
from .errors import EvenModulus, ModulusMismatch, NotNormalForm
from .group import LinPresentation, Presentation, Word
from .snf import smith_normal_form

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Representation:
    """One square matrix over Q(zeta_modulus) per generator of a presentation."""

    images: tuple
    modulus: int
    label: str = ""

    def __post_init__(self):
        images = tuple(tuple(tuple(r) for r in a) for a in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            return
        d = len(images[0])
        for a in images:
            if len(a) != d or any(len(r) != d for r in a):
                raise ValueError("all images must be square of the same size")
            for r in a:
                for x in r:
                    if x.m != self.modulus:
                        raise ModulusMismatch(f"entry modulus {x.m} differs from {self.modulus}")

    @property
    def dimension(self) -> int:
        return len(self.images[0]) if self.images else 0

    @property
    def num_generators(self) -> int:
        return len(self.images)

    @cached_property
    def inverses(self):
        return tuple(matinv(a) for a in self.images)

    def image(self, g: int, e: int = 1):
        return self.images[g] if e > 0 else self.inverses[g]

    def __call__(self, w: Word):
        return evaluate_word(self, w)

    def embed(self, m2: int) -> "Representation":
        return Representation(
            tuple(tuple(tuple(x.embed(m2) for x in r) for r in a) for a in self.images),
            m2, self.label)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.modulus == other.modulus
                and self.images == other.images)

    def __hash__(self):
        return hash((self.modulus, self.images))


@dataclass(frozen=True, order=True)
class MetabelianClass:
    """Exponent vector k over Z/n labelling a metabelian representation."""

    exponents: tuple[int, ...]
    n: int
    canonical: bool = field(default=True, compare=False)

    def negated(self) -> "MetabelianClass":
        return MetabelianClass(tuple((-k) % self.n for k in self.exponents), self.n, False)

    def canonicalize(self) -> "MetabelianClass":
        k = tuple(x % self.n for x in self.exponents)
        neg = tuple((-x) % self.n for x in k)
        return MetabelianClass(min(k, neg), self.n, True)

    def is_trivial(self) -> bool:
        return all(x % self.n == 0 for x in self.exponents)

    @property
    def label(self) -> str:
        return "k=" + ",".join(str(x) for x in self.exponents)


# basic constructions -------------------------------------------------------

def evaluate_word(rho: Representation, w: Word):
    """Product of generator images (inverses for negative letters) in word order."""
    result = identity(rho.modulus, rho.dimension)
    for g, e in w.letters:
        result = matmul(result, rho.image(g, e))
    return result


def trace_function(rho: Representation, w: Word) -> CycloNumber:
    """I_w(rho) = tr rho(w)."""
    return trace(evaluate_word(rho, w))


def check_relations(P: Presentation, rho: Representation) -> bool:
    if rho.num_generators != P.num_generators:
        raise ValueError(f"representation has {rho.num_generators} images for "
                         f"{P.num_generators} generators")
    eye = identity(rho.modulus, rho.dimension)
    return all(evaluate_word(rho, r) == eye for r in P.relators)


def trivial_rep(num_generators: int, modulus: int = 1, dimension: int = 1) -> Representation:
    eye = identity(modulus, dimension)
    return Representation((eye,) * num_generators, modulus, "trivial")


def character(alpha: Sequence[int], c: CycloNumber, label: str = "") -> Representation:
    """One-dimensional representation g -> c^alpha(g)."""
    return Representation(tuple(((c ** a,),) for a in alpha), c.m, label)


def twist_by_character(rho: Representation, alpha: Sequence[int], c) -> Representation:
    """g -> c^alpha(g) * rho(g)."""
    if not isinstance(c, CycloNumber):
        c = CycloNumber.from_rational(rho.modulus, c)
    images = tuple(matscale(c ** a, img) for a, img in zip(alpha, rho.images))
    return Representation(images, rho.modulus, rho.label)


def conjugate_rep(rho: Representation, C) -> Representation:
    """g -> C rho(g) C^-1."""
    Cinv = matinv(C)
    return Representation(tuple(matmul(matmul(C, a), Cinv) for a in rho.images),
                          rho.modulus, rho.label)


def direct_sum(*reps: Representation) -> Representation:
    m = reps[0].modulus
    if any(r.modulus != m for r in reps):
        raise ModulusMismatch("direct sum of representations over different fields")
    images = tuple(block_diag(*imgs) for imgs in zip(*(r.images for r in reps)))
    return Representation(images, m, " + ".join(r.label for r in reps if r.label))


# metabelian family ---------------------------------------------------------

def working_modulus(n: int) -> int:
    """Smallest cyclotomic modulus holding zeta_n and sqrt(-1)."""
    return lcm(4, n)


def _antidiag(m):
    return scalar_matrix(m, [[0, 1], [-1, 0]])


def metabelian_rep(L: LinPresentation, cls: MetabelianClass, modulus: int | None = None
                   ) -> Representation:
    n = cls.n
    m = modulus if modulus is not None else working_modulus(n)
    if m % n:
        raise ModulusMismatch(f"Q(zeta_{m}) does not contain the {n}-th roots of unity")
    step = m // n
    zero = CycloNumber.zero(m)
    images = []
    for k in cls.exponents:
        z = CycloNumber.root(m, k * step)
        images.append(((z, zero), (zero, CycloNumber.root(m, -k * step))))
    images.append(_antidiag(m))
    return Representation(tuple(images), m, cls.label)


def solution_set(L: LinPresentation, n: int) -> list[tuple[int, ...]]:
    """All k in (Z/n)^2g solving the metabelian exponent system, sorted."""
    M = L.relation_matrix()
    size = 2 * L.genus
    U, D, V = smith_normal_form(M)
    ranges = []
    for i in range(size):
        d = D[i][i] if i < len(D) else 0
        g = gcd(d, n)
        step = n // g
        ranges.append([step * j for j in range(g)])
    sols = set()
    for y in itertools.product(*ranges):
        k = tuple(sum(V[i][j] * y[j] for j in range(size)) % n for i in range(size))
        sols.add(k)
    for k in sols:
        for row in M:
            assert sum(a * b for a, b in zip(row, k)) % n == 0
    return sorted(sols)


def enumerate_metabelian(L: LinPresentation, n: int, modulus: int | None = None):
    """Irreducible metabelian classes with their normal-form representations.

    One class per orbit {k, -k} of nonzero solutions, ordered by the
    canonical (lexicographically smaller) exponent vector.
    """
    if n < 1:
        raise ValueError("the knot determinant must be positive")
    if n % 2 == 0:
        raise EvenModulus(f"determinant {n} is even; knot determinants are odd")
    sols = solution_set(L, n)
    canon = sorted({MetabelianClass(k, n).canonicalize() for k in sols
                    if any(k)})
    expected = (n - 1) // 2
    if len(canon) != expected:
        log.warning("found %d metabelian classes but (n-1)/2 = %d (solution set size %d)",
                    len(canon), expected, len(sols))
    P = L.to_presentation()
    out = []
    for cls in canon:
        rho = metabelian_rep(L, cls, modulus)
        assert check_relations(P, rho)
        out.append((cls, rho))
    return out


def lin_rep_from_exponents(L: LinPresentation, exponents: Sequence[int], n: int,
                           modulus: int | None = None) -> tuple[MetabelianClass, Representation]:
    """Explicit exponent override; relations are checked by the caller."""
    cls = MetabelianClass(tuple(k % n for k in exponents), n, canonical=False)
    if len(cls.exponents) != 2 * L.genus:
        raise ValueError(f"need {2 * L.genus} exponents, got {len(cls.exponents)}")
    return cls, metabelian_rep(L, cls, modulus)


# adjoint action ------------------------------------------------------------

def _sl2_coords(X):
    """Coordinates of a traceless 2x2 matrix in the basis (E, H, F)."""
    return (X[0][1], X[0][0], X[1][0])


def adjoint_matrix(A):
    """Matrix of v -> A v A^-1 on sl_2 in the ordered basis (E, H, F)."""
    m = A[0][0].m
    Ainv = matinv(A)
    basis = [scalar_matrix(m, [[0, 1], [0, 0]]),
             scalar_matrix(m, [[1, 0], [0, -1]]),
             scalar_matrix(m, [[0, 0], [1, 0]])]
    cols = [_sl2_coords(matmul(matmul(A, B), Ainv)) for B in basis]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def adjoint(rho: Representation) -> Representation:
    if rho.dimension != 2:
        raise ValueError("the adjoint action needs a 2-dimensional representation")
    for a in rho.images:
        if scalar_det(a) != 1:
            raise ValueError("adjoint: image is not in SL(2)")
    label = f"Ad({rho.label})" if rho.label else "Ad"
    return Representation(tuple(adjoint_matrix(a) for a in rho.images), rho.modulus, label)


def _normal_form_diagonal(rho: Representation, mu_index: int):
    m = rho.modulus
    if rho.dimension != 2:
        raise NotNormalForm("expected a 2-dimensional representation")
    if rho.images[mu_index] != _antidiag(m):
        raise NotNormalForm("meridian image is not [[0, 1], [-1, 0]]")
    zs = []
    for g, a in enumerate(rho.images):
        if g == mu_index:
            continue
        if not (a[0][1].is_zero() and a[1][0].is_zero()) or a[0][0] * a[1][1] != 1:
            raise NotNormalForm(f"generator {g} image is not diag(z, 1/z)")
        zs.append(a[0][0])
    return zs


def psi_decomposition(rho: Representation, mu_index: int | None = None):
    """Split Ad(rho) into the line <H> (psi_1) and the plane <E, F> (psi_2)."""
    if mu_index is None:
        mu_index = rho.num_generators - 1
    m = rho.modulus
    zs = iter(_normal_form_diagonal(rho, mu_index))
    one, zero = CycloNumber.one(m), CycloNumber.zero(m)
    psi1, psi2 = [], []
    for g in range(rho.num_generators):
        if g == mu_index:
            psi1.append(((-one,),))
            psi2.append(scalar_matrix(m, [[0, -1], [-1, 0]]))
        else:
            z2 = next(zs) ** 2
            psi1.append(((one,),))
            psi2.append(((z2, zero), (zero, z2.inverse())))
    base = rho.label or "rho"
    return (Representation(tuple(psi1), m, f"psi1({base})"),
            Representation(tuple(psi2), m, f"psi2({base})"))


# index order (E, F, H) exposing the psi_2 + psi_1 block structure
EFH_ORDER = (0, 2, 1)


def reorder_basis(a, order=EFH_ORDER):
    return tuple(tuple(a[i][j] for j in order) for i in order)


def associated_class(cls: MetabelianClass) -> MetabelianClass:
    """Class of the associated representation: exponents 2k, canonicalized."""
    return MetabelianClass(tuple(2 * k % cls.n for k in cls.exponents), cls.n,
                           canonical=False).canonicalize()


def associated_rep(L: LinPresentation, cls: MetabelianClass, modulus: int | None = None):
    """Return ``(class, representation)`` of the associated metabelian representation."""
    hat = associated_class(cls)
    return hat, metabelian_rep(L, hat, modulus)
