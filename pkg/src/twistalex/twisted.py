"""Wada's twisted Alexander invariant and the adjoint factorization check.

For a deficiency-one presentation <g_1..g_k | r_1..r_{k-1}>, an
abelianization alpha and a representation rho, the invariant is

    det( Phi(d r_i / d g_j) )_{j != l}  /  det Phi(g_l - 1)

where Phi sends a word w to t^alpha(w) * rho(w).  Everything is defined
only up to multiplication by +-t^k.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence, Union

from .algebra.cyclotomic import CycloNumber
from .algebra.laurent import LaurentPoly, RationalFunction
from .algebra.matrix import PolyMatrix, block_matrix, determinant, matadd, matscale
from .errors import DenominatorZero, NotDivisible
from .group import GroupRingElement, LinPresentation, Presentation, Word, abelianization
from .representations import (
    MetabelianClass,
    Representation,
    adjoint,
    associated_class,
    evaluate_word,
    metabelian_rep,
    psi_decomposition,
    trivial_rep,
    working_modulus,
)

log = logging.getLogger(__name__)


def apply_phi(e: GroupRingElement, alpha: Sequence[int], rho: Representation) -> PolyMatrix:
    """Image of a group-ring element in d x d matrices over Q(zeta_m)[t^+-1]."""
    m, d = rho.modulus, rho.dimension
    by_power: dict[int, tuple] = {}
    for w, c in e.terms.items():
        a = sum(alpha[g] * s for g, s in w.letters)
        img = matscale(CycloNumber.from_rational(m, c), evaluate_word(rho, w))
        by_power[a] = matadd(by_power[a], img) if a in by_power else img
    entries = [[LaurentPoly(m, {a: img[i][j] for a, img in by_power.items()})
                for j in range(d)] for i in range(d)]
    return PolyMatrix(entries, m)


def phi_word(w: Word, alpha: Sequence[int], rho: Representation) -> PolyMatrix:
    return apply_phi(GroupRingElement.from_word(w), alpha, rho)


@dataclass(frozen=True)
class TwistedAlexResult:
    numerator: LaurentPoly
    denominator: LaurentPoly
    reduced: Union[LaurentPoly, RationalFunction]
    pivot: int

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.reduced, LaurentPoly)

    def as_rational(self) -> RationalFunction:
        return RationalFunction(self.numerator, self.denominator)

    def poly(self) -> LaurentPoly:
        if not self.is_polynomial:
            raise NotDivisible(f"invariant is the rational function {self.reduced}")
        return self.reduced

    def eq_up_to_units(self, other) -> bool:
        if isinstance(other, TwistedAlexResult):
            other = other.as_rational()
        return self.as_rational().eq_up_to_units(other)


def default_pivot(alpha: Sequence[int]) -> int:
    """Last generator with nonzero abelianization."""
    for g in range(len(alpha) - 1, -1, -1):
        if alpha[g]:
            return g
    raise DenominatorZero("every generator abelianizes to zero")


def fox_matrix(P: Presentation, alpha: Sequence[int], rho: Representation,
               skip: int | None = None) -> PolyMatrix:
    """Block matrix (Phi(d r_i / d g_j)), omitting column block ``skip``."""
    jac = P.fox_jacobian()
    cols = [j for j in range(P.num_generators) if j != skip]
    blocks = [[apply_phi(jac[i][j], alpha, rho) for j in cols] for i in range(len(P.relators))]
    if not blocks or not cols:
        return PolyMatrix([], rho.modulus)
    return block_matrix(blocks)


def wada_invariant(P: Presentation, alpha: Sequence[int], rho: Representation,
                   pivot: int | None = None) -> TwistedAlexResult:
    P.require_deficiency_one()
    if pivot is None:
        pivot = default_pivot(alpha)
    elif alpha[pivot] == 0:
        raise DenominatorZero(f"pivot generator {P.generators[pivot]} has alpha = 0")
    m, d = rho.modulus, rho.dimension
    numerator = determinant(fox_matrix(P, alpha, rho, skip=pivot))
    g_minus_1 = phi_word(Word.generator(pivot), alpha, rho) - PolyMatrix.identity(m, d)
    denominator = determinant(g_minus_1)
    if denominator.is_zero():
        raise DenominatorZero("det Phi(g_l - 1) vanishes")
    if numerator.is_zero():
        reduced = LaurentPoly.zero(m)
    else:
        try:
            reduced = numerator.divide_exact(denominator).normalize()
        except NotDivisible:
            reduced = RationalFunction(numerator, denominator)
    return TwistedAlexResult(numerator, denominator, reduced, pivot)


def alexander_polynomial(P: Presentation, alpha: Sequence[int] | None = None) -> LaurentPoly:
    """Classical Alexander polynomial, unit-normalized, over Q."""
    if alpha is None:
        alpha = abelianization(P)
    res = wada_invariant(P, alpha, trivial_rep(P.num_generators))
    t_minus_1 = LaurentPoly(1, {1: 1, 0: -1})
    return (res.numerator * t_minus_1).divide_exact(res.denominator).normalize()


def knot_determinant(delta: LaurentPoly) -> int:
    """|Delta(-1)|."""
    value = delta.evaluate(-1)
    if not value.is_rational():
        raise ValueError(f"Delta(-1) = {value} is not rational")
    q = value.to_fraction()
    if q.denominator != 1:
        raise ValueError(f"Delta(-1) = {q} is not an integer")
    n = abs(q.numerator)
    if n % 2 == 0:
        log.warning("knot determinant %d is even; genuine knots have odd determinant", n)
    return n


_BOOLEAN_FIELDS = ("theorem_holds", "P_even_symmetric", "evenness_of_rho_hat_invariant",
                   "Q_vanishes_at_1")


@dataclass
class FactorizationReport:
    """Outcome of checking the adjoint factorization for one metabelian class.

    ``P`` is Delta^{rho_hat}(i t) / (t^2 - 1) when that division is exact.
    """

    cls: MetabelianClass
    hat_cls: MetabelianClass
    hat_exponents_literal: tuple[int, ...]
    alexander: LaurentPoly
    twisted_rho: LaurentPoly | RationalFunction
    twisted_rho_hat: LaurentPoly | RationalFunction
    twisted_adjoint: LaurentPoly | RationalFunction
    P: LaurentPoly | None
    Q: LaurentPoly | None
    theorem_holds: bool
    P_even_symmetric: bool
    evenness_of_rho_hat_invariant: bool
    Q_vanishes_at_1: bool
    diagnostics: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(getattr(self, f) for f in _BOOLEAN_FIELDS)

    def booleans(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in _BOOLEAN_FIELDS}


def _t_poly(m, coeffs: dict[int, int]) -> LaurentPoly:
    return LaurentPoly(m, coeffs)


def verify_factorization(L: LinPresentation, cls: MetabelianClass,
                         modulus: int | None = None,
                         pivot: int | None = None) -> FactorizationReport:
    """Compute every polynomial in the adjoint factorization and test each claim.

    Failing checks are recorded, never raised: the factorization is only
    guaranteed under a hypothesis this code does not decide.
    """
    m = modulus if modulus is not None else working_modulus(cls.n)
    P = L.to_presentation()
    alpha = abelianization(P)
    diagnostics = []

    delta = alexander_polynomial(P, alpha).embed(m)
    rho = metabelian_rep(L, cls, m)
    literal = tuple(2 * k % cls.n for k in cls.exponents)
    hat_cls = associated_class(cls)
    rho_hat = metabelian_rep(L, hat_cls, m)

    tw_rho = wada_invariant(P, alpha, rho, pivot).reduced
    tw_hat = wada_invariant(P, alpha, rho_hat, pivot).reduced
    tw_ad = wada_invariant(P, alpha, adjoint(rho), pivot).reduced

    i = CycloNumber.sqrt_minus_one(m)
    t = LaurentPoly.t(m)
    t2_minus_1 = _t_poly(m, {2: 1, 0: -1})
    delta_minus_t = delta.substitute(-1)

    P_poly = None
    evenness = False
    if isinstance(tw_hat, LaurentPoly) and tw_hat:
        hat_norm = tw_hat.normalize()
        evenness = hat_norm.has_only_even_degrees()
        try:
            P_poly = hat_norm.substitute(i).divide_exact(t2_minus_1)
        except NotDivisible:
            diagnostics.append("Delta^{rho_hat}(i t) is not divisible by t^2 - 1")
    else:
        diagnostics.append(f"Delta^{{rho_hat}} is not a nonzero Laurent polynomial: {tw_hat}")
    if not evenness:
        diagnostics.append("Delta^{rho_hat} has odd-degree terms")

    theorem = False
    symmetric = False
    if P_poly is not None and P_poly:
        symmetric = P_poly.normalize() == P_poly.substitute(-1).normalize()
        if isinstance(tw_ad, LaurentPoly) and tw_ad:
            rhs = (t - 1) * delta_minus_t * P_poly
            theorem = tw_ad.eq_up_to_units(rhs)
            if not theorem:
                diagnostics.append("Delta^{Ad rho} differs from (t-1) Delta(-t) P")
        else:
            diagnostics.append(f"Delta^{{Ad rho}} is not a nonzero Laurent polynomial: {tw_ad}")
    if P_poly is not None and not symmetric:
        diagnostics.append("P(t) is not symmetric under t -> -t")

    Q = None
    q_zero = False
    if isinstance(tw_ad, LaurentPoly) and tw_ad:
        try:
            Q = (tw_ad * (-t - 1)).divide_exact(delta_minus_t).normalize()
            q_zero = Q.evaluate(1).is_zero()
        except NotDivisible:
            diagnostics.append("Delta_K(-t) does not divide Delta^{Ad rho} (-t - 1)")
    if Q is not None and not q_zero:
        diagnostics.append("Q(1) != 0")

    return FactorizationReport(
        cls=cls, hat_cls=hat_cls, hat_exponents_literal=literal,
        alexander=delta, twisted_rho=tw_rho, twisted_rho_hat=tw_hat, twisted_adjoint=tw_ad,
        P=P_poly.normalize() if P_poly else P_poly, Q=Q,
        theorem_holds=theorem, P_even_symmetric=symmetric,
        evenness_of_rho_hat_invariant=evenness, Q_vanishes_at_1=q_zero,
        diagnostics=diagnostics)


def psi_invariants(L: LinPresentation, cls: MetabelianClass, modulus: int | None = None):
    """Wada invariants of the two summands of Ad(rho), as TwistedAlexResults."""
    m = modulus if modulus is not None else working_modulus(cls.n)
    P = L.to_presentation()
    alpha = abelianization(P)
    psi1, psi2 = psi_decomposition(metabelian_rep(L, cls, m), L.mu_index)
    return wada_invariant(P, alpha, psi1), wada_invariant(P, alpha, psi2)


__all__ = [
    "FactorizationReport",
    "TwistedAlexResult",
    "alexander_polynomial",
    "apply_phi",
    "default_pivot",
    "fox_matrix",
    "knot_determinant",
    "phi_word",
    "psi_invariants",
    "verify_factorization",
    "wada_invariant",
]
