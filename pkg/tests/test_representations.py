import random

import pytest

from twistalex.algebra import CycloNumber
from twistalex.algebra.matrix import block_diag, identity, scalar_det, scalar_matrix, trace
from twistalex.errors import EvenModulus
from twistalex.group import Word
from twistalex.knots import builtin_lin
from twistalex.representations import (
    MetabelianClass,
    adjoint,
    adjoint_matrix,
    associated_class,
    associated_rep,
    check_relations,
    enumerate_metabelian,
    evaluate_word,
    lin_rep_from_exponents,
    metabelian_rep,
    psi_decomposition,
    reorder_basis,
    solution_set,
    twist_by_character,
    working_modulus,
)

from conftest import knot_data, zeta


def random_word(rng, k, length=8):
    return Word([(rng.randrange(k), rng.choice((1, -1))) for _ in range(length)])


def test_trefoil_representation_images():
    kd = knot_data("trefoil")
    cls, rho = kd.classes[0]
    assert cls.exponents == (1, 2)
    z = zeta(12, 4)  # zeta_3 inside Q(zeta_12)
    w = Word([(0, 1), (1, -1)])
    expected = scalar_matrix(12, [[z.inverse(), 0], [0, z]])
    assert evaluate_word(rho, w) == expected


def test_relations_fail_for_wrong_exponents():
    L = builtin_lin("trefoil")
    cls = MetabelianClass((1, 1), 3, canonical=False)
    assert not check_relations(L.to_presentation(), metabelian_rep(L, cls))


def test_solution_sets_and_class_counts(knot):
    sols = solution_set(knot.L, knot.n)
    assert len(sols) == knot.n
    assert len(knot.classes) == (knot.n - 1) // 2
    for cls, rho in knot.classes:
        assert check_relations(knot.P, rho)
        assert cls.canonicalize() == cls


def test_known_determinants():
    assert {name: knot_data(name).n for name in ("trefoil", "figure8", "5_1", "5_2")} == {
        "trefoil": 3, "figure8": 5, "5_1": 5, "5_2": 7}
    assert [working_modulus(n) for n in (3, 5, 7)] == [12, 20, 28]


def test_even_determinant_is_rejected():
    with pytest.raises(EvenModulus):
        enumerate_metabelian(builtin_lin("trefoil"), 4)


def test_adjoint_of_diagonal_and_antidiagonal():
    z = zeta(12, 4)
    zero = CycloNumber.zero(12)
    D = ((z, zero), (zero, z.inverse()))
    assert adjoint_matrix(D) == scalar_matrix(12, [[z * z, 0, 0], [0, 1, 0], [0, 0, z ** -2]])
    A = scalar_matrix(12, [[0, 1], [-1, 0]])
    assert adjoint_matrix(A) == scalar_matrix(12, [[0, 0, -1], [0, -1, 0], [-1, 0, 0]])


def test_adjoint_has_determinant_one(knot):
    for _, rho in knot.classes:
        for a in adjoint(rho).images:
            assert scalar_det(a) == 1


def test_trace_identity_on_random_words(knot):
    rng = random.Random(hash(knot.name) & 0xFFFF)
    for cls, rho in knot.classes:
        ad = adjoint(rho)
        for _ in range(100):
            w = random_word(rng, rho.num_generators)
            tr = trace(evaluate_word(rho, w))
            assert trace(evaluate_word(ad, w)) == tr * tr - 1


def test_adjoint_splits_as_psi2_plus_psi1(knot):
    for _, rho in knot.classes:
        psi1, psi2 = psi_decomposition(rho, knot.L.mu_index)
        for g, a in enumerate(adjoint(rho).images):
            assert reorder_basis(a) == block_diag(psi2.images[g], psi1.images[g])
        assert check_relations(knot.P, psi1)
        assert check_relations(knot.P, psi2)


def test_psi2_is_a_twist_of_associated_rep(knot):
    """Twisting psi_2 by alpha -> sqrt(-1) gives rho_hat up to a basis change."""
    i = CycloNumber.sqrt_minus_one(knot.m)
    for cls, rho in knot.classes:
        _, psi2 = psi_decomposition(rho, knot.L.mu_index)
        twisted = twist_by_character(psi2, knot.alpha, i)
        _, rho_hat = associated_rep(knot.L, cls, knot.m)
        x_traces = [trace(a) for a in twisted.images[:-1]]
        hat_traces = [trace(a) for a in rho_hat.images[:-1]]
        assert x_traces == hat_traces
        assert scalar_det(twisted.images[-1]) == scalar_det(rho_hat.images[-1]) == 1
        assert trace(twisted.images[-1]) == 0


def test_associated_rep_cycles_figure8_classes():
    kd = knot_data("figure8")
    (c1, r1), (c2, r2) = kd.classes
    assert associated_rep(kd.L, c1, kd.m) == (c2, r2)
    assert associated_rep(kd.L, c2, kd.m) == (c1, r1)


def test_associated_class_permutes_classes(knot):
    classes = [c for c, _ in knot.classes]
    assert sorted(associated_class(c) for c in classes) == classes


def test_character_twist_with_minus_one():
    kd = knot_data("trefoil")
    _, rho = kd.classes[0]
    neg = twist_by_character(rho, kd.alpha, -1)
    assert neg.images[:2] == rho.images[:2]
    assert neg.images[2] == tuple(tuple(-x for x in r) for r in rho.images[2])
    assert twist_by_character(neg, kd.alpha, -1) == rho


def test_explicit_exponents_match_enumeration():
    kd = knot_data("figure8")
    cls, rho = lin_rep_from_exponents(kd.L, (1, 2), kd.n, kd.m)
    assert rho == kd.classes[0][1]
    assert cls.negated().canonicalize() == cls.canonicalize()


def test_identity_word_maps_to_identity(knot):
    for _, rho in knot.classes:
        assert evaluate_word(rho, Word()) == identity(rho.modulus, 2)
