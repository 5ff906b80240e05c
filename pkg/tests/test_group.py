import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalex.errors import H1NotZ, NonDeficiencyOne
from twistalex.group import (
    GroupRingElement,
    LinPresentation,
    Presentation,
    Word,
    abelianization,
    exponent_sum,
    fox_derivative,
    lin_to_presentation,
    tietze_extend,
)
from twistalex.knots import builtin_lin, list_examples
from twistalex.snf import int_det, int_matmul, smith_normal_form

X1, X2, MU = 0, 1, 2


def W(*letters):
    return Word(letters)


def fox_oracle(letters, g):
    """Recursive product rule d(uv) = du + u dv on a raw letter list."""
    if not letters:
        return GroupRingElement.zero()
    (h, e), rest = letters[0], letters[1:]
    head = Word([(h, e)])
    if h != g:
        d_head = GroupRingElement.zero()
    elif e == 1:
        d_head = GroupRingElement.one()
    else:
        d_head = -GroupRingElement.from_word(head)
    return d_head + GroupRingElement.from_word(head) * fox_oracle(rest, g)


words = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=10)


def test_lin_trefoil_presentation():
    L = LinPresentation(1, ((W((X1, 1)), W((X1, 1), (X2, -1))),
                            (W((X2, -1), (X1, 1)), W((X2, -1)))))
    P = lin_to_presentation(L)
    assert P.generators == ("x1", "x2", "mu")
    assert P.relators[0] == W((MU, 1), (X1, 1), (MU, -1), (X2, 1), (X1, -1))
    assert P.relators[1] == W((MU, 1), (X2, -1), (X1, 1), (MU, -1), (X2, 1))
    assert P.deficiency() == 1


def test_fox_of_generators():
    one = GroupRingElement.one()
    assert fox_derivative(W((X1, 1)), X1) == one
    assert fox_derivative(W((X1, -1)), X1) == -GroupRingElement.from_word(W((X1, -1)))
    assert fox_derivative(W((X2, 1)), X1).is_zero()
    assert fox_derivative(Word(), X1).is_zero()


def test_fox_example_relator():
    r = W((MU, 1), (X1, 1), (MU, -1), (X2, 1), (X1, -1))
    expected = (GroupRingElement.from_word(W((MU, 1)))
                - GroupRingElement.from_word(r))
    assert fox_derivative(r, X1) == expected
    assert fox_derivative(r, X1) == fox_oracle(list(r), X1)


@settings(max_examples=150, deadline=None)
@given(words)
def test_fox_matches_recursive_oracle(letters):
    w = Word(letters)
    for g in range(3):
        assert fox_derivative(w, g) == fox_oracle(list(w), g)


@settings(max_examples=150, deadline=None)
@given(words)
def test_fundamental_formula(letters):
    w = Word(letters)
    total = GroupRingElement.zero()
    for g in range(3):
        total = total + fox_derivative(w, g) * (GroupRingElement.from_word(Word.generator(g)) - 1)
    assert total == GroupRingElement.from_word(w) - 1


@settings(max_examples=100, deadline=None)
@given(words, words)
def test_fox_product_rule_and_augmentation(a, b):
    u, v = Word(a), Word(b)
    for g in range(3):
        lhs = fox_derivative(u * v, g)
        rhs = fox_derivative(u, g) + GroupRingElement.from_word(u) * fox_derivative(v, g)
        assert lhs == rhs
        assert fox_derivative(u, g).augmentation() == exponent_sum(u, g)


@settings(max_examples=100, deadline=None)
@given(words)
def test_inverse_and_free_reduction(letters):
    w = Word(letters)
    assert (w * w.inverse()).is_identity()
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(w.letters, w.letters[1:]))


def test_exponent_sum_examples():
    assert exponent_sum(W((X1, 1), (X2, -1), (X1, 1)), X1) == 2
    assert exponent_sum(W((MU, 1), (X1, 1), (MU, -1)), MU) == 0


def test_to_string_collapses_runs():
    assert W((X2, -2), (X1, 1)).to_string(("x1", "x2")) == "x2^-2 x1"


def test_group_ring_to_string():
    r = W((MU, 1), (X1, 1), (MU, -1), (X2, 1), (X1, -1))
    assert fox_derivative(r, X1).to_string(("x1", "x2", "mu")) == "mu - mu x1 mu^-1 x2 x1^-1"
    assert (2 - GroupRingElement.from_word(W((X1, 1)))).to_string(("x1",)) == "2 - x1"


# Smith normal form ----------------------------------------------------------

def determinantal_divisor(M, k):
    """gcd of all k x k minors."""
    g = 0
    rows, cols = len(M), len(M[0])
    for R in itertools.combinations(range(rows), k):
        for C in itertools.combinations(range(cols), k):
            g = gcd(g, int_det([[M[i][j] for j in C] for i in R]))
    return g


def check_snf(M):
    U, D, V = smith_normal_form(M)
    assert int_matmul(int_matmul(U, M), V) == D
    assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1
    r = min(len(M), len(M[0]))
    diag = [D[i][i] for i in range(r)]
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0
    return diag


def test_snf_examples():
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[2, -1], [1, -2]]) == [1, 3]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                       min_size=r, max_size=r))))
def test_snf_against_determinantal_divisors(M):
    diag = check_snf(M)
    prod = 1
    for k, d in enumerate(diag, start=1):
        prod *= d
        assert prod == determinantal_divisor(M, k)


# abelianization -------------------------------------------------------------

@pytest.mark.parametrize("name", list_examples())
def test_lin_abelianization_kills_x(name):
    L = builtin_lin(name)
    alpha = abelianization(L.to_presentation())
    assert alpha == (0,) * (2 * L.genus) + (1,)


def test_wirtinger_trefoil():
    a, b = 0, 1
    rel = W((a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1))
    assert abelianization(Presentation(("a", "b"), (rel,))) == (1, 1)


def test_unknot_and_torsion():
    assert abelianization(Presentation(("a",), ())) == (1,)
    P = Presentation(("a", "b"), (W((0, 2)), W((1, 3))))
    with pytest.raises(H1NotZ):
        abelianization(P)
    with pytest.raises(H1NotZ):
        abelianization(Presentation(("a", "b"), ()))


def test_deficiency_check():
    with pytest.raises(NonDeficiencyOne):
        Presentation(("a", "b"), ()).require_deficiency_one()


def test_lin_validation():
    with pytest.raises(ValueError):
        LinPresentation(1, ((W((MU, 1)), Word()), (Word(), Word())))
    with pytest.raises(ValueError):
        LinPresentation(1, ((W((X1, 1)), Word()),))


def test_tietze_keeps_abelianization():
    P = builtin_lin("figure8").to_presentation()
    Q = tietze_extend(P, 2)
    assert abelianization(Q) == abelianization(P) + (1,)
    assert Q.deficiency() == 1
