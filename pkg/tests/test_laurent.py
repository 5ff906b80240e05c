import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalex.algebra import (
    CycloNumber,
    LaurentPoly,
    RationalFunction,
    eq_up_to_units,
    normalize_units,
    poly_divide_exact,
    poly_evaluate,
    poly_substitute,
)
from twistalex.errors import NotDivisible

from conftest import cyclo_numbers, laurent_polys, poly, zeta


def test_difference_of_squares():
    t = LaurentPoly.t(1)
    assert (t + 1) * (t - 1) == poly(1, {2: 1, 0: -1})


def test_times_zero():
    p = poly(5, {3: zeta(5), -1: 2})
    assert (p * LaurentPoly.zero(5)).is_zero()
    assert (p * LaurentPoly.zero(5)).terms == {}


def test_product_with_conjugate_roots():
    # (t^2 + z)(t^2 + z^-1) = t^4 + (z + z^-1) t^2 + 1
    z = zeta(5)
    lhs = poly(5, {2: 1, 0: z}) * poly(5, {2: 1, 0: z.inverse()})
    assert lhs == poly(5, {4: 1, 2: z + z.inverse(), 0: 1})


def test_sum_never_stores_zero_coefficients():
    p = poly(3, {1: zeta(3), 0: 1})
    assert (p - p).terms == {}
    assert 1 not in (p + poly(3, {1: -zeta(3)})).terms


def test_divide_exact_examples():
    q = poly_divide_exact(poly(1, {4: 1, 0: -1}), poly(1, {2: 1, 0: -1}))
    assert q == poly(1, {2: 1, 0: 1})


def test_divide_not_divisible():
    with pytest.raises(NotDivisible):
        poly_divide_exact(poly(1, {2: 1, 0: 1}), poly(1, {1: 1, 0: -1}))


def test_divide_mirrors_5_1_quotient():
    z = zeta(5)
    factor = poly(5, {2: 1, 0: -z}) * poly(5, {2: 1, 0: -z.inverse()})
    num = poly(5, {0: 1, 2: -1}) * factor
    assert poly_divide_exact(num, poly(5, {2: 1, 0: -1})) == -factor


def test_divide_handles_laurent_shifts():
    p = poly(1, {-3: 1, -1: 1})     # t^-3 (1 + t^2)
    q = poly(1, {5: 1, 7: 1})       # t^5 (1 + t^2)
    assert poly_divide_exact(p, q) == poly(1, {-8: 1})


def test_substitute_examples():
    i = CycloNumber.sqrt_minus_one(4)
    assert poly_substitute(poly(4, {2: 1, 0: 1}), i) == poly(4, {2: -1, 0: 1})
    p = poly(4, {3: 2, -1: i})
    assert poly_substitute(p, 1) == p
    assert poly_substitute(poly(1, {3: 1}), -1) == poly(1, {3: -1})


def test_evaluate_examples():
    assert poly_evaluate(poly(1, {2: 1, 1: -1, 0: 1}), -1) == 3
    assert poly_evaluate(poly(1, {2: 2, 1: -3, 0: 2}), -1) == 7
    p = poly(5, {3: zeta(5), -2: 4, 0: -1})
    assert poly_evaluate(p, 1) == zeta(5) + 3


def test_evaluate_at_zero_with_negative_powers():
    with pytest.raises(ZeroDivisionError):
        poly_evaluate(poly(1, {-1: 1}), 0)


def test_normalize_examples():
    assert normalize_units(poly(1, {5: -1, 3: -1})) == poly(1, {2: 1, 0: 1})
    assert normalize_units(poly(1, {2: 1, 0: 1})) == poly(1, {2: 1, 0: 1})
    t = LaurentPoly.t(1)
    target = (t - 1) * (t * t + t + 1)
    assert normalize_units(-t * target) == normalize_units(target)
    assert normalize_units(target) == poly(1, {3: 1, 0: -1})


def test_normalize_zero_raises():
    with pytest.raises(ValueError):
        normalize_units(LaurentPoly.zero(1))


def test_sign_rule_uses_first_nonzero_coordinate_of_top_coefficient():
    # top coefficient -z5 + 0: first nonzero coordinate (constant slot) is zero,
    # the z5 slot is -1, so the polynomial is negated
    p = poly(5, {1: -zeta(5), 0: 3})
    assert normalize_units(p) == poly(5, {1: zeta(5), 0: -3})


def test_eq_up_to_units_examples():
    assert eq_up_to_units(poly(1, {2: 1, 0: 1}), poly(1, {5: -1, 3: -1}))
    assert not eq_up_to_units(poly(1, {2: 1, 0: 1}), poly(1, {2: 1, 0: -1}))
    assert eq_up_to_units(LaurentPoly.zero(1), LaurentPoly.zero(1))
    assert not eq_up_to_units(LaurentPoly.zero(1), poly(1, {0: 1}))


def test_eq_up_to_units_across_moduli():
    assert eq_up_to_units(poly(1, {2: 1, 0: 1}), poly(12, {4: -1, 2: -1}))


def test_rational_function_normalizes_denominator():
    r = RationalFunction(poly(1, {0: 1}), poly(1, {3: -1, 2: -1}))
    assert r.denominator == poly(1, {1: 1, 0: 1})
    assert r.numerator == poly(1, {-2: -1})
    assert r.as_poly() is None
    s = RationalFunction(poly(1, {2: 1, 0: -1}), poly(1, {1: 1, 0: -1}))
    assert s.as_poly() == poly(1, {1: 1, 0: 1})


def test_rational_function_equality_up_to_units():
    a = RationalFunction(poly(1, {2: 1, 0: 1}), poly(1, {1: 1, 0: 1}))
    b = RationalFunction(poly(1, {4: -1, 2: -1}), poly(1, {3: 1, 2: 1}))
    assert a.eq_up_to_units(b)
    assert not a.eq_up_to_units(RationalFunction(poly(1, {2: 1}), poly(1, {1: 1, 0: 1})))


def test_str_form():
    z = zeta(5)
    p = poly(5, {2: 1, 1: z + z.inverse(), 0: 1})
    assert str(p) == "t^2 + (-z5^3 - z5^2 - 1)*t + 1"
    assert str(poly(1, {2: 2, 1: -3, 0: 2})) == "2*t^2 - 3*t + 2"
    assert str(poly(5, {1: -z})) == "-z5*t"


MODULI = st.sampled_from([1, 3, 4, 5, 12])


@settings(max_examples=50, deadline=None)
@given(MODULI.flatmap(lambda m: st.tuples(laurent_polys(m), laurent_polys(m), laurent_polys(m))))
def test_ring_laws(pqr):
    p, q, r = pqr
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert all(not c.is_zero() for c in (p * q + r).terms.values())


@settings(max_examples=40, deadline=None)
@given(MODULI.flatmap(lambda m: st.tuples(laurent_polys(m), laurent_polys(m), cyclo_numbers(m))))
def test_evaluation_is_a_ring_homomorphism(pqc):
    p, q, c = pqc
    if c.is_zero():
        return
    assert poly_evaluate(p * q, c) == poly_evaluate(p, c) * poly_evaluate(q, c)
    assert poly_evaluate(p + q, c) == poly_evaluate(p, c) + poly_evaluate(q, c)


@settings(max_examples=40, deadline=None)
@given(MODULI.flatmap(lambda m: st.tuples(laurent_polys(m), laurent_polys(m))))
def test_divide_exact_inverts_multiplication(pq):
    p, q = pq
    if q.is_zero():
        return
    assert poly_divide_exact(p * q, q) == p


@settings(max_examples=40, deadline=None)
@given(MODULI.flatmap(lambda m: st.tuples(laurent_polys(m), st.integers(-5, 5), st.booleans())))
def test_normalize_constant_on_unit_orbits(pks):
    p, k, neg = pks
    if p.is_zero():
        return
    q = p.shift(k) * (-1 if neg else 1)
    assert normalize_units(q) == normalize_units(p)
    assert normalize_units(normalize_units(p)) == normalize_units(p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 12, 20]).flatmap(lambda m: st.tuples(laurent_polys(m), cyclo_numbers(m))))
def test_substitution_round_trip(pc):
    p, c = pc
    if c.is_zero():
        return
    assert poly_substitute(poly_substitute(p, c), c.inverse()) == p
