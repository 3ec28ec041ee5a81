"""
Tests for the exact rings, series expansion and interpolation.
"""

from fractions import Fraction

import pytest
import sympy as sp

from hidden_homfly.tools.ringkit import (
    LaurentA,
    Laurent2,
    ONE_MINUS_XI2,
    PolyT,
    RationalInvariant,
    RingError,
    binom_poly,
    interpolate,
    normalize,
    series_coefficients,
    substitute_alpha_to_alphaxi,
)

A, X, T = sp.symbols("a x T")


def test_laurent_a_drops_zero_coefficients():
    p = LaurentA({1: 2, 0: 0}) + LaurentA({1: -2})
    assert p.is_zero()
    assert str(p) == "0"


def test_laurent_a_rendering_sorted_by_exponent():
    p = LaurentA({-1: 1, -2: -1})
    assert str(p) == "-1*a^-2 + 1*a^-1"


def test_laurent_a_ring_laws():
    a = LaurentA({-1: 1, 2: 3})
    b = LaurentA({0: Fraction(1, 2), 1: -1})
    c = LaurentA({-3: 4})
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * LaurentA.one() == a
    assert LaurentA.monomial(3) ** -1 == LaurentA.monomial(-3)


def test_laurent2_ring_laws_against_sympy():
    a = Laurent2({(1, -1): 2, (0, 2): -1})
    b = Laurent2({(-1, 1): 1, (0, 0): 3})
    product = (a * b).to_sympy(A, X)
    assert sp.expand(product - a.to_sympy(A, X) * b.to_sympy(A, X)) == 0


def test_substitute_alpha_to_alphaxi():
    u = RationalInvariant(Laurent2.monomial(-1, 1), 1)
    assert substitute_alpha_to_alphaxi(u) == RationalInvariant(Laurent2.monomial(-1, 0), 1)

    v = RationalInvariant(Laurent2.monomial(1, 1), 1)
    assert substitute_alpha_to_alphaxi(v) == RationalInvariant(Laurent2.monomial(1, 2), 1)

    one = RationalInvariant.one()
    assert substitute_alpha_to_alphaxi(one) == one


def test_series_of_geometric_series():
    v = RationalInvariant(Laurent2.one(), 1)
    assert series_coefficients(v, -1, 2) == [0, 1, 1, 1]


def test_series_with_negative_xi_power():
    v = RationalInvariant(Laurent2.monomial(-2, -2), 1)
    expected = [0, 0] + [LaurentA.monomial(-2)] * 4
    assert series_coefficients(v, -3, 2) == expected


def test_series_cancellation():
    v = RationalInvariant(ONE_MINUS_XI2, 1)
    assert series_coefficients(v, -1, 3) == [0, 1, 0, 0, 0]


def test_series_matches_sympy_expansion():
    num = Laurent2({(0, 0): 1, (1, 2): 3, (-1, 4): -2})
    v = RationalInvariant(num, 3)
    coeffs = series_coefficients(v, 0, 5)
    expansion = sp.series(v.to_sympy(A, X), X, 0, 12).removeO()
    for t, c in enumerate(coeffs):
        assert sp.expand(expansion.coeff(X, 2 * t) - c.to_sympy(A)) == 0


def test_series_rejects_odd_xi_power():
    v = RationalInvariant(Laurent2.monomial(0, 1), 1)
    with pytest.raises(RingError):
        series_coefficients(v, 0, 2)


def test_normalize():
    assert normalize(RationalInvariant(ONE_MINUS_XI2, 1)) == RationalInvariant(Laurent2.one(), 0)
    reduced = normalize(RationalInvariant(Laurent2({(0, 1): 1, (0, 3): -1}), 2))
    assert reduced.dpow == 1
    assert reduced.num == Laurent2.monomial(0, 1)
    plain = normalize(RationalInvariant(Laurent2.monomial(1, 0), 0))
    assert (plain.num, plain.dpow) == (Laurent2.monomial(1, 0), 0)


def test_normalize_is_idempotent():
    v = RationalInvariant(Laurent2({(0, 0): 1, (0, 4): -1}) * Laurent2.monomial(2, 1), 3)
    once = normalize(v)
    twice = normalize(once)
    assert (once.num, once.dpow) == (twice.num, twice.dpow)


def test_equality_is_cross_multiplied():
    a = RationalInvariant(Laurent2.monomial(0, 1), 1)
    b = RationalInvariant(Laurent2.monomial(0, 1) * ONE_MINUS_XI2, 2)
    assert a == b
    assert hash(a) == hash(b)


def test_binom_poly():
    assert binom_poly(0, 0) == PolyT.constant(1)
    assert binom_poly(0, 1) == PolyT.variable()
    assert binom_poly(1, 2) == PolyT([0, Fraction(1, 2), Fraction(1, 2)])


def test_interpolate_examples():
    inv = LaurentA.monomial(-1)
    assert interpolate([(0, inv), (1, inv)]) == PolyT.constant(inv)

    two_alpha = LaurentA.monomial(1, 2)
    line = interpolate([(1, two_alpha), (2, two_alpha * 2)])
    assert line == PolyT([0, two_alpha])

    square = interpolate([(0, LaurentA.zero()), (1, LaurentA.one()), (2, LaurentA.constant(4))])
    assert square == PolyT([0, 0, 1])


def test_interpolate_recovers_known_polynomial():
    p = PolyT([LaurentA({-1: 1}), LaurentA({2: Fraction(3, 2)}), LaurentA({0: -1, 1: 1})])
    points = [(t, p(t)) for t in (-4, 1, 7)]
    assert interpolate(points) == p


def test_interpolate_rejects_duplicates():
    with pytest.raises(RingError):
        interpolate([(1, LaurentA.one()), (1, LaurentA.one())])


def test_polyt_shift_and_degree():
    p = PolyT([1, 2, 1])  # (T + 1)²
    assert p.shift(-1) == PolyT([0, 0, 1])
    assert p.degree == 2
    assert PolyT().degree == float("-inf")


def test_polyt_json_round_trip():
    p = PolyT([LaurentA({-1: Fraction(1, 3)}), 0, LaurentA({2: -5})])
    assert PolyT.from_json(p.to_json()) == p


def test_interpolate_matches_sympy_with_negative_alpha_powers():
    points = [(-2, LaurentA({-3: Fraction(1, 2), 1: 2})), (0, LaurentA({-1: -1})), (5, LaurentA({2: 7}))]
    fitted = interpolate(points)
    expected = sp.interpolate([(t, y.to_sympy(A)) for t, y in points], T)
    assert sp.expand(fitted.to_sympy(A, T) - expected) == 0
    for t, y in points:
        assert fitted(t) == y


def test_interpolate_of_zero_values():
    assert interpolate([(0, 0), (1, LaurentA.zero())]) == PolyT()


def test_binom_poly_matches_sympy_binomial():
    for shift, degree in [(0, 3), (2, 2), (-1, 4)]:
        expected = sp.binomial(T + shift, degree).expand(func=True)
        assert sp.expand(binom_poly(shift, degree).to_sympy(A, T) - expected) == 0
    with pytest.raises(RingError):
        binom_poly(0, -1)


def test_alpha_rows_split_by_xi_power():
    v = Laurent2({(-1, 0): 2, (1, 0): 1, (0, 2): -3})
    assert v.alpha_rows() == {0: LaurentA({-1: 2, 1: 1}), 2: LaurentA({0: -3})}


def test_divide_one_minus_xi2_with_offsets():
    q = Laurent2({(-2, -1): 1, (1, 0): Fraction(2, 3)})
    assert (q * ONE_MINUS_XI2).divide_one_minus_xi2() == q
    assert Laurent2.monomial(0, 1).divide_one_minus_xi2() is None


def test_polyt_arithmetic_against_sympy():
    p = PolyT([LaurentA({-2: 1}), LaurentA({1: Fraction(1, 2)})])
    q = PolyT([3, 0, LaurentA({-1: -1})])
    for value, expr in [(p * q, p.to_sympy(A, T) * q.to_sympy(A, T)),
                        (p - q, p.to_sympy(A, T) - q.to_sympy(A, T)),
                        (p.shift(2), p.to_sympy(A, T).subs(T, T + 2))]:
        assert sp.expand(value.to_sympy(A, T) - expr) == 0
    assert p.at_alpha_one() == [1, Fraction(1, 2)]
    assert hash(p * q) == hash(q * p)
