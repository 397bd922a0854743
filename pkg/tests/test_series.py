from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummerlat.cyclotomic import zeta
from kummerlat.series import (
    LaurentPoly,
    TruncatedBiSeries,
    laurent_divmod,
    series_invert,
)

ONE = LaurentPoly.one()


def test_geometric_series():
    s = TruncatedBiSeries(3, [ONE, -ONE])
    assert series_invert(s) == TruncatedBiSeries(3, [ONE, ONE, ONE, ONE])


def test_invert_identity():
    assert series_invert(TruncatedBiSeries.one(5)) == TruncatedBiSeries.one(5)


def test_invert_q_series():
    q = LaurentPoly.monomial(1, 1)
    s = TruncatedBiSeries(2, [ONE, -q])
    inv = series_invert(s)
    assert inv == TruncatedBiSeries(2, [ONE, q, q * q])
    # oracle: multiply back
    assert s * inv == TruncatedBiSeries.one(2)


def test_invert_requires_unit():
    not_unit = LaurentPoly({0: 1, 1: 1})
    with pytest.raises(ValueError):
        series_invert(TruncatedBiSeries(2, [not_unit]))
    with pytest.raises(ValueError):
        series_invert(TruncatedBiSeries.zero(2))


def test_unit_monomial_leading_coefficient():
    lead = LaurentPoly.monomial(Fraction(2), -1)  # 2 q^-1 is a unit
    s = TruncatedBiSeries(3, [lead, ONE])
    assert s * series_invert(s) == TruncatedBiSeries.one(3)


unit_series = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=5
)


@settings(max_examples=100, deadline=None)
@given(unit_series, st.integers(min_value=-2, max_value=2))
def test_invert_roundtrip(coeffs, lead_exp):
    order = len(coeffs)
    polys = [LaurentPoly.monomial(Fraction(3, 2), lead_exp)]
    polys += [LaurentPoly({i: c}) for i, c in enumerate(coeffs)]
    s = TruncatedBiSeries(order, polys)
    assert s * series_invert(s) == TruncatedBiSeries.one(order)


def test_laurent_arithmetic():
    p = LaurentPoly({-1: Fraction(1, 2), 2: 3})
    q = LaurentPoly({-1: Fraction(-1, 2), 0: 1})
    assert (p + q) == LaurentPoly({0: 1, 2: 3})
    assert p.shift(2) == LaurentPoly({1: Fraction(1, 2), 4: 3})
    assert p.evaluate_one() == Fraction(7, 2)
    assert (p - p).is_zero
    assert p * LaurentPoly.zero() == LaurentPoly.zero()


def test_laurent_division_exact_and_inexact():
    one_minus_q = LaurentPoly({0: 1, 1: -1})
    num = one_minus_q * one_minus_q * one_minus_q
    quot, rem = laurent_divmod(num, one_minus_q)
    assert rem.is_zero
    assert quot == one_minus_q * one_minus_q
    # shifted Laurent numerator
    quot2, rem2 = laurent_divmod(num.shift(-5), one_minus_q)
    assert rem2.is_zero and quot2 == (one_minus_q * one_minus_q).shift(-5)
    # inexact division leaves the defining identity intact
    a = LaurentPoly({0: 1, 1: 1})
    q3, r3 = laurent_divmod(a, one_minus_q)
    assert not r3.is_zero
    assert a == q3 * one_minus_q + r3


def test_laurent_division_cyclotomic_coefficients():
    z = zeta(3)
    num = LaurentPoly({0: z, 1: z * z}) * LaurentPoly({0: 1, 1: -1})
    quot, rem = laurent_divmod(num, LaurentPoly({0: 1, 1: -1}))
    assert rem.is_zero
    assert quot == LaurentPoly({0: z, 1: z * z})


def test_mixed_scalar_coefficients():
    z = zeta(3)
    p = LaurentPoly({0: Fraction(1)})
    q = LaurentPoly({0: z})
    s = p + q  # Fraction coefficient absorbed into the cyclotomic one
    assert s == LaurentPoly({0: 1 + z})
    total = s + LaurentPoly({0: z * z})
    assert total.is_zero  # 1 + z + z^2 = 0


def test_to_fraction_coeffs_raises_on_irrational():
    z = zeta(3)
    with pytest.raises(ValueError):
        LaurentPoly({0: z}).to_fraction_coeffs()
    assert LaurentPoly({1: z * z * z}).to_fraction_coeffs() == {1: Fraction(1)}


def test_truncation_drops_high_terms():
    t = TruncatedBiSeries.term(2, ONE, 1)
    sq = t * t
    assert sq.coeff(2) == ONE
    cube = sq * t
    assert all(c.is_zero for c in cube.coeffs)
