import pickle
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from braidhc.cyclo import (CyclotomicScalar, FieldMismatchError, cyclotomic_field,
                           cyclotomic_polynomial, euler_phi, root_sum_check, zeta_power)

from conftest import embed


def numeric_cyclotomic(n):
    # product of (x - w) over primitive n-th roots, rounded to integers
    roots = [np.exp(2j * np.pi * k / n) for k in range(1, n + 1) if gcd(k, n) == 1]
    return [int(round(c.real)) for c in np.poly(roots)[::-1]]


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_matches_numeric_roots(n):
    assert cyclotomic_polynomial(n) == numeric_cyclotomic(n)
    assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]


def test_zeta_power_examples():
    q4, q3 = cyclotomic_field(4), cyclotomic_field(3)
    assert zeta_power(q4, 2).coeffs == (-1, 0)
    assert zeta_power(q3, 2).coeffs == (-1, -1)
    for n in range(1, 9):
        assert zeta_power(cyclotomic_field(n), 0) == 1


@pytest.mark.parametrize("n", range(1, 13))
def test_zeta_is_a_root_of_phi(n):
    F = cyclotomic_field(n)
    z = F.zeta()
    value = sum((z ** k * c for k, c in enumerate(cyclotomic_polynomial(n))), F.zero())
    assert value == 0
    for k in range(-n, 2 * n):
        assert zeta_power(F, k) ** n == 1
        assert zeta_power(F, k) == zeta_power(F, k + n)


def test_inverse_examples():
    q3, q4 = cyclotomic_field(3), cyclotomic_field(4)
    z = q3.zeta()
    assert z.inverse() == -1 - z
    assert z * (-1 - z) == 1
    assert q3.one().inverse() == 1
    w = q4.zeta()
    assert (1 + w) * (1 - w) == 2


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclotomic_field(5).zero().inverse()
    with pytest.raises(ZeroDivisionError):
        cyclotomic_field(5).one() / 0


def test_field_mismatch():
    a, b = cyclotomic_field(3).zeta(), cyclotomic_field(4).zeta()
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * b


def test_root_sum_examples():
    assert root_sum_check(cyclotomic_field(5), 0) == 1
    assert root_sum_check(cyclotomic_field(5), 2) == 0
    assert root_sum_check(cyclotomic_field(1), 0) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_root_sum_delta(n):
    F = cyclotomic_field(n)
    for b in range(n):
        assert root_sum_check(F, b) == (1 if b == 0 else 0)
    double = sum((zeta_power(F, -a * b) for a in range(n) for b in range(n)), F.zero())
    assert double * Fraction(1, n) == 1


# ---------------------------------------------------------------------------
# randomized field axioms

small = st.integers(-4, 4)


@st.composite
def scalars(draw, n):
    F = cyclotomic_field(n)
    num = draw(st.lists(small, min_size=F.degree, max_size=F.degree))
    den = draw(st.integers(1, 3))
    return CyclotomicScalar.from_coeffs(F, [Fraction(c, den) for c in num])


@st.composite
def triples(draw):
    n = draw(st.integers(1, 8))
    return draw(scalars(n)), draw(scalars(n)), draw(scalars(n))


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(triples())
def test_arithmetic_agrees_with_complex_embedding(t):
    a, b, c = t
    assert abs(embed(a * b + c) - (embed(a) * embed(b) + embed(c))) < 1e-8
    if a != 0:
        assert abs(embed(a.inverse()) * embed(a) - 1) < 1e-8


@given(triples())
def test_canonical_form(t):
    a, b, c = t
    # equal values reached along different paths have equal representations
    x = (a + b) * c
    y = c * b + a * c
    assert x == y and x.coeffs == y.coeffs and hash(x) == hash(y)


@given(triples())
def test_json_round_trip(t):
    for x in t:
        data = x.to_json()
        assert len(data) == x.field.degree
        assert all(isinstance(s, str) and "/" in s for s in data)
        y = CyclotomicScalar.from_json(x.field, data)
        assert y == x and y.coeffs == x.coeffs


def test_rational_scalars_hash_like_fractions():
    F = cyclotomic_field(6)
    assert F(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(F(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert F(3) == 3


def test_pickle():
    F = cyclotomic_field(7)
    x = F.zeta() ** 3 + Fraction(2, 5)
    assert pickle.loads(pickle.dumps(x)) == x


def test_negative_powers():
    F = cyclotomic_field(5)
    z = F.zeta()
    assert z ** -1 == z ** 4
    assert (1 + z) ** -2 * (1 + z) ** 2 == 1
