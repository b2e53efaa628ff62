from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galg.errors import DivisionByZero, InfiniteField, NonPrimeModulus
from galg.fields import GF, QQ, is_prime


def test_rational_addition():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_gf5_inverse():
    assert GF(5).inv(2) == 3


def test_gf7_product_wraps():
    assert GF(7).mul(3, 5) == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        GF(5).div(3, 0)


def test_units_enumeration():
    assert list(GF(2).units()) == [1]
    assert list(GF(5).units()) == [1, 2, 3, 4]
    with pytest.raises(InfiniteField):
        list(QQ.units())


def test_nonprime_modulus_rejected():
    for bad in (0, 1, 4, 6, 9, 100):
        with pytest.raises(NonPrimeModulus):
            GF(bad)


def test_prime_check():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_field_equality_and_cache():
    assert GF(7) == GF(7)
    assert GF(7) is GF(7)
    assert GF(7) != GF(5)
    assert QQ != GF(7)


def test_scalar_formatting_round_trip():
    assert QQ.format_scalar(Fraction(3, 2)) == "3/2"
    assert QQ.parse_scalar("3/2") == Fraction(3, 2)
    F = GF(7)
    assert F.format_scalar(5) == "5 mod 7"
    assert F.parse_scalar("5 mod 7") == 5
    assert F.parse_scalar("12") == 5


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
residues = st.integers(min_value=0, max_value=12)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    F = QQ
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if b != 0:
        assert F.mul(b, F.inv(b)) == F.one


@given(residues, residues, residues)
def test_gf13_field_axioms(a, b, c):
    F = GF(13)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if b % 13 != 0:
        assert F.mul(b, F.inv(b)) == F.one
    assert F.add(a, F.neg(a)) == F.zero


@given(residues)
def test_gf_canonical_representatives(a):
    F = GF(11)
    assert 0 <= F.from_int(a) < 11
    assert 0 <= F.neg(a) < 11


def test_rational_canonicality():
    # Fraction keeps lowest terms with positive denominator
    assert QQ.div(Fraction(2), Fraction(-4)) == Fraction(-1, 2)
    assert Fraction(-1, 2).denominator > 0
