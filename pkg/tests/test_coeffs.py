from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rbforest.coeffs import LAMBDA, ONE, ZERO, LambdaPoly, format_poly, parse_poly, parse_rational, specialize

from .conftest import polys
from . import naive


def as_dict(p):
    return {e: c for e, c in enumerate(p.coeffs) if c}


def test_constants():
    assert ZERO == LambdaPoly() and not ZERO
    assert ONE == LambdaPoly(1)
    assert LAMBDA.degree == 1


@pytest.mark.parametrize(
    "coeffs, text",
    [((0,), "0"), ((1,), "1"), ((0, 1), "L"), ((-1, 3, 2), "2L^2+3L-1"), ((0, -1), "-L"), ((0, 0, 1), "L^2")],
)
def test_format_and_parse(coeffs, text):
    p = LambdaPoly(coeffs)
    assert format_poly(p) == text
    assert parse_poly(text) == p


def test_trailing_zeros_are_stripped():
    assert LambdaPoly((1, 2, 0, 0)) == LambdaPoly((1, 2))
    assert hash(LambdaPoly((3, 0))) == hash(LambdaPoly(3))


def test_specialize_exact():
    p = LambdaPoly((1, 0, 2))
    assert specialize(p, Fraction(1, 2)) == Fraction(3, 2)
    assert specialize(p, -1) == 3
    assert isinstance(specialize(p, 2), Fraction)


def test_parse_rational():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3") == -3
    with pytest.raises(ValueError):
        parse_rational("abc")


@given(polys, polys)
def test_arithmetic_matches_dict_oracle(p, q):
    assert as_dict(p + q) == naive.poly_add(as_dict(p), as_dict(q))
    assert as_dict(p * q) == naive.poly_mul(as_dict(p), as_dict(q))
    assert p - p == ZERO


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(polys, polys, st.fractions(min_value=-10, max_value=10, max_denominator=7))
def test_specialize_is_a_ring_map(p, q, x):
    assert specialize(p * q, x) == specialize(p, x) * specialize(q, x)
    assert specialize(p + q, x) == specialize(p, x) + specialize(q, x)


@given(polys)
def test_format_round_trip(p):
    assert parse_poly(format_poly(p)) == p
