import itertools

import pytest
from hypothesis import given

from rbforest.algebra import (
    ForestSum,
    clear_caches,
    concat_sum,
    diamond,
    diamond_forests,
    rb_operator,
    restrict_ladder_free,
)
from rbforest.coeffs import LAMBDA, ONE, LambdaPoly
from rbforest.forest import Forest, forests_up_to, is_ladder_free

from . import naive
from .conftest import forest_sums

F = Forest.from_code


def S(code, coeff=1):
    return ForestSum.of(code, coeff)


def to_naive(s):
    return {f.code: {e: c for e, c in enumerate(p.coeffs) if c} for f, p in s.items()}


def test_worked_example():
    got = diamond(S("[oo]"), S("[o]"))
    want = S("[o[o]]") + S("[[oo]]") + S("[oo]", LAMBDA)
    assert got == want
    assert len(got) == 3


def test_triple_ladder_product():
    # ⌊•⌋⋄⌊•⌋⋄⌊•⌋, derived by hand from the recursion
    t = S("[o]")
    got = diamond(diamond(t, t), t)
    assert got == S("[[[o]]]", 6) + S("[[o]]", 6 * LAMBDA) + S("[o]", LAMBDA * LAMBDA)


def test_ladder_square():
    t = S("[o]")
    assert diamond(t, t) == S("[[o]]", 2) + S("[o]", LAMBDA)


def test_depth_zero_products():
    for m, n in itertools.product(range(1, 4), repeat=2):
        assert diamond_forests(F("o" * m), F("o" * n)) == S("o" * (m + n - 1))


def test_dot_is_the_unit():
    for f in forests_up_to(4):
        assert diamond(ForestSum.unit(), S(f.code)) == S(f.code)
        assert diamond(S(f.code), ForestSum.unit()) == S(f.code)


def test_forest_product_touches_only_the_boundary():
    got = diamond(S("[o]o"), S("o[o]"))
    assert got == S("[o]o[o]")
    got = diamond(S("o[o]"), S("[o]o"))
    assert got == S("o[[o]]o", 2) + S("o[o]o", LAMBDA)


def test_rb_operator_is_grafting():
    assert rb_operator(S("oo", 3) + S("o")) == S("[oo]", 3) + S("[o]")


def test_concat_sum_bilinear():
    a = S("o") + S("[o]", LAMBDA)
    assert concat_sum(a, S("o")) == S("oo") + S("[o]o", LAMBDA)


def test_restrict_ladder_free():
    part, ok = restrict_ladder_free(S("[oo]") + S("[o]"))
    assert part == S("[oo]") and not ok
    part, ok = restrict_ladder_free(S("[oo]", 2))
    assert ok


def test_scalar_multiplication_and_zero():
    a = S("[oo]")
    assert (LAMBDA * a).coefficient(F("[oo]")) == LAMBDA
    assert a - a == 0
    assert 2 * a == a + a
    assert a * S("o") == a


def test_products_match_naive_oracle():
    clear_caches()
    fs = forests_up_to(3)
    for f, g in itertools.product(fs, repeat=2):
        assert to_naive(diamond_forests(f, g)) == naive.forest_product(f.code, g.code)


@given(forest_sums, forest_sums)
def test_bilinear_products_match_naive_oracle(a, b):
    assert to_naive(diamond(a, b)) == naive.sum_product(to_naive(a), to_naive(b))


@given(forest_sums, forest_sums, forest_sums)
def test_associative(a, b, c):
    assert diamond(diamond(a, b), c) == diamond(a, diamond(b, c))


@given(forest_sums, forest_sums)
def test_rota_baxter_identity(a, b):
    P = rb_operator
    rhs = P(diamond(a, P(b))) + P(diamond(P(a), b)) + LAMBDA * P(diamond(a, b))
    assert diamond(P(a), P(b)) == rhs


@given(forest_sums, forest_sums, forest_sums)
def test_distributive(a, b, c):
    assert diamond(a, b + c) == diamond(a, b) + diamond(a, c)


def test_leaf_formula_and_ladder_closure_small():
    lf = forests_up_to(4, ladder_free_only=True)
    for f, g in itertools.product(forests_up_to(3), repeat=2):
        for h in diamond_forests(f, g).terms:
            assert h.leaves == f.leaves + g.leaves - 1
    for f, g in itertools.product(lf, repeat=2):
        assert all(is_ladder_free(h) for h in diamond_forests(f, g).terms)
