import itertools

import pytest
from hypothesis import given

from rbforest.forest import (
    DOT,
    Forest,
    Tree,
    breadth,
    canonical_compare,
    concat,
    depth,
    enumerate_forests,
    enumerate_trees,
    forests_up_to,
    graft,
    is_ladder_free,
    leaf_count,
    parse_forest,
    root_branches,
)

from .conftest import forests, trees
from .naive import all_forest_codes, catalan_counts, has_ladder

F = Forest.from_code


@pytest.mark.parametrize("code, leaves", [("o", 1), ("[oo]", 2), ("o[oo]", 3)])
def test_leaf_count(code, leaves):
    assert leaf_count(F(code)) == leaves


@pytest.mark.parametrize("code, d", [("o", 0), ("[[o]]", 2), ("o[o]", 1)])
def test_depth(code, d):
    assert depth(F(code)) == d


def test_concat_examples():
    assert concat(F("o"), F("o")) == F("oo")
    assert concat(F("oo"), F("[o]")) == F("oo[o]")
    assert concat(F("[o]"), F("o")) != concat(F("o"), F("[o]"))


def test_graft_examples():
    assert graft(F("o")) == Tree([DOT])
    assert graft(F("oo")).code == "[oo]"
    assert leaf_count(graft(F("oo"))) == leaf_count(F("oo")) == 2


def test_root_branches_examples():
    assert root_branches(parse_forest("[oo]").trees[0]) == F("oo")
    assert root_branches(DOT) is None
    assert root_branches(F("[[o]]").trees[0]) == F("[o]")


@pytest.mark.parametrize(
    "code, expected",
    [("[oo]", True), ("[o]", False), ("o", False), ("oo", True), ("[[oo]]", True), ("[o[o]]", False), ("[[o]o]", False)],
)
def test_is_ladder_free(code, expected):
    assert is_ladder_free(F(code)) is expected


def test_enumeration_examples():
    assert [f.code for f in enumerate_forests(3, trees_only=True)] == ["[[o]]", "[oo]"]
    assert enumerate_forests(1) == [F("o")]
    assert [f.code for f in enumerate_forests(3, ladder_free_only=True)] == ["[oo]", "ooo"]
    assert len(enumerate_forests(3)) == 5


def test_enumeration_matches_brute_force():
    for n in range(1, 6):
        assert {f.code for f in enumerate_forests(n)} == all_forest_codes(n)


def test_enumeration_counts_catalan():
    tree_counts, forest_counts = catalan_counts(6)
    assert tree_counts == [1, 1, 2, 5, 14, 42]
    assert forest_counts == [1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        assert len(enumerate_forests(n, trees_only=True)) == tree_counts[n - 1]
        assert len(enumerate_trees(n)) == tree_counts[n - 1]
        assert len(enumerate_forests(n)) == forest_counts[n - 1]


def test_enumeration_is_sorted_and_deterministic():
    for n in range(1, 6):
        got = enumerate_forests(n)
        assert got == sorted(got)
        assert len(set(got)) == len(got)
        assert [f.code for f in got] == [f.code for f in enumerate_forests(n)]


def test_max_depth_is_the_filtration():
    for n in range(1, 6):
        for k in range(0, n):
            got = enumerate_forests(n, max_depth=k)
            assert all(f.depth <= k for f in got)
            assert len(got) == sum(1 for f in enumerate_forests(n) if f.depth <= k)
    assert enumerate_forests(4, max_depth=0) == [F("oooo")]


def test_canonical_compare_examples():
    assert canonical_compare(F("o"), F("[o]")) == -1
    # '[' < 'o' in the token order
    assert canonical_compare(F("[o]"), F("oo")) == -1
    assert canonical_compare(F("oo"), F("[o]")) == 1
    assert canonical_compare(F("[oo]"), F("[oo]")) == 0


def test_canonical_compare_is_a_total_order():
    fs = forests_up_to(4)
    for a, b in itertools.product(fs, repeat=2):
        assert canonical_compare(a, b) == -canonical_compare(b, a)
        assert (canonical_compare(a, b) == 0) == (a == b)
    for a, b, c in itertools.product(fs, repeat=3):
        if canonical_compare(a, b) <= 0 and canonical_compare(b, c) <= 0:
            assert canonical_compare(a, c) <= 0


def test_ladder_free_against_substring_scan():
    for f in forests_up_to(6):
        assert is_ladder_free(f) == (f.code != "o" and not has_ladder(f.code))


def test_values_are_immutable():
    with pytest.raises(AttributeError):
        DOT.children = ()
    with pytest.raises(AttributeError):
        F("oo").trees = ()


def test_tree_and_forest_are_distinct_types():
    assert graft(F("o")) != F("o")
    assert F("[o]").trees[0] != F("[o]")


def test_parse_forest_rejects_garbage():
    for bad in ["", "[]", "[o", "o]", "ox"]:
        with pytest.raises(ValueError):
            parse_forest(bad)


@given(forests, forests)
def test_concat_is_additive(f, g):
    h = concat(f, g)
    assert leaf_count(h) == leaf_count(f) + leaf_count(g)
    assert breadth(h) == breadth(f) + breadth(g)


@given(forests)
def test_graft_stats(f):
    t = graft(f)
    assert depth(t) == depth(f) + 1
    assert leaf_count(t) == leaf_count(f)
    assert root_branches(t) == f


@given(trees)
def test_graft_inverts_root_branches(t):
    if t == DOT:
        assert root_branches(t) is None
    else:
        assert graft(root_branches(t)) == t


@given(forests)
def test_encoding_round_trip(f):
    assert parse_forest(f.code) == f
    assert hash(parse_forest(f.code)) == hash(f)
