"""The unitary Rota-Baxter algebra of planar rooted forests.

Elements are :class:`ForestSum` linear combinations of forests.  The product
``⋄`` is defined on basis forests by recursion on depth:

* two depth-zero forests: ``•^m ⋄ •^n = •^(m+n-1)``;
* two trees: ``•`` is a two-sided unit, and otherwise
  ``⌊A⌋ ⋄ ⌊B⌋ = ⌊⌊A⌋ ⋄ B⌋ + ⌊A ⋄ ⌊B⌋⌋ + L⌊A ⋄ B⌋``;
* two forests: the last tree of the left factor meets the first tree of the
  right factor, the remaining trees are concatenated around the result.

Grafting ``F -> ⌊F⌋`` is the Rota-Baxter operator of weight ``L``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from .coeffs import LAMBDA, ONE, LambdaPoly
from .forest import DOT, UNIT_FOREST, Forest, Tree, graft, is_ladder_free, sort_key
from .linear import LinearCombination, accumulate, drop_zeros

__all__ = [
    "ForestSum",
    "diamond_forests",
    "diamond",
    "rb_operator",
    "concat_sum",
    "restrict_ladder_free",
    "clear_caches",
]

Terms = Tuple[Tuple[Forest, LambdaPoly], ...]


class ForestSum(LinearCombination):
    """Element of the free algebra on planar rooted forests."""

    __slots__ = ()
    basis_type = Forest

    @staticmethod
    def sort_key(f: Forest):
        return sort_key(f)

    @classmethod
    def unit(cls) -> "ForestSum":
        return cls._wrap({UNIT_FOREST: ONE})

    @classmethod
    def of(cls, f, coeff=1) -> "ForestSum":
        if isinstance(f, Tree):
            f = f.as_forest()
        elif isinstance(f, str):
            f = Forest.from_code(f)
        return cls({f: coeff})

    def __mul__(self, other):
        if isinstance(other, ForestSum):
            return diamond(self, other)
        if isinstance(other, (int, LambdaPoly)):
            return self.scale(other)
        return NotImplemented


@lru_cache(maxsize=None)
def _tree_diamond(t: Tree, u: Tree) -> Tuple[Tuple[Tree, LambdaPoly], ...]:
    if not u.children:
        return ((t, ONE),)
    if not t.children:
        return ((u, ONE),)
    left_bar = Forest(t.children)
    right_bar = Forest(u.children)
    acc: dict = {}
    # ⌊⌊A⌋ ⋄ B⌋
    accumulate(acc, ((graft(f), c) for f, c in _forest_diamond(t.as_forest(), right_bar)))
    # ⌊A ⋄ ⌊B⌋⌋
    accumulate(acc, ((graft(f), c) for f, c in _forest_diamond(left_bar, u.as_forest())))
    # L⌊A ⋄ B⌋
    accumulate(acc, ((graft(f), c) for f, c in _forest_diamond(left_bar, right_bar)), LAMBDA)
    return tuple(drop_zeros(acc).items())


@lru_cache(maxsize=None)
def _forest_diamond(f: Forest, g: Forest) -> Terms:
    if f.depth == 0 and g.depth == 0:
        n = len(f.trees) + len(g.trees) - 1
        return ((Forest((DOT,) * n), ONE),)
    if len(f.trees) == 1 and len(g.trees) == 1:
        return tuple((t.as_forest(), c) for t, c in _tree_diamond(f.trees[0], g.trees[0]))
    head = f.trees[:-1]
    tail = g.trees[1:]
    return tuple((Forest(head + (t,) + tail), c) for t, c in _tree_diamond(f.trees[-1], g.trees[0]))


def clear_caches() -> None:
    """Drop memoized basis products (results are unaffected)."""
    _tree_diamond.cache_clear()
    _forest_diamond.cache_clear()


def diamond_forests(f: Forest, g: Forest) -> ForestSum:
    """The product ``f ⋄ g`` of two basis forests."""
    if isinstance(f, Tree):
        f = f.as_forest()
    if isinstance(g, Tree):
        g = g.as_forest()
    return ForestSum._wrap(dict(_forest_diamond(f, g)))


def diamond(a: ForestSum, b: ForestSum) -> ForestSum:
    """Bilinear extension of :func:`diamond_forests`."""
    acc: dict = {}
    for f, cf in a.terms.items():
        for g, cg in b.terms.items():
            accumulate(acc, _forest_diamond(f, g), cf * cg)
    return ForestSum._wrap(drop_zeros(acc))


def rb_operator(a: ForestSum) -> ForestSum:
    """Graft every basis forest: ``F -> ⌊F⌋`` extended linearly."""
    return ForestSum._wrap({graft(f).as_forest(): c for f, c in a.terms.items()})


def concat_sum(a: ForestSum, b: ForestSum) -> ForestSum:
    """Bilinear extension of concatenation ``⊔``."""
    acc: dict = {}
    for f, cf in a.terms.items():
        for g, cg in b.terms.items():
            accumulate(acc, ((Forest(f.trees + g.trees), cg),), cf)
    return ForestSum._wrap(drop_zeros(acc))


def restrict_ladder_free(a: ForestSum) -> tuple[ForestSum, bool]:
    """Sub-sum on ladder-free forests, and whether nothing was dropped."""
    kept = a.filter(is_ladder_free)
    return kept, len(kept) == len(a)
