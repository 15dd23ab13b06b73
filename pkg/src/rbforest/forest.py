"""Planar rooted trees and forests.

A tree is the ordered tuple of its root branches; the one-vertex tree ``•``
has no children.  A forest is a nonempty ordered tuple of trees, with ``⊔``
(concatenation) as its product.  Both carry a canonical text encoding

    •        ->  "o"
    ⌊F⌋      ->  "[" + code(F) + "]"
    T1⊔...⊔Tn ->  code(T1) + ... + code(Tn)

which is injective and drives equality, hashing and the canonical order
(vertex count first, then the encoding compared character-wise with
``'[' < ']' < 'o'``, which is plain ASCII order).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "Tree",
    "Forest",
    "DOT",
    "UNIT_FOREST",
    "leaf_count",
    "depth",
    "breadth",
    "vertex_count",
    "concat",
    "graft",
    "root_branches",
    "is_ladder_free",
    "enumerate_forests",
    "enumerate_trees",
    "canonical_compare",
    "sort_key",
    "parse_forest",
]


class Tree:
    """Planar rooted tree; immutable, compared structurally."""

    __slots__ = ("children", "code", "leaves", "depth", "vertices", "_hash")

    def __init__(self, children: Iterable["Tree"] = ()):
        children = tuple(children)
        for c in children:
            if not isinstance(c, Tree):
                raise TypeError(f"tree children must be Tree, got {type(c).__name__}")
        object.__setattr__(self, "children", children)
        if children:
            code = "[" + "".join(c.code for c in children) + "]"
            leaves = sum(c.leaves for c in children)
            dep = 1 + max(c.depth for c in children)
            vertices = 1 + sum(c.vertices for c in children)
        else:
            code, leaves, dep, vertices = "o", 1, 0, 1
        object.__setattr__(self, "code", code)
        object.__setattr__(self, "leaves", leaves)
        object.__setattr__(self, "depth", dep)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "_hash", hash(("T", code)))

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __reduce__(self):
        return (Tree, (self.children,))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Tree:
            return NotImplemented
        return self.code == other.code

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Tree") -> bool:
        return sort_key(self) < sort_key(other)

    def __repr__(self):
        return f"Tree({self.code!r})"

    def __str__(self):
        return self.code

    @property
    def is_dot(self) -> bool:
        return not self.children

    def as_forest(self) -> "Forest":
        return Forest((self,))


class Forest:
    """Nonempty ordered sequence of planar rooted trees."""

    __slots__ = ("trees", "code", "leaves", "depth", "vertices", "_hash")

    def __init__(self, trees: Iterable[Tree]):
        trees = tuple(trees)
        if not trees:
            raise ValueError("a forest has at least one tree")
        for t in trees:
            if not isinstance(t, Tree):
                raise TypeError(f"forest entries must be Tree, got {type(t).__name__}")
        object.__setattr__(self, "trees", trees)
        code = "".join(t.code for t in trees)
        object.__setattr__(self, "code", code)
        object.__setattr__(self, "leaves", sum(t.leaves for t in trees))
        object.__setattr__(self, "depth", max(t.depth for t in trees))
        object.__setattr__(self, "vertices", sum(t.vertices for t in trees))
        object.__setattr__(self, "_hash", hash(("F", code)))

    def __setattr__(self, name, value):
        raise AttributeError("Forest is immutable")

    def __reduce__(self):
        return (Forest, (self.trees,))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Forest:
            return NotImplemented
        return self.code == other.code

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Forest") -> bool:
        return sort_key(self) < sort_key(other)

    def __len__(self):
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __getitem__(self, i):
        return self.trees[i]

    def __repr__(self):
        return f"Forest({self.code!r})"

    def __str__(self):
        return self.code

    @property
    def breadth(self) -> int:
        return len(self.trees)

    @property
    def is_dot(self) -> bool:
        return len(self.trees) == 1 and not self.trees[0].children

    @classmethod
    def from_code(cls, code: str) -> "Forest":
        return parse_forest(code)


ForestLike = Union[Tree, Forest]

DOT = Tree()
UNIT_FOREST = Forest((DOT,))


def _as_forest(f: ForestLike) -> Forest:
    return f.as_forest() if isinstance(f, Tree) else f


def leaf_count(f: ForestLike) -> int:
    return f.leaves


def depth(f: ForestLike) -> int:
    return f.depth


def breadth(f: ForestLike) -> int:
    return 1 if isinstance(f, Tree) else len(f.trees)


def vertex_count(f: ForestLike) -> int:
    return f.vertices


def concat(f: ForestLike, g: ForestLike) -> Forest:
    """Noncommutative concatenation ``f ⊔ g``."""
    return Forest(_as_forest(f).trees + _as_forest(g).trees)


def graft(f: ForestLike) -> Tree:
    """Add a new root joined to the roots of the trees of ``f``."""
    return Tree(_as_forest(f).trees)


def root_branches(t: Tree) -> Optional[Forest]:
    """Inverse of :func:`graft`; ``None`` for the one-vertex tree."""
    if not t.children:
        return None
    return Forest(t.children)


@lru_cache(maxsize=None)
def _tree_has_ladder(t: Tree) -> bool:
    if not t.children:
        return False
    if len(t.children) == 1 and not t.children[0].children:
        return True
    return any(_tree_has_ladder(c) for c in t.children)


def is_ladder_free(f: ForestLike) -> bool:
    """True iff ``f`` differs from ``•`` and has no subtree equal to ``⌊•⌋``."""
    f = _as_forest(f)
    if f.is_dot:
        return False
    return not any(_tree_has_ladder(t) for t in f.trees)


def sort_key(f: ForestLike) -> tuple[int, str]:
    return (f.vertices, f.code)


def canonical_compare(f: ForestLike, g: ForestLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = sort_key(f), sort_key(g)
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def _forests_of_size(n: int) -> tuple[Forest, ...]:
    out = [t.as_forest() for t in _trees_of_size(n)]
    for k in range(1, n):
        for head in _trees_of_size(k):
            for tail in _forests_of_size(n - k):
                out.append(Forest((head,) + tail.trees))
    return tuple(sorted(out, key=sort_key))


@lru_cache(maxsize=None)
def _trees_of_size(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (DOT,)
    return tuple(sorted((graft(f) for f in _forests_of_size(n - 1)), key=sort_key))


def enumerate_trees(vertices: int) -> list[Tree]:
    if vertices < 1:
        raise ValueError("vertices must be >= 1")
    return list(_trees_of_size(vertices))


def enumerate_forests(
    vertices: int,
    trees_only: bool = False,
    ladder_free_only: bool = False,
    max_depth: Optional[int] = None,
) -> list[Forest]:
    """All forests with exactly ``vertices`` vertices, in canonical order.

    ``trees_only`` keeps single-tree forests, ``ladder_free_only`` keeps the
    ladder-free ones and ``max_depth`` restricts to the depth filtration
    level of that index.
    """
    if vertices < 1:
        raise ValueError("vertices must be >= 1")
    out = []
    for f in _forests_of_size(vertices):
        if trees_only and len(f.trees) != 1:
            continue
        if ladder_free_only and not is_ladder_free(f):
            continue
        if max_depth is not None and f.depth > max_depth:
            continue
        out.append(f)
    return out


def forests_up_to(max_vertices: int, **kwargs) -> list[Forest]:
    """Every forest with 1..max_vertices vertices, graded-lexicographic order."""
    out: list[Forest] = []
    for n in range(1, max_vertices + 1):
        out.extend(enumerate_forests(n, **kwargs))
    return out


class ForestSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_forest(text: str) -> Forest:
    """Decode the canonical encoding (whitespace allowed between tokens)."""
    pos = 0
    n = len(text)

    def skip() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def forest() -> list[Tree]:
        nonlocal pos
        trees = []
        while True:
            skip()
            if pos < n and text[pos] == "o":
                pos += 1
                trees.append(DOT)
            elif pos < n and text[pos] == "[":
                start = pos
                pos += 1
                inner = forest()
                skip()
                if pos >= n or text[pos] != "]":
                    raise ForestSyntaxError("unclosed '['", start)
                pos += 1
                trees.append(Tree(inner))
            else:
                break
        if not trees:
            raise ForestSyntaxError("expected 'o' or '['", pos)
        return trees

    trees = forest()
    skip()
    if pos != n:
        raise ForestSyntaxError(f"unexpected {text[pos]!r}", pos)
    return Forest(trees)


def iter_subtrees(t: Tree) -> Iterator[Tree]:
    yield t
    for c in t.children:
        yield from iter_subtrees(c)
