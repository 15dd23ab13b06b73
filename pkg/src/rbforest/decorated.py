"""Forests with angular decorations over an alphabet.

A decorated forest ``(F; x1, ..., xk)`` labels the ``k = leaves(F) - 1``
angles between adjacent leaves of ``F``, read left to right.  Linear
combinations of them form the free unitary Rota-Baxter algebra on the
alphabet; those supported on ladder-free forests form the free nonunitary
one.
"""

from __future__ import annotations

import itertools
import re
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .algebra import ForestSum, _forest_diamond
from .coeffs import ONE, LambdaPoly
from .errors import AlphabetError, DecorationError
from .forest import UNIT_FOREST, Forest, Tree, forests_up_to, graft, is_ladder_free, sort_key
from .linear import LinearCombination, accumulate, drop_zeros

__all__ = [
    "Alphabet",
    "DecoratedForest",
    "DecoratedSum",
    "standard_decomposition",
    "diamond_decorated",
    "diamond_decorated_sum",
    "rb_operator_decorated",
    "embed_generator",
    "is_nonunitary_basis",
    "forget_decorations",
    "decorated_basis",
]

_IDENT = re.compile(r"[A-Za-z0-9_]+\Z")
_RESERVED = frozenset({"o", "P", "L", "1"})


def check_symbol(x: str) -> str:
    if not isinstance(x, str) or not _IDENT.match(x) or x in _RESERVED:
        raise AlphabetError(f"invalid alphabet symbol {x!r}")
    return sys.intern(x)


class Alphabet:
    """Ordered finite set of decoration symbols."""

    def __init__(self, symbols: Iterable[str]):
        seen: list[str] = []
        for s in symbols:
            s = check_symbol(s)
            if s not in seen:
                seen.append(s)
        if not seen:
            raise AlphabetError("alphabet is empty")
        self.symbols: tuple[str, ...] = tuple(seen)
        self._set = frozenset(seen)

    def __contains__(self, x) -> bool:
        return x in self._set

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def require(self, x: str) -> str:
        if x not in self._set:
            raise AlphabetError(f"symbol {x!r} is not in {self!r}")
        return x

    def words(self, length: int) -> Iterator[tuple[str, ...]]:
        return itertools.product(self.symbols, repeat=length)

    def generator(self, x: str) -> "DecoratedSum":
        return embed_generator(x, self)


@dataclass(frozen=True)
class DecoratedForest:
    forest: Forest
    decorations: tuple[str, ...] = ()

    def __post_init__(self):
        f = self.forest
        if isinstance(f, Tree):
            f = f.as_forest()
            object.__setattr__(self, "forest", f)
        if not isinstance(f, Forest):
            raise TypeError(f"expected Forest, got {type(f).__name__}")
        deco = tuple(check_symbol(x) for x in self.decorations)
        object.__setattr__(self, "decorations", deco)
        if len(deco) != f.leaves - 1:
            raise DecorationError(
                f"forest {f.code} has {f.leaves} leaves and needs {f.leaves - 1} decorations, got {len(deco)}"
            )

    @classmethod
    def _raw(cls, forest: Forest, decorations: tuple[str, ...]) -> "DecoratedForest":
        d = object.__new__(cls)
        object.__setattr__(d, "forest", forest)
        object.__setattr__(d, "decorations", decorations)
        return d

    @property
    def leaves(self) -> int:
        return self.forest.leaves

    @property
    def depth(self) -> int:
        return self.forest.depth

    @property
    def breadth(self) -> int:
        return len(self.forest.trees)

    def __str__(self):
        return "{" + self.forest.code + ";" + (",".join(self.decorations) or "1") + "}"


DECORATED_UNIT = DecoratedForest._raw(UNIT_FOREST, ())


def decorated_sort_key(d: DecoratedForest):
    return (sort_key(d.forest), d.decorations)


class DecoratedSum(LinearCombination):
    """Element of the free Rota-Baxter algebra on an alphabet."""

    __slots__ = ()
    basis_type = DecoratedForest

    @staticmethod
    def sort_key(d: DecoratedForest):
        return decorated_sort_key(d)

    @classmethod
    def unit(cls) -> "DecoratedSum":
        return cls._wrap({DECORATED_UNIT: ONE})

    @classmethod
    def of(cls, forest, decorations: Sequence[str] = (), coeff=1) -> "DecoratedSum":
        if isinstance(forest, str):
            forest = Forest.from_code(forest)
        return cls({DecoratedForest(forest, tuple(decorations)): coeff})

    def symbols(self) -> set[str]:
        return {x for d in self.terms for x in d.decorations}

    def __mul__(self, other):
        if isinstance(other, DecoratedSum):
            return diamond_decorated_sum(self, other)
        if isinstance(other, (int, LambdaPoly)):
            return self.scale(other)
        return NotImplemented


def standard_decomposition(d: DecoratedForest) -> list[tuple[DecoratedForest, Optional[str]]]:
    """Split along ``⊔`` into decorated trees and the separators between them.

    Returns ``[(component, separator), ...]`` where the last separator is
    ``None``.  One-leaf components carry no decoration.
    """
    out = []
    pos = 0
    trees = d.forest.trees
    deco = d.decorations
    for i, t in enumerate(trees):
        k = t.leaves - 1
        comp = DecoratedForest._raw(t.as_forest(), deco[pos : pos + k])
        pos += k
        sep = None
        if i < len(trees) - 1:
            sep = deco[pos]
            pos += 1
        out.append((comp, sep))
    return out


def recompose(parts: Sequence[tuple[DecoratedForest, Optional[str]]]) -> DecoratedForest:
    """Inverse of :func:`standard_decomposition`."""
    trees: list[Tree] = []
    deco: list[str] = []
    for comp, sep in parts:
        trees.extend(comp.forest.trees)
        deco.extend(comp.decorations)
        if sep is not None:
            deco.append(sep)
    return DecoratedForest(Forest(trees), tuple(deco))


def _diamond_terms(d: DecoratedForest, e: DecoratedForest):
    if d.forest.is_dot:
        return ((e, ONE),)
    if e.forest.is_dot:
        return ((d, ONE),)
    deco = d.decorations + e.decorations
    return tuple((DecoratedForest._raw(f, deco), c) for f, c in _forest_diamond(d.forest, e.forest))


def diamond_decorated(d: DecoratedForest, e: DecoratedForest) -> DecoratedSum:
    """Product of two decorated basis forests; decorations concatenate."""
    return DecoratedSum._wrap(dict(_diamond_terms(d, e)))


def diamond_decorated_sum(a: DecoratedSum, b: DecoratedSum) -> DecoratedSum:
    acc: dict = {}
    for d, cd in a.terms.items():
        for e, ce in b.terms.items():
            accumulate(acc, _diamond_terms(d, e), cd * ce)
    return DecoratedSum._wrap(drop_zeros(acc))


def rb_operator_decorated(a: DecoratedSum) -> DecoratedSum:
    """Graft every forest, keeping its decoration vector."""
    return DecoratedSum._wrap(
        {DecoratedForest._raw(graft(d.forest).as_forest(), d.decorations): c for d, c in a.terms.items()}
    )


def embed_generator(x: str, alphabet: Optional[Alphabet] = None) -> DecoratedSum:
    """The generator ``(•⊔•; x)``."""
    if alphabet is not None:
        alphabet.require(x)
    return DecoratedSum.of(Forest((Tree(), Tree())), (x,))


def is_nonunitary_basis(d: DecoratedForest) -> bool:
    return is_ladder_free(d.forest)


def forget_decorations(a: DecoratedSum) -> ForestSum:
    """Linear map ``(F; m) -> F``."""
    return a.map_basis(lambda d: d.forest, ForestSum)


def decorated_basis(
    max_vertices: int, alphabet: Alphabet, ladder_free_only: bool = False
) -> list[DecoratedForest]:
    """All decorated forests on at most ``max_vertices`` vertices, canonical order."""
    out = []
    for f in forests_up_to(max_vertices, ladder_free_only=ladder_free_only):
        for w in alphabet.words(f.leaves - 1):
            out.append(DecoratedForest._raw(f, w))
    return out


def random_decorated_sum(rng, alphabet: Alphabet, max_vertices: int = 3, max_terms: int = 4, ladder_free: bool = False) -> DecoratedSum:
    """Random element with small integer-polynomial coefficients.

    ``rng`` is a :class:`random.Random`.
    """
    basis = decorated_basis(max_vertices, alphabet, ladder_free_only=ladder_free)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.choice(basis)
        c = LambdaPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
        terms[d] = terms.get(d, LambdaPoly()) + c
    return DecoratedSum(terms)
