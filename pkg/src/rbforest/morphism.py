"""Target Rota-Baxter algebras and the universal morphism out of the free one.

Given a target ``(R, *, P)`` of weight ``λ`` and values ``f(x)`` for the
alphabet symbols, :func:`extend` computes the unique Rota-Baxter algebra map
``f̄`` with ``f̄(•⊔•; x) = f(x)``.  On a decorated forest with standard
decomposition ``(T1; m1) ⊔_{u1} ... ⊔_{u(b-1)} (Tb; mb)``::

    f̄(D) = f̄(T1; m1) * f(u1) * ... * f(u(b-1)) * f̄(Tb; mb)
    f̄(•; ∅) = 1_R,   f̄(⌊F⌋; m) = P(f̄(F; m))

For a nonunitary target the ``1_R`` factors are simply left out, which only
makes sense on ladder-free forests.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, Mapping, Optional, Sequence

from .coeffs import LambdaPoly, specialize
from .decorated import (
    Alphabet,
    DecoratedForest,
    DecoratedSum,
    diamond_decorated_sum,
    embed_generator,
    random_decorated_sum,
    rb_operator_decorated,
    standard_decomposition,
)
from .errors import AlphabetError, PreconditionError, UnsupportedTermError
from .forest import Forest, is_ladder_free

__all__ = [
    "TargetAlgebra",
    "ScalarTarget",
    "PartialSumTarget",
    "FreeTarget",
    "scalar_target",
    "partial_sum_target",
    "free_target",
    "extend",
    "generator_assignment",
]

Assignment = Mapping[str, Any]


def random_rational(rng: random.Random, bound: int = 9, max_den: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


class TargetAlgebra(ABC):
    """A Rota-Baxter algebra of fixed rational weight, given by its operations.

    ``weight`` is ``None`` only for the free algebra itself, whose weight
    stays symbolic.  A nonunitary target has ``unital = False`` and no
    usable :meth:`unit`.
    """

    weight: Optional[Fraction]
    unital: bool = True

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def add(self, x, y) -> Any: ...

    @abstractmethod
    def mul(self, x, y) -> Any: ...

    @abstractmethod
    def scale(self, c, x) -> Any: ...

    @abstractmethod
    def op(self, x) -> Any: ...

    @abstractmethod
    def sample(self, rng: random.Random) -> Any:
        """Random element, used by the self-checks."""

    def one(self) -> Any:
        raise NotImplementedError

    def unit(self) -> Any:
        if not self.unital:
            raise UnsupportedTermError(f"{self!r} is nonunitary")
        return self.one()

    def equal(self, x, y) -> bool:
        return x == y

    def coefficient(self, c: LambdaPoly):
        """Turn a Z[L] coefficient into a scalar this target can use."""
        return specialize(c, self.weight)

    def neg(self, x):
        return self.scale(Fraction(-1), x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def lambda_scalar(self):
        return self.coefficient(LambdaPoly((0, 1)))

    def rb_defect(self, x, y):
        """``P(x)P(y) - P(P(x)y + xP(y) + λxy)``; zero iff the identity holds."""
        P, m, a = self.op, self.mul, self.add
        lhs = m(P(x), P(y))
        inner = a(a(m(P(x), y), m(x, P(y))), self.scale(self.lambda_scalar(), m(x, y)))
        return self.sub(lhs, P(inner))

    def check_rota_baxter(self, samples: int = 50, seed: int = 0) -> None:
        """Randomized self-test of the Rota-Baxter identity.

        Raises :class:`PreconditionError` on the first violating pair.
        """
        rng = random.Random(seed)
        z = self.zero()
        for _ in range(samples):
            x, y = self.sample(rng), self.sample(rng)
            if not self.equal(self.rb_defect(x, y), z):
                raise PreconditionError(f"Rota-Baxter identity fails on {x!r}, {y!r}")

    def product(self, factors: Sequence[Any]):
        if not factors:
            return self.unit()
        out = factors[0]
        for x in factors[1:]:
            out = self.mul(out, x)
        return out

    def nonunitary(self) -> "TargetAlgebra":
        """The same algebra with its unit forgotten."""
        return _Nonunitary(self)


class _Nonunitary(TargetAlgebra):
    unital = False

    def __init__(self, base: TargetAlgebra):
        self.base = base
        self.weight = base.weight

    def zero(self):
        return self.base.zero()

    def add(self, x, y):
        return self.base.add(x, y)

    def mul(self, x, y):
        return self.base.mul(x, y)

    def scale(self, c, x):
        return self.base.scale(c, x)

    def op(self, x):
        return self.base.op(x)

    def sample(self, rng):
        return self.base.sample(rng)

    def equal(self, x, y):
        return self.base.equal(x, y)

    def coefficient(self, c):
        return self.base.coefficient(c)

    def __repr__(self):
        return f"{self.base!r}.nonunitary()"


class ScalarTarget(TargetAlgebra):
    """The rationals with ``P(a) = -λa``; satisfies ``P² = -λP``."""

    def __init__(self, lam, unital: bool = True):
        self.weight = Fraction(lam)
        self.unital = unital

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def scale(self, c, x):
        return Fraction(c) * x

    def op(self, x):
        return -self.weight * x

    def sample(self, rng):
        return random_rational(rng)

    def __repr__(self):
        return f"ScalarTarget({self.weight})"


class PartialSumTarget(TargetAlgebra):
    """Rational sequences of fixed length, pointwise product.

    ``P(a)[n] = λ * (a[0] + ... + a[n-1])``, a weight-λ operator.  Elements
    are tuples of :class:`~fractions.Fraction`.
    """

    def __init__(self, length: int, lam, unital: bool = True):
        if length < 1:
            raise ValueError("length must be >= 1")
        self.length = length
        self.weight = Fraction(lam)
        self.unital = unital

    def element(self, values: Sequence) -> tuple[Fraction, ...]:
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != self.length:
            raise ValueError(f"expected {self.length} entries, got {len(vals)}")
        return vals

    def zero(self):
        return (Fraction(0),) * self.length

    def one(self):
        return (Fraction(1),) * self.length

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def mul(self, x, y):
        return tuple(a * b for a, b in zip(x, y))

    def scale(self, c, x):
        c = Fraction(c)
        return tuple(c * a for a in x)

    def op(self, x):
        out, run = [], Fraction(0)
        for a in x:
            out.append(self.weight * run)
            run += a
        return tuple(out)

    def sample(self, rng):
        return tuple(random_rational(rng) for _ in range(self.length))

    def __repr__(self):
        return f"PartialSumTarget({self.length}, {self.weight})"


class FreeTarget(TargetAlgebra):
    """The free algebra on ``alphabet`` as a target; the weight stays symbolic."""

    weight = None

    def __init__(self, alphabet: Alphabet, unital: bool = True):
        self.alphabet = alphabet
        self.unital = unital

    def zero(self):
        return DecoratedSum.zero()

    def one(self):
        return DecoratedSum.unit()

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return diamond_decorated_sum(x, y)

    def scale(self, c, x):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("free target has integer-polynomial coefficients")
            c = int(c)
        return x.scale(c)

    def op(self, x):
        return rb_operator_decorated(x)

    def coefficient(self, c):
        return c

    def lambda_scalar(self):
        return LambdaPoly((0, 1))

    def sample(self, rng):
        return random_decorated_sum(rng, self.alphabet, ladder_free=not self.unital)

    def __repr__(self):
        return f"FreeTarget({list(self.alphabet)!r})"


def scalar_target(lam) -> ScalarTarget:
    return ScalarTarget(lam)


def partial_sum_target(length: int, lam) -> PartialSumTarget:
    return PartialSumTarget(length, lam)


def free_target(alphabet) -> FreeTarget:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    return FreeTarget(alphabet)


def generator_assignment(alphabet: Alphabet) -> dict[str, DecoratedSum]:
    """``x -> (•⊔•; x)`` for every symbol: the embedding of the generators."""
    return {x: embed_generator(x) for x in alphabet}


def extend(f: Assignment, target: TargetAlgebra, a: DecoratedSum):
    """Value of the universal morphism determined by ``f`` on ``a``."""
    if not isinstance(a, DecoratedSum):
        raise TypeError(f"expected DecoratedSum, got {type(a).__name__}")
    missing = sorted(a.symbols() - set(f))
    if missing:
        raise AlphabetError(f"no value assigned to {', '.join(map(repr, missing))}")
    if not target.unital:
        bad = [d for d in a.terms if not is_ladder_free(d.forest)]
        if bad:
            raise UnsupportedTermError(f"term {bad[0]} is not ladder-free; it has no image in a nonunitary target")
    cache: dict = {}

    def basis_value(d: DecoratedForest):
        hit = cache.get(d)
        if hit is not None:
            return hit
        factors = []
        for comp, sep in standard_decomposition(d):
            t = comp.forest.trees[0]
            if t.children:
                inner = DecoratedForest._raw(Forest(t.children), comp.decorations)
                factors.append(target.op(basis_value(inner)))
            elif target.unital:
                factors.append(target.unit())
            if sep is not None:
                factors.append(f[sep])
        v = target.product(factors)
        cache[d] = v
        return v

    acc = target.zero()
    for d, c in a.items():
        acc = target.add(acc, target.scale(target.coefficient(c), basis_value(d)))
    return acc
