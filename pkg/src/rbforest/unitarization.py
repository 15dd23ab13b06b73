"""Adjoining units to nonunitary Rota-Baxter algebras.

Two cases are covered: the free nonunitary algebra, whose unitarization is
the free unitary algebra via the inclusion of ladder-free terms, and
algebras whose operator satisfies ``P² = -λP``, where ``k ⊕ R`` with
``P̃(m, a) = (-λm, P(a))`` works.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .decorated import DecoratedSum
from .errors import PreconditionError
from .forest import is_ladder_free
from .morphism import Assignment, TargetAlgebra, extend, random_rational

__all__ = [
    "unitarize_free",
    "factor_through_unit",
    "UnitarizedElement",
    "UnitarizedTarget",
    "idempotent_unitarize",
]


def unitarize_free(a: DecoratedSum) -> DecoratedSum:
    """Inclusion of the free nonunitary algebra into the free unitary one."""
    for d in a.terms:
        if not is_ladder_free(d.forest):
            raise PreconditionError(f"term {d} is outside the nonunitary basis")
    return a


def factor_through_unit(f: Assignment, target: TargetAlgebra, a: DecoratedSum):
    """The unitary extension of ``f`` evaluated on ``a``.

    Composed with :func:`unitarize_free` it agrees with the nonunitary
    extension of ``f`` into the same algebra.
    """
    if not target.unital:
        raise PreconditionError("factor_through_unit needs a unitary target")
    return extend(f, target, a)


@dataclass(frozen=True)
class UnitarizedElement:
    scalar_part: Fraction
    body: Any


class UnitarizedTarget(TargetAlgebra):
    """``k ⊕ R`` with ``(m, a)(n, b) = (mn, mb + na + ab)``."""

    unital = True

    def __init__(self, base: TargetAlgebra):
        self.base = base
        self.weight = base.weight

    def element(self, m, a) -> UnitarizedElement:
        return UnitarizedElement(Fraction(m), a)

    def zero(self):
        return UnitarizedElement(Fraction(0), self.base.zero())

    def one(self):
        return UnitarizedElement(Fraction(1), self.base.zero())

    def add(self, x, y):
        return UnitarizedElement(x.scalar_part + y.scalar_part, self.base.add(x.body, y.body))

    def mul(self, x, y):
        b = self.base
        m, n = x.scalar_part, y.scalar_part
        body = b.add(b.add(b.scale(m, y.body), b.scale(n, x.body)), b.mul(x.body, y.body))
        return UnitarizedElement(m * n, body)

    def scale(self, c, x):
        c = Fraction(c)
        return UnitarizedElement(c * x.scalar_part, self.base.scale(c, x.body))

    def op(self, x):
        return UnitarizedElement(-self.weight * x.scalar_part, self.base.op(x.body))

    def equal(self, x, y):
        return x.scalar_part == y.scalar_part and self.base.equal(x.body, y.body)

    def sample(self, rng):
        return UnitarizedElement(random_rational(rng), self.base.sample(rng))

    def __repr__(self):
        return f"UnitarizedTarget({self.base!r})"


def idempotent_unitarize(target: TargetAlgebra, samples: int = 50, seed: int = 0) -> UnitarizedTarget:
    """Unitarize a target whose operator satisfies ``P² = -λP``.

    Only the nonunitary structure of ``target`` is used.  The identity
    ``P² = -λP`` is checked on ``samples`` random elements.
    """
    if target.weight is None:
        raise PreconditionError("idempotent_unitarize needs a target of rational weight")
    rng = random.Random(seed)
    lam = target.weight
    for _ in range(samples):
        a = target.sample(rng)
        pa = target.op(a)
        if not target.equal(target.op(pa), target.scale(-lam, pa)):
            raise PreconditionError(f"P^2 != -{lam}P on sample {a!r}")
    return UnitarizedTarget(target)
