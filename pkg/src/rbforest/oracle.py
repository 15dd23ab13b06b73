"""Exhaustive bounded checks of the algebraic laws.

Every check walks all tuples of basis elements on at most ``max_vertices``
vertices per operand, in graded-lexicographic order, with the weight kept
symbolic.  The first failing tuple in that order is reported.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .algebra import ForestSum, concat_sum, diamond, rb_operator, restrict_ladder_free
from .coeffs import LAMBDA, ONE
from .decorated import (
    Alphabet,
    DecoratedSum,
    decorated_basis,
    diamond_decorated_sum,
    embed_generator,
    forget_decorations,
    is_nonunitary_basis,
    rb_operator_decorated,
)
from .forest import forests_up_to, graft, is_ladder_free
from .linear import LinearCombination
from .morphism import (
    FreeTarget,
    PartialSumTarget,
    ScalarTarget,
    TargetAlgebra,
    extend,
    generator_assignment,
)
from .textio import format_sum
from .unitarization import factor_through_unit, unitarize_free

__all__ = ["LAWS", "LawReport", "check_law", "count_terms", "UnknownLawError"]

FOREST_LAWS = ("assoc", "rb", "unit", "two_assoc", "leaf", "ladder_closure")
DECORATED_LAWS = (
    "decorated_assoc",
    "decorated_rb",
    "decoration_length",
    "decorated_ladder_closure",
    "forget",
    "morphism",
    "unitarization",
)
LAWS = FOREST_LAWS + DECORATED_LAWS

MORPHISM_WEIGHTS = (Fraction(-1), Fraction(1), Fraction(2))
PARTIAL_SUM_LENGTH = 4
_SEQUENCE_SEED = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3), Fraction(1, 3))


class UnknownLawError(ValueError):
    pass


@dataclass
class LawReport:
    law: str
    max_vertices: int
    passed: bool
    checked: int
    alphabet: Optional[list[str]] = None
    counterexample: Optional[str] = None
    detail: Optional[str] = None

    def to_text(self) -> str:
        head = f"law {self.law}: {'PASS' if self.passed else 'FAIL'}"
        line = f"{head} ({self.checked} tuples checked, max_vertices={self.max_vertices}"
        if self.alphabet:
            line += f", alphabet={','.join(self.alphabet)}"
        line += ")"
        if not self.passed:
            line += f"\n  counterexample: {self.counterexample}"
            if self.detail:
                line += f"\n  {self.detail}"
        return line

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __str__(self):
        return self.to_text()


def count_terms(a: LinearCombination) -> int:
    """Number of basis terms with a nonzero coefficient."""
    return len(a.terms)


def _text(x) -> str:
    if isinstance(x, LinearCombination):
        return format_sum(x)
    return str(x)


def _run(law: str, n: int, tuples: Iterable[tuple], check: Callable, alphabet=None) -> LawReport:
    count = 0
    for tup in tuples:
        count += 1
        problem = check(*tup)
        if problem:
            return LawReport(
                law,
                n,
                False,
                count,
                alphabet=alphabet,
                counterexample="(" + ", ".join(_text(x) for x in tup) + ")",
                detail=problem if isinstance(problem, str) else None,
            )
    return LawReport(law, n, True, count, alphabet=alphabet)


def _mismatch(lhs, rhs) -> Optional[str]:
    if lhs == rhs:
        return None
    return f"lhs = {_text(lhs)}; rhs = {_text(rhs)}"


def _sequence(i: int, length: int) -> tuple[Fraction, ...]:
    return tuple(_SEQUENCE_SEED[(i + k) % len(_SEQUENCE_SEED)] * (i + 1) for k in range(length))


def morphism_targets() -> list[tuple[TargetAlgebra, Callable[[int], object]]]:
    """Targets and assignment rules used by the ``morphism`` law."""
    out: list = []
    for lam in MORPHISM_WEIGHTS:
        out.append((ScalarTarget(lam), lambda i: Fraction(2 * i + 3, i + 1)))
    for lam in MORPHISM_WEIGHTS:
        out.append((PartialSumTarget(PARTIAL_SUM_LENGTH, lam), lambda i: _sequence(i, PARTIAL_SUM_LENGTH)))
    return out


def _assignment(alphabet: Alphabet, rule) -> dict:
    return {x: rule(i) for i, x in enumerate(alphabet)}


def check_law(law: str, max_vertices: int, alphabet: Optional[Sequence[str]] = None) -> LawReport:
    """Check ``law`` exhaustively on operands with at most ``max_vertices`` vertices."""
    if law not in LAWS:
        raise UnknownLawError(f"unknown law {law!r}; choose from {', '.join(LAWS)}")
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    n = max_vertices

    if law in FOREST_LAWS:
        basis = [ForestSum.of(f) for f in forests_up_to(n)]
        if law == "assoc":
            products: dict = {}

            def prod(a, b):
                key = (a, b)
                hit = products.get(key)
                if hit is None:
                    hit = products[key] = diamond(a, b)
                return hit

            return _run(
                law,
                n,
                itertools.product(basis, repeat=3),
                lambda a, b, c: _mismatch(diamond(prod(a, b), c), diamond(a, prod(b, c))),
            )
        if law == "rb":
            P = rb_operator

            def rb(a, b):
                lhs = diamond(P(a), P(b))
                rhs = P(diamond(a, P(b))) + P(diamond(P(a), b)) + P(diamond(a, b)).scale(LAMBDA)
                return _mismatch(lhs, rhs)

            return _run(law, n, itertools.product(basis, repeat=2), rb)
        if law == "unit":
            one = ForestSum.unit()

            def unit(a):
                return _mismatch(diamond(one, a), a) or _mismatch(diamond(a, one), a)

            return _run(law, n, ((a,) for a in basis), unit)
        if law == "two_assoc":

            def two(f, g, h):
                return _mismatch(diamond(concat_sum(f, g), h), concat_sum(f, diamond(g, h))) or _mismatch(
                    diamond(h, concat_sum(f, g)), concat_sum(diamond(h, f), g)
                )

            return _run(law, n, itertools.product(basis, repeat=3), two)
        if law == "leaf":

            def leaf(a, b):
                (f,), (g,) = a.terms, b.terms
                want = f.leaves + g.leaves - 1
                for h in diamond(a, b).terms:
                    if h.leaves != want:
                        return f"term {h.code} has {h.leaves} leaves, expected {want}"
                return None

            return _run(law, n, itertools.product(basis, repeat=2), leaf)
        # ladder_closure
        lf = [ForestSum.of(f) for f in forests_up_to(n, ladder_free_only=True)]

        def closure(a, b):
            _, ok = restrict_ladder_free(diamond(a, b))
            if not ok:
                return "product leaves the ladder-free span"
            (f,) = a.terms
            if not is_ladder_free(graft(f)):
                return f"graft of {f.code} is not ladder-free"
            return None

        return _run(law, n, itertools.product(lf, repeat=2), closure)

    if not alphabet:
        raise ValueError(f"law {law!r} needs an alphabet")
    alpha = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    names = list(alpha.symbols)
    dbasis = [DecoratedSum._wrap({d: ONE}) for d in decorated_basis(n, alpha)]

    if law == "decorated_assoc":
        dm = diamond_decorated_sum
        return _run(
            law,
            n,
            itertools.product(dbasis, repeat=3),
            lambda a, b, c: _mismatch(dm(dm(a, b), c), dm(a, dm(b, c))),
            names,
        )
    if law == "decorated_rb":
        P, dm = rb_operator_decorated, diamond_decorated_sum

        def drb(a, b):
            lhs = dm(P(a), P(b))
            rhs = P(dm(a, P(b))) + P(dm(P(a), b)) + P(dm(a, b)).scale(LAMBDA)
            return _mismatch(lhs, rhs)

        return _run(law, n, itertools.product(dbasis, repeat=2), drb, names)
    if law == "decoration_length":

        def length(a, b):
            for s in (diamond_decorated_sum(a, b), rb_operator_decorated(a)):
                for d in s.terms:
                    if len(d.decorations) != d.forest.leaves - 1:
                        return f"term {d} violates the decoration length"
            return None

        return _run(law, n, itertools.product(dbasis, repeat=2), length, names)
    if law == "decorated_ladder_closure":
        lf = [b for b in dbasis if all(is_nonunitary_basis(d) for d in b.terms)]

        def dclosure(a, b):
            for s in (diamond_decorated_sum(a, b), rb_operator_decorated(a)):
                if not all(is_nonunitary_basis(d) for d in s.terms):
                    return "result leaves the nonunitary basis"
            return None

        return _run(law, n, itertools.product(lf, repeat=2), dclosure, names)
    if law == "forget":
        return _run(
            law,
            n,
            itertools.product(dbasis, repeat=2),
            lambda a, b: _mismatch(
                forget_decorations(diamond_decorated_sum(a, b)),
                diamond(forget_decorations(a), forget_decorations(b)),
            ),
            names,
        )
    if law == "morphism":
        return _check_morphism(n, alpha, dbasis)
    return _check_unitarization(n, alpha, dbasis)


def _check_morphism(n: int, alpha: Alphabet, dbasis: list) -> LawReport:
    names = list(alpha.symbols)
    targets = [(t, _assignment(alpha, rule)) for t, rule in morphism_targets()]
    for t, _ in targets:
        t.check_rota_baxter()
    free = FreeTarget(alpha)
    jx = generator_assignment(alpha)

    def per_target(t: TargetAlgebra, f: dict, a, b):
        fa, fb = extend(f, t, a), extend(f, t, b)
        if not t.equal(extend(f, t, diamond_decorated_sum(a, b)), t.mul(fa, fb)):
            return f"not multiplicative into {t!r}"
        if not t.equal(extend(f, t, rb_operator_decorated(a)), t.op(fa)):
            return f"does not commute with the operator of {t!r}"
        return None

    def check(a, b):
        for t, f in targets:
            problem = per_target(t, f, a, b)
            if problem:
                return problem
        if extend(jx, free, a) != a:
            return "free-target extension of the generators is not the identity"
        return None

    # generators first: f̄ ∘ j = f
    for t, f in targets:
        for x in alpha:
            if not t.equal(extend(f, t, embed_generator(x)), f[x]):
                return LawReport(
                    "morphism", n, False, 0, names, counterexample=f"({x})", detail=f"f̄(j(x)) != f(x) in {t!r}"
                )
    return _run("morphism", n, itertools.product(dbasis, repeat=2), check, names)


def _check_unitarization(n: int, alpha: Alphabet, dbasis: list) -> LawReport:
    names = list(alpha.symbols)
    lf = [b for b in dbasis if all(is_nonunitary_basis(d) for d in b.terms)]
    targets = []
    for t, rule in morphism_targets():
        targets.append((t, t.nonunitary(), _assignment(alpha, rule)))

    def check(a, b):
        ua, ub = unitarize_free(a), unitarize_free(b)
        if unitarize_free(diamond_decorated_sum(a, b)) != diamond_decorated_sum(ua, ub):
            return "inclusion is not multiplicative"
        if unitarize_free(rb_operator_decorated(a)) != rb_operator_decorated(ua):
            return "inclusion does not commute with the operator"
        ab = diamond_decorated_sum(a, b)
        for unitary, bare, f in targets:
            for s in (a, ab):
                if not unitary.equal(factor_through_unit(f, unitary, unitarize_free(s)), extend(f, bare, s)):
                    return f"unitary extension does not restrict to the nonunitary one in {unitary!r}"
        return None

    return _run("unitarization", n, itertools.product(lf, repeat=2), check, names)
