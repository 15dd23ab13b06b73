"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
"""

import random
import time
from fractions import Fraction

import pytest

from rbforest.algebra import ForestSum, clear_caches
from rbforest.coeffs import LAMBDA
from rbforest.decorated import Alphabet, random_decorated_sum
from rbforest.forest import enumerate_forests, forests_up_to
from rbforest.morphism import ScalarTarget
from rbforest.oracle import check_law
from rbforest.textio import dumps, evaluate, format_sum, loads, parse, parse_and_evaluate
from rbforest.unitarization import idempotent_unitarize

from .naive import catalan_counts

XY = ["x", "y"]


@pytest.fixture
def verdict(capsys):
    def emit(number, description, ok, elapsed=None):
        timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {description}{timing}")
        assert ok, f"criterion {number} failed: {description}"

    return emit


def timed(fn):
    clear_caches()
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_1_worked_example(verdict):
    got, dt = timed(lambda: parse_and_evaluate("[oo]*[o]"))
    want = ForestSum.of("[o[o]]") + ForestSum.of("[[oo]]") + ForestSum.of("[oo]", LAMBDA)
    ok = got == want and len(got) == 3 and format_sum(got) == "[o[o]] + [[oo]] + L*[oo]" and dt < 1
    verdict(1, "worked example [oo]*[o] has the three expected terms", ok, dt)


def test_2_associativity(verdict):
    small, dt3 = timed(lambda: check_law("assoc", 3))
    large, dt4 = timed(lambda: check_law("assoc", 4))
    ok = small.passed and small.checked == 512 and large.passed and large.checked == 10648 and dt4 < 60
    verdict(2, "associativity on 512 and 10648 triples", ok, dt3 + dt4)


def test_3_rota_baxter(verdict):
    r, dt = timed(lambda: check_law("rb", 4))
    verdict(3, "Rota-Baxter identity on 484 pairs", r.passed and r.checked == 484 and dt < 10, dt)


def test_4_two_associativity_and_leaves(verdict):
    def both():
        return check_law("two_assoc", 4), check_law("leaf", 4)

    (two, leaf), dt = timed(both)
    ok = two.passed and leaf.passed and leaf.checked == 484 and dt < 10
    verdict(4, "2-associativity and leaf formula up to 4 vertices", ok, dt)


def test_5_ladder_free_closure(verdict):
    r, dt = timed(lambda: check_law("ladder_closure", 5))
    verdict(5, "ladder-free forests closed under product and grafting up to 5 vertices", r.passed, dt)


def test_6_decorated_laws(verdict):
    def both():
        return check_law("decorated_assoc", 3, XY), check_law("decorated_rb", 3, XY)

    (assoc, rb), dt = timed(both)
    ok = assoc.passed and rb.passed and dt < 120
    verdict(6, f"decorated assoc ({assoc.checked}) and RB ({rb.checked}) with alphabet x,y", ok, dt)


def test_7_universal_property(verdict):
    r, dt = timed(lambda: check_law("morphism", 3, XY))
    verdict(7, f"universal morphism into scalar, partial-sum and free targets ({r.checked} pairs)", r.passed, dt)


def test_8a_free_unitarization(verdict):
    r, dt = timed(lambda: check_law("unitarization", 4, XY))
    verdict("8a", f"inclusion is a morphism and factors the nonunitary extension ({r.checked} pairs)", r.passed, dt)


def test_8b_idempotent_unitarization(verdict):
    samples = 200
    failures = []
    for lam in (Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)):
        u = idempotent_unitarize(ScalarTarget(lam, unital=False), samples=samples)
        rng = random.Random(int(lam * 10) + 17)
        for _ in range(samples):
            x, y = u.sample(rng), u.sample(rng)
            if not u.equal(u.rb_defect(x, y), u.zero()):
                failures.append((lam, "rb", x, y))
            px = u.op(x)
            if not u.equal(u.op(px), u.scale(-lam, px)):
                failures.append((lam, "idempotent", x))
    verdict("8b", f"adjoined unit keeps RB identity and P^2 = -L*P ({samples} samples x 5 weights)", not failures)


def test_9_enumeration_counts(verdict):
    trees = [len(enumerate_forests(n, trees_only=True)) for n in range(1, 7)]
    forests = [len(enumerate_forests(n)) for n in range(1, 7)]
    oracle_trees, oracle_forests = catalan_counts(6)
    ok = (
        trees == oracle_trees == [1, 1, 2, 5, 14, 42]
        and forests == oracle_forests == [1, 2, 5, 14, 42, 132]
    )
    verdict(9, f"tree counts {trees}, forest counts {forests}", ok)


def test_10_round_trip(verdict):
    bad = []
    for f in forests_up_to(4):
        for s in (ForestSum.of(f), ForestSum.of(f, LAMBDA * 2 - 1)):
            if parse_and_evaluate(format_sum(s)) != s or loads(dumps(s)) != s:
                bad.append(format_sum(s))
    rng = random.Random(2024)
    alphabet = Alphabet(XY)
    for _ in range(100):
        a = random_decorated_sum(rng, alphabet, max_vertices=4)
        if evaluate(parse(format_sum(a)), decorated=True) != a or loads(dumps(a), decorated=True) != a:
            bad.append(format_sum(a))
    verdict(10, "print/parse round trip on all forests up to 4 vertices and 100 decorated sums", not bad)
