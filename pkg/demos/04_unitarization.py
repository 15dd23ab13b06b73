"""Adjoining a unit: the free case and the idempotent case."""

# %%
from fractions import Fraction

from rbforest import ScalarTarget, extend, parse_and_evaluate
from rbforest.unitarization import factor_through_unit, idempotent_unitarize, unitarize_free

# Ladder-free elements live in the nonunitary free algebra.
a = parse_and_evaluate("{[oo];x}*{[ooo];x,y}")
t = ScalarTarget(Fraction(1, 2))
f = {"x": Fraction(2), "y": Fraction(5)}
print(factor_through_unit(f, t, unitarize_free(a)), extend(f, t.nonunitary(), a))

# %% k + R with P~(m, a) = (-L*m, P(a)).
u = idempotent_unitarize(ScalarTarget(2, unital=False))
x = u.element(1, Fraction(3))
print(u.op(x), u.op(u.op(x)), u.scale(-2, u.op(x)))
u.check_rota_baxter(samples=200)
print("Rota-Baxter identity holds on 200 samples")
