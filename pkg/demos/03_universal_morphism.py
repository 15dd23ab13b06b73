"""Decorated forests and the universal morphism into concrete targets."""

# %%
from fractions import Fraction

from rbforest import PartialSumTarget, ScalarTarget, extend, parse_and_evaluate
from rbforest.decorated import standard_decomposition
from rbforest.morphism import free_target, generator_assignment
from rbforest.textio import format_sum

a = parse_and_evaluate("{[oo];x}*{[oo]o;y,x}")
print(format_sum(a))

# %% Standard decomposition into decorated trees and separators.
(d, _), *_ = a.items()
for comp, sep in standard_decomposition(d):
    print(comp, sep)

# %% Scalars with P = -L*id.
t = ScalarTarget(2)
print(extend({"x": Fraction(3), "y": Fraction(-1, 2)}, t, a))

# %% Sequences with weighted partial sums.
s = PartialSumTarget(5, 1)
f = {"x": s.element([1, 1, 1, 1, 1]), "y": s.element([0, 1, 0, 1, 0])}
print([str(v) for v in extend(f, s, a)])

# %% Mapping into the free algebra along the generators is the identity.
free = free_target(["x", "y"])
print(extend(generator_assignment(free.alphabet), free, a) == a)
