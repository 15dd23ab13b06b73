"""The product on forests and the grafting operator, weight kept symbolic."""

# %%
from rbforest import ForestSum, diamond, parse_and_evaluate, rb_operator
from rbforest.coeffs import LAMBDA
from rbforest.textio import format_specialized, format_sum, render

a, b = ForestSum.of("[oo]"), ForestSum.of("[o]")
prod = diamond(a, b)
print(format_sum(prod))
print(render(prod, "latex"))

# %% Specializing the weight.
for lam in (-1, 0, 1):
    print(lam, format_specialized(prod, lam))

# %% Powers of the grafted vertex pick up binomial-like coefficients.
ladder = ForestSum.of("[o]")
power = ForestSum.unit()
for k in range(1, 5):
    power = diamond(power, ladder)
    print(k, format_sum(power))

# %% The Rota-Baxter identity on a sample pair.
P = rb_operator
x, y = parse_and_evaluate("oo + [o]"), parse_and_evaluate("2*[oo]")
lhs = diamond(P(x), P(y))
rhs = P(diamond(x, P(y))) + P(diamond(P(x), y)) + LAMBDA * P(diamond(x, y))
print(lhs == rhs)
