"""Exhaustive bounded checks of the algebraic laws."""

# %%
import time

from rbforest.oracle import LAWS, check_law

for law in LAWS:
    start = time.perf_counter()
    report = check_law(law, 3, alphabet=["x", "y"])
    print(f"{report.to_text()}  [{time.perf_counter() - start:.2f}s]")

# %% Associativity on all 10648 triples of forests with at most four vertices.
print(check_law("assoc", 4))
