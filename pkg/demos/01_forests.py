"""Planar rooted forests: encoding, statistics and enumeration."""

# %%
from rbforest.forest import Forest, enumerate_forests, graft, is_ladder_free

f = Forest.from_code("[oo]o[[o]]")
print(f, "leaves:", f.leaves, "depth:", f.depth, "breadth:", f.breadth, "vertices:", f.vertices)

# %% Grafting adds a new root above every tree of the forest.
print(graft(Forest.from_code("o[o]")))

# %% Counts per vertex number are Catalan numbers.
for n in range(1, 7):
    print(n, len(enumerate_forests(n, trees_only=True)), len(enumerate_forests(n)))

# %% Ladder-free forests avoid the subtree [o] and are not the single vertex.
print([g.code for g in enumerate_forests(4) if is_ladder_free(g)])
print([g.code for g in enumerate_forests(4, ladder_free_only=True)])
