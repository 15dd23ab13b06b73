"""Slow reference implementations used as test oracles.

Nothing here imports the package: forests are plain encoding strings and
coefficients are ``{exponent: int}`` dicts.
"""

from itertools import product as cartesian


def split_trees(code):
    """Split a forest encoding into its tree encodings."""
    out, level, start = [], 0, 0
    for i, ch in enumerate(code):
        if ch == "[":
            level += 1
        elif ch == "]":
            level -= 1
        if level == 0:
            out.append(code[start : i + 1])
            start = i + 1
    return out


def branches(tree):
    return tree[1:-1]


def vertices(code):
    return code.count("o") + code.count("[")


def leaves(code):
    return code.count("o")


def poly_add(p, q):
    r = dict(p)
    for e, c in q.items():
        r[e] = r.get(e, 0) + c
    return {e: c for e, c in r.items() if c}


def poly_mul(p, q):
    r = {}
    for a, x in p.items():
        for b, y in q.items():
            r[a + b] = r.get(a + b, 0) + x * y
    return {e: c for e, c in r.items() if c}


def sum_add(s, t):
    r = dict(s)
    for k, c in t.items():
        r[k] = poly_add(r.get(k, {}), c)
    return {k: c for k, c in r.items() if c}


def sum_scale(s, p):
    return {k: poly_mul(c, p) for k, c in s.items() if poly_mul(c, p)}


def graft_sum(s):
    return {"[" + k + "]": c for k, c in s.items()}


def tree_product(t, u):
    if t == "o":
        return {u: {0: 1}}
    if u == "o":
        return {t: {0: 1}}
    a, b = branches(t), branches(u)
    out = graft_sum(forest_product(t, b))
    out = sum_add(out, graft_sum(forest_product(a, u)))
    out = sum_add(out, sum_scale(graft_sum(forest_product(a, b)), {1: 1}))
    return out


def forest_product(f, g):
    fs, gs = split_trees(f), split_trees(g)
    head, tail = "".join(fs[:-1]), "".join(gs[1:])
    return {head + k + tail: c for k, c in tree_product(fs[-1], gs[0]).items()}


def sum_product(s, t):
    out = {}
    for f, cf in s.items():
        for g, cg in t.items():
            out = sum_add(out, sum_scale(forest_product(f, g), poly_mul(cf, cg)))
    return out


def all_forest_codes(n):
    """Brute force: every string over {'[', ']', 'o'} that encodes a forest on n vertices."""
    found = set()
    for length in range(1, 2 * n):
        for chars in cartesian("[]o", repeat=length):
            s = "".join(chars)
            if vertices(s) == n and _valid(s):
                found.add(s)
    return found


def _valid(s):
    level = 0
    prev = ""
    for ch in s:
        if ch == "[":
            level += 1
        elif ch == "]":
            if level == 0 or prev == "[":
                return False
            level -= 1
        prev = ch
    return level == 0


def catalan_counts(n):
    """(trees, forests) with k vertices for k = 1..n, from the recursion
    forests(0) = 1, trees(k) = forests(k-1), forests(k) = sum trees(i) forests(k-i)."""
    forests = [1]
    trees = [0]
    for k in range(1, n + 1):
        trees.append(forests[k - 1])
        forests.append(sum(trees[i] * forests[k - i] for i in range(1, k + 1)))
    return trees[1:], forests[1:]


def has_ladder(code):
    """A subtree ⌊•⌋ is exactly the substring '[o]' of the encoding."""
    return "[o]" in code
