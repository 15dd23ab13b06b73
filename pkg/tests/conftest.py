import pytest
from hypothesis import settings, strategies as st

from rbforest.algebra import ForestSum
from rbforest.coeffs import LambdaPoly
from rbforest.forest import DOT, Forest, Tree

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

trees = st.recursive(
    st.just(DOT),
    lambda kids: st.lists(kids, min_size=1, max_size=3).map(Tree),
    max_leaves=5,
)
forests = st.lists(trees, min_size=1, max_size=3).map(Forest)
small_forests = forests.filter(lambda f: f.vertices <= 5)

polys = st.lists(st.integers(-5, 5), max_size=4).map(LambdaPoly)
nonzero_polys = polys.filter(bool)

forest_sums = st.dictionaries(small_forests, nonzero_polys, max_size=3).map(ForestSum)


@pytest.fixture
def f():
    return Forest.from_code
