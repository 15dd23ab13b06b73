"""Free Rota-Baxter algebras of weight L on planar rooted forests.

The weight L is kept symbolic: coefficients live in Z[L] and can be
specialized to rationals when mapping into concrete algebras.
"""

from .algebra import ForestSum, concat_sum, diamond, diamond_forests, rb_operator, restrict_ladder_free
from .coeffs import LAMBDA, LambdaPoly, poly_add, poly_mul, specialize
from .decorated import (
    Alphabet,
    DecoratedForest,
    DecoratedSum,
    diamond_decorated,
    diamond_decorated_sum,
    embed_generator,
    forget_decorations,
    is_nonunitary_basis,
    rb_operator_decorated,
    standard_decomposition,
)
from .errors import (
    AlphabetError,
    DecorationError,
    ParseError,
    PreconditionError,
    RotaBaxterError,
    UnsupportedTermError,
)
from .forest import (
    DOT,
    Forest,
    Tree,
    canonical_compare,
    concat,
    depth,
    enumerate_forests,
    graft,
    is_ladder_free,
    leaf_count,
    root_branches,
)
from .morphism import (
    PartialSumTarget,
    ScalarTarget,
    TargetAlgebra,
    extend,
    free_target,
    generator_assignment,
    partial_sum_target,
    scalar_target,
)
from .oracle import LawReport, check_law, count_terms
from .textio import evaluate, format_sum, parse, parse_and_evaluate, render
from .unitarization import factor_through_unit, idempotent_unitarize, unitarize_free

__version__ = "0.1.0"
