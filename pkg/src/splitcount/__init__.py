"""Exact enumeration and cross-verification of splitting-subspace counts.

Three independent routes to every count -- brute-force enumeration over a
concrete F_q, a memoized two-way-expansion recursion symbolic in q, and
closed-form product formulas -- plus the q = 1 cyclic-set analogue and a
CLI that cross-checks them all.
"""

from ._backend import available as kernel_backends, name as kernel_backend
from .closedform import (
    angle_count_formula,
    chu_vandermonde_first,
    chu_vandermonde_second,
    flag_count_formula,
    pair_class_formula,
    splitting_count_formula,
    verify_expansions,
)
from .fields import FieldSpec, ModulusPoly, find_irreducible
from .labels import (
    format_label,
    normalize,
    parse_label,
    precedes,
    splitting_label,
)
from .linalg import (
    Mat,
    Subspace,
    companion_operator,
    image,
    intersect,
    kernel_space,
    preimage,
    span,
    subspace_sum,
    subspaces,
    subspaces_containing,
    subspaces_within,
)
from .oracle import (
    CountResult,
    check_pair_class_bijection,
    count_angle_tuple,
    count_bracket,
    count_flag_tuple,
    count_flag_tuple_for_operator,
    count_operator_splitting,
    count_pair_class,
    count_pair_class_for_operator,
    count_splitting,
    defect,
)
from .q1analog import (
    count_flag_subsets,
    count_pair_class_sets,
    count_splitting_subsets,
    cyclic_shift,
    pair_class_set_formulas,
)
from .qarith import (
    QPoly,
    evaluate,
    exact_divide,
    gaussian_binomial,
    q_factorial,
    q_integer,
)
from .recursion import count_recursive, count_recursive_with_bases, recursion_trace
from .verify import SUITE_NAMES, run_suite

__version__ = "0.1.0"
