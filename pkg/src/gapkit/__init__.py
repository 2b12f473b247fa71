"""Arity gap of finite functions: minors, quasi-arity, gap classification,
group-valued decompositions and exact counting."""

from .census import BudgetExceeded, Census, all_functions, census, compare, random_function, synth_gap_instance
from .counting import (
    UnsupportedParameters,
    count_G,
    count_O,
    count_Q,
    count_S,
    count_table,
    count_U,
    count_V,
    falling,
)
from .decompose import (
    Decomposition,
    DecompositionError,
    FormalSum,
    decompose,
    decompose_gap2,
    decompose_quasi,
    eval_formal_sum,
    formal_sum_support,
    phi_tilde,
)
from .fncore import (
    DiagSlice,
    FnTable,
    diag_points,
    drop_inessential,
    essential_arity,
    essential_variables,
    evaluate,
    identify,
    index_of,
    is_determined_by_oddsupp,
    is_essential,
    oddsupp,
    oddsupp_range,
    partial_essential_arity,
    point_of,
    restrict_diag,
    simple_minor,
)
from .gap import GapReport, InessentialVariableError, arity_gap, check_ternary, classify, essl, quasi_arity, unique_support
from .groups import AbelianGroup, GroupError, fn_add, fn_sub, fn_zero_on_diag, make_boolean, make_cyclic, make_product, validate

__all__ = [
    "AbelianGroup",
    "BudgetExceeded",
    "Census",
    "Decomposition",
    "DecompositionError",
    "DiagSlice",
    "FnTable",
    "FormalSum",
    "GapReport",
    "GroupError",
    "InessentialVariableError",
    "UnsupportedParameters",
    "all_functions",
    "arity_gap",
    "census",
    "check_ternary",
    "classify",
    "compare",
    "count_G",
    "count_O",
    "count_Q",
    "count_S",
    "count_U",
    "count_V",
    "count_table",
    "decompose",
    "decompose_gap2",
    "decompose_quasi",
    "diag_points",
    "drop_inessential",
    "essential_arity",
    "essential_variables",
    "essl",
    "eval_formal_sum",
    "evaluate",
    "falling",
    "fn_add",
    "fn_sub",
    "fn_zero_on_diag",
    "formal_sum_support",
    "identify",
    "index_of",
    "is_determined_by_oddsupp",
    "is_essential",
    "make_boolean",
    "make_cyclic",
    "make_product",
    "oddsupp",
    "oddsupp_range",
    "partial_essential_arity",
    "phi_tilde",
    "point_of",
    "quasi_arity",
    "random_function",
    "restrict_diag",
    "simple_minor",
    "synth_gap_instance",
    "unique_support",
    "validate",
]

__version__ = "0.1.0"
