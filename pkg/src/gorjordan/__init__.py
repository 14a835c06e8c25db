"""Rank matrices and Jordan types of linear forms on Artinian Gorenstein algebras.

The algebras are presented by Macaulay dual generators: ``A = S/Ann(F)`` where
``S = Q[x1..xn]`` acts on ``R = Q[X1..Xn]`` by differentiation.  Everything is
computed over the rationals with exact arithmetic.
"""

from .poly import (
    LinearForm,
    Polynomial,
    PolynomialSyntaxError,
    Ring,
    apply_operator,
    linear_power_derivative,
    monomial_basis,
    parse_linear_form,
    parse_polynomial,
)
from .exact_linalg import RationalMatrix, pivot_columns, rank
from .apolarity import (
    DualGenerator,
    HilbertFunction,
    algebra_basis,
    catalecticant,
    derived_generator,
    hilbert_function,
    mixed_hessian_rank,
    multiplication_matrix,
    nilpotency_order,
)
from .jordan import (
    InvalidRankMatrixError,
    JdtMatrix,
    JordanDegreeType,
    Partition,
    RankMatrix,
    jdt_from_rank,
    jdt_prime,
    jordan_degree_type,
    jordan_type,
    jordan_type_oracle,
    partition_from_dimensions,
    rank_from_jdt,
    rank_matrix,
)
from .sequences import (
    ConditionReport,
    check_rank_matrix_conditions,
    is_o_sequence,
    lex_segment_is_o_sequence,
    macaulay_growth_bound,
)
from .classify3 import (
    ClassifiedProfile,
    ParamPair,
    ParamTriple,
    predicted_profile,
    predicted_profile_l2,
    small_part_jordan_type,
    valid_parameters_l2,
    valid_parameters_l3,
    verify_classification,
    witness_generator,
)
from .search import SearchVerdict, attempt_realization, enumerate_candidates, run_search

__version__ = "0.1.0"

__all__ = [
    "ClassifiedProfile",
    "ConditionReport",
    "DualGenerator",
    "HilbertFunction",
    "InvalidRankMatrixError",
    "JdtMatrix",
    "JordanDegreeType",
    "LinearForm",
    "ParamPair",
    "ParamTriple",
    "Partition",
    "Polynomial",
    "PolynomialSyntaxError",
    "RankMatrix",
    "RationalMatrix",
    "Ring",
    "SearchVerdict",
    "algebra_basis",
    "apply_operator",
    "attempt_realization",
    "catalecticant",
    "check_rank_matrix_conditions",
    "derived_generator",
    "enumerate_candidates",
    "hilbert_function",
    "is_o_sequence",
    "jdt_from_rank",
    "jdt_prime",
    "jordan_degree_type",
    "jordan_type",
    "jordan_type_oracle",
    "lex_segment_is_o_sequence",
    "linear_power_derivative",
    "macaulay_growth_bound",
    "mixed_hessian_rank",
    "monomial_basis",
    "multiplication_matrix",
    "nilpotency_order",
    "parse_linear_form",
    "parse_polynomial",
    "partition_from_dimensions",
    "pivot_columns",
    "predicted_profile",
    "predicted_profile_l2",
    "rank",
    "rank_from_jdt",
    "rank_matrix",
    "run_search",
    "small_part_jordan_type",
    "valid_parameters_l2",
    "valid_parameters_l3",
    "verify_classification",
    "witness_generator",
]
