"""Independent brute-force routes to the same quantities as the formulas."""

from .clebsch_gordan import cg_square, pmf_cg_oracle, two_row_dimension
from .grassmann import (
    FqSubspace,
    count_intersection_pairs,
    enumerate_subspaces,
    grassmann_set,
    intersection_dimension,
    pair_count_formula,
)
from .tensor import (
    TensorState,
    dicke_state,
    pmf_tensor_oracle,
    projector_expectation,
    projector_matrix,
    tensor_pmf_table,
    two_row_character,
    xi_state,
)

__all__ = [
    "FqSubspace",
    "TensorState",
    "cg_square",
    "count_intersection_pairs",
    "dicke_state",
    "enumerate_subspaces",
    "grassmann_set",
    "intersection_dimension",
    "pair_count_formula",
    "pmf_cg_oracle",
    "pmf_tensor_oracle",
    "projector_expectation",
    "projector_matrix",
    "tensor_pmf_table",
    "two_row_character",
    "two_row_dimension",
    "xi_state",
]
