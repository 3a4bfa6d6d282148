"""Detect genuine multipartite correlations of qubit states by coefficient-matrix rank."""
from .coefficient import CoefficientMatrix, coefficient_matrix, cut_rank
from .errors import (
    CapacityError,
    CrossValidationError,
    GenCorrError,
    InvalidFactorizationError,
    InvalidInputError,
    NotAProductError,
)
from .mixed import (
    CorrelationReport,
    Purification,
    Tolerances,
    build_purification,
    degree_of_correlations,
    factorize_mixed,
    has_genuine_k,
    is_genuine,
    oracle_is_product_cut,
    spectral_decompose,
    theorem3_is_genuine,
)
from .pure import (
    Factorization,
    ProductTermSum,
    classify_symmetric,
    degree_pure,
    factor_across,
    factorize,
    is_genuine_pure,
    sum_of_products,
)
from .states import (
    MixedState,
    PureState,
    SymmetricState,
    bell,
    dicke,
    dicke_mixture,
    ghz,
    ghz_w_mixture,
    random_mixed,
    random_mixed_product,
    random_product,
    random_pure,
    smolin,
    swapping_state,
    symmetric_to_pure,
    w,
)
from .subsets import Bipartition, canonical_cuts

__version__ = "0.1.0"

__all__ = [
    "CoefficientMatrix",
    "coefficient_matrix",
    "cut_rank",
    "CapacityError",
    "CrossValidationError",
    "GenCorrError",
    "InvalidFactorizationError",
    "InvalidInputError",
    "NotAProductError",
    "CorrelationReport",
    "Purification",
    "Tolerances",
    "build_purification",
    "degree_of_correlations",
    "factorize_mixed",
    "has_genuine_k",
    "is_genuine",
    "oracle_is_product_cut",
    "spectral_decompose",
    "theorem3_is_genuine",
    "Factorization",
    "ProductTermSum",
    "classify_symmetric",
    "degree_pure",
    "factor_across",
    "factorize",
    "is_genuine_pure",
    "sum_of_products",
    "MixedState",
    "PureState",
    "SymmetricState",
    "bell",
    "dicke",
    "dicke_mixture",
    "ghz",
    "ghz_w_mixture",
    "random_mixed",
    "random_mixed_product",
    "random_product",
    "random_pure",
    "smolin",
    "swapping_state",
    "symmetric_to_pure",
    "w",
    "Bipartition",
    "canonical_cuts",
]
