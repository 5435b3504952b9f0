"""Numerical model spaces and asymmetric truncated Toeplitz operators."""
from .blaschke import BlaschkeProduct, blaschke_eval, make_blaschke, monomial, multiply
from .characterize import (
    DecompositionResult,
    Variant,
    defect_c2,
    defect_c3,
    defect_t1,
    equivalence_suite,
    membership,
    rank2_fit,
    recover_symbol,
    series_partial_sum,
    shift_invariance_test,
)
from .model_space import (
    CoeffVector,
    ConjugationMatrix,
    OrthonormalBasis,
    basis_pair,
    boundary_inner_product,
    conjugate_kernel_coeffs,
    conjugation_apply,
    conjugation_matrix,
    eval_function,
    kernel_coeffs,
    project,
    tm_basis,
)
from .operators import (
    OperatorMatrix,
    SymbolPair,
    atto_from_pair,
    atto_matrix,
    compressed_shift,
    conjugate_flip,
    modified_shift,
    rank_one,
    symbol_defect_pair,
)

__version__ = "0.1.0"
