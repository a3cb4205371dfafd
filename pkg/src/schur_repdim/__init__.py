"""Exact weight and character combinatorics for Schur algebras of GL_n,
and the digit construction giving lower bounds on their representation
dimension."""
from .characters import (
    Character,
    SignedChi,
    brauer_expand,
    brauer_sum,
    dimension,
    dot_normalize,
    exponential,
    frobenius_twist,
    orbit_sum,
    weight_multiplicity,
    weyl_character,
    zhat_character,
)
from .modules import (
    AdmissibleIndex,
    InjectiveDescriptor,
    OpaqueAlgebra,
    TruncatedPolyAlgebra,
    determinant_shift,
    hook_injective_end,
    multiplicity_product_symbolic,
    pm_hook_injective,
    steinberg_tilting,
    tensor_factorization,
)
from .planner import (
    ClassicalParams,
    ConstructionResult,
    PreconditionError,
    QuantumParams,
    ThresholdError,
    construct_classical,
    construct_quantum,
    max_h_classical,
    max_h_quantum,
    min_r_classical,
    min_r_quantum,
    suggest_m,
)
from .weights import (
    PAdicDecomposition,
    Weight,
    breadth,
    degree,
    delta,
    dominance_leq,
    epsilon,
    in_Xm,
    is_column_regular,
    omega,
    p_adic_breadth,
    p_adic_decompose,
    special_weight,
    w0_apply,
    weyl_orbit,
)

__version__ = "0.1.0"
