"""Exact arithmetic for partial injections, dual diagram semigroups,
their deformations, and the double-centralizer checks tying them
together on tensor powers."""

from .diagrams import (
    BoundaryPoint,
    HatElement,
    PartialInjection,
    SetPartition,
    SizeGuardError,
    block_count_at_most,
    block_union_leq,
    canonicalize,
    coarser_leq,
    count_is,
    count_istar,
    enumerate_is,
    enumerate_istar,
    enumerate_pistar,
    is_dual_element,
    is_partial_dual_element,
    primed,
    subblocks_leq,
    unprimed,
)
from .dualities import (
    CentralizerData,
    DualityReport,
    centralizer_data,
    default_grid,
    predicted_algebra_faithful,
    predicted_semigroup_faithful,
    run_full_report,
    run_grid,
    verify_algebra_faithfulness,
    verify_centralizer,
    verify_commutation,
    verify_semigroup_faithfulness,
)
from .exact_linalg import (
    AlgebraElement,
    ExactMatrix,
    RowSpace,
    commutant_basis,
    in_span,
    rank,
    span_dimension,
)
from .morphisms import (
    MorphismReport,
    block_subset_sum,
    block_subset_sum_inverse,
    bullet_product,
    coarsening_sum,
    coarsening_sum_inverse,
    coarsening_sum_inverse_by_solve,
    extend_linearly,
    mobius_merge_drop,
    morphism_report,
    natural_upper_set,
    pistar_product,
    star_product,
    verify_hat_consistency,
    verify_tilde_factorization,
)
from .notation import (
    FAMILIES,
    NotationError,
    format_element,
    parse_element,
    parse_partial_injection,
    parse_set_partition,
)
from .semigroups import (
    CompositionResult,
    bullet_multiply,
    compose_partial_injection,
    epsilon,
    is_generators,
    mulclose,
    multiply_composition,
    multiply_istar,
    multiply_pistar,
    star_multiply,
)
from .tensor_actions import (
    ActionSpace,
    action_matrix_U,
    action_matrix_V,
    match_set_c,
    match_set_hat,
    match_set_partial,
    match_set_tilde,
    rook_action_matrix,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
