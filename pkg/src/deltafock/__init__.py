"""Exact arithmetic for a deformed oscillator algebra on a lattice, its
truncated ladder of number states, and the deformed Hermite polynomials
that represent them.  Every algebraic identity is checked by independent
computational routes with zero tolerance."""

from .exact import (
    IncommensurableError,
    Poly,
    ScaledRational,
    SqrtRational,
    split_square,
    wallis_moment,
)
from .fock import (
    DegreeError,
    FockState,
    GramInconsistencyError,
    GramMatrix,
    LadderCoefficients,
    TruncationResult,
    apply_annihilation,
    apply_creation,
    build_states,
    commutator_suite,
    factorization_residual,
    gram_exact,
    gram_recurrence,
    inner_product,
    ladder_coefficients,
    reindex_ladder,
    state_samples_real,
    truncation_check,
    vacuum_norm_closed,
    vacuum_state,
)
from .hermite import (
    DeformationParam,
    hermite_classical,
    hermite_delta_closed,
    hermite_delta_rec,
    hermite_limit_table,
    max_rel_coeff_error,
)
from .lattice import (
    LatticeFunction,
    LatticeOperator,
    LatticeWindow,
    build_average,
    build_central_difference,
    build_parity,
    build_position,
    build_shift,
    casimir_residual_lattice,
    continuum_limit_study,
    identity_operator,
    interior_commutator_residual,
    lattice_from_phi,
    lattice_to_phi,
    overlap_kernel,
    parity_conjugation_check,
    zero_operator,
)
from .suites import Check, RunReport, algebra_suite, fock_suite, limits_suite, run_suite

__version__ = "1.0.0"

__all__ = [
    "Check",
    "DeformationParam",
    "DegreeError",
    "FockState",
    "GramInconsistencyError",
    "GramMatrix",
    "IncommensurableError",
    "LadderCoefficients",
    "LatticeFunction",
    "LatticeOperator",
    "LatticeWindow",
    "Poly",
    "RunReport",
    "ScaledRational",
    "SqrtRational",
    "TruncationResult",
    "algebra_suite",
    "apply_annihilation",
    "apply_creation",
    "build_average",
    "build_central_difference",
    "build_parity",
    "build_position",
    "build_shift",
    "build_states",
    "casimir_residual_lattice",
    "commutator_suite",
    "continuum_limit_study",
    "factorization_residual",
    "fock_suite",
    "gram_exact",
    "gram_recurrence",
    "hermite_classical",
    "hermite_delta_closed",
    "hermite_delta_rec",
    "hermite_limit_table",
    "identity_operator",
    "inner_product",
    "interior_commutator_residual",
    "ladder_coefficients",
    "lattice_from_phi",
    "lattice_to_phi",
    "limits_suite",
    "max_rel_coeff_error",
    "overlap_kernel",
    "parity_conjugation_check",
    "reindex_ladder",
    "run_suite",
    "split_square",
    "state_samples_real",
    "truncation_check",
    "vacuum_norm_closed",
    "vacuum_state",
    "wallis_moment",
    "zero_operator",
]
