"""Analytical lower and upper bounds on the entanglement of formation."""

from .concurrence import Component, ConcurrenceBounds, concurrence_bounds, concurrence_lower, concurrence_upper
from .densmat import (
    BipartiteDensityMatrix,
    DimensionError,
    InvalidStateError,
    NumericalFailure,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose_a,
    pure_concurrence,
    pure_state,
    purity,
    realign,
    schmidt_coefficients,
    trace_norm,
    von_neumann_entropy,
)
from .envelope import (
    DomainError,
    EnvelopeTable,
    alpha_beta,
    big_x,
    big_y,
    build_envelopes,
    epsilon_m3_closed,
    epsilon_of,
    eta_m3_closed,
    eta_of,
    f_value,
    h,
    segment_rules,
)
from .eof import (
    EofBoundsReport,
    eof_bounds,
    eof_bounds_from_concurrence,
    pure_eof,
    two_qubit_eof_exact,
    wootters_concurrence,
)
from .roof import RoofEstimate, convex_roof_estimate, random_density_matrix, random_pure_state
from .states import example2_functionals, example2_state, pure_from_schmidt, werner, werner_concurrence_hint

__version__ = "0.1.0"
