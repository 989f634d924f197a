"""One-dimensional liquid drop model: exact solutions and numerical verification."""

from .model import (
    BoundaryCondition,
    DomainError,
    EnergyBreakdown,
    IntervalSet,
    ModelParams,
    OverlapError,
    Segment,
    Torus,
    complement,
    completed_square_terms,
    cubic_sum_identity_residual,
    energy,
    interval_set_from_json,
    interval_set_to_json,
    make_interval_set,
    moments,
    perimeter,
    self_interaction,
    to_torus,
    translate,
)
from .exact import (
    AsymptoticData,
    ExcessResult,
    FitError,
    GroundState,
    MassError,
    MinimizerFamily,
    asymptotics,
    canonical_minimizer,
    energy_of_N,
    excess_ground_state,
    f_profile,
    ground_energy,
    ground_state,
    limit_families,
    optimal_N,
    remainder,
    tie_length,
)
from .oracle import (
    InfeasibleError,
    QuadratureSpec,
    SearchSpec,
    ToleranceError,
    cell_exact_energy,
    minimize_fixed_N,
    minimize_global,
    quad_energy,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticData",
    "BoundaryCondition",
    "DomainError",
    "EnergyBreakdown",
    "ExcessResult",
    "FitError",
    "GroundState",
    "InfeasibleError",
    "IntervalSet",
    "MassError",
    "MinimizerFamily",
    "ModelParams",
    "OverlapError",
    "QuadratureSpec",
    "SearchSpec",
    "Segment",
    "ToleranceError",
    "Torus",
    "asymptotics",
    "canonical_minimizer",
    "cell_exact_energy",
    "complement",
    "completed_square_terms",
    "cubic_sum_identity_residual",
    "energy",
    "energy_of_N",
    "excess_ground_state",
    "f_profile",
    "ground_energy",
    "ground_state",
    "interval_set_from_json",
    "interval_set_to_json",
    "limit_families",
    "make_interval_set",
    "minimize_fixed_N",
    "minimize_global",
    "moments",
    "optimal_N",
    "perimeter",
    "quad_energy",
    "remainder",
    "self_interaction",
    "tie_length",
    "to_torus",
    "translate",
]
