"""Gaussian-state toolkit for parametric down-conversion with a pump built
from 2N symmetrically tilted plane waves.

The package models the (2N+1)-mode output state of such a crystal, certifies
genuine tripartite entanglement for the single-pair case, and demonstrates
how the multimode entanglement concentrates onto two modes with a sqrt(N)
gain in logarithmic negativity.
"""

from .entanglement import (
    Bipartition,
    NegativityReport,
    WitnessResult,
    localization_transform,
    localize_and_report,
    log_negativity,
    threshold_coupling,
    tripartite_witness,
)
from .ode import (
    ComplexModeMap,
    GridComparison,
    OdeSettings,
    bogoliubov_defect,
    convergence_probe,
    equivalence_grid,
    integrate,
    to_quadrature_propagator,
)
from .pdc import (
    PdcConfig,
    PropagatorFunctions,
    build_propagator,
    is_bisymmetric,
    output_covariance,
    propagator_functions,
    squeezing_parameter,
)
from .symplectic import (
    CovarianceValidation,
    ModeLayout,
    congruence,
    direct_sum,
    is_symplectic,
    mode_map_to_quadrature,
    partial_transpose,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezed_cov,
    validate_covariance,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "ComplexModeMap",
    "CovarianceValidation",
    "GridComparison",
    "ModeLayout",
    "NegativityReport",
    "OdeSettings",
    "PdcConfig",
    "PropagatorFunctions",
    "WitnessResult",
    "bogoliubov_defect",
    "build_propagator",
    "congruence",
    "convergence_probe",
    "direct_sum",
    "equivalence_grid",
    "integrate",
    "is_bisymmetric",
    "is_symplectic",
    "localization_transform",
    "localize_and_report",
    "log_negativity",
    "mode_map_to_quadrature",
    "output_covariance",
    "partial_transpose",
    "propagator_functions",
    "squeezing_parameter",
    "symplectic_eigenvalues",
    "symplectic_form",
    "threshold_coupling",
    "to_quadrature_propagator",
    "tripartite_witness",
    "two_mode_squeezed_cov",
    "validate_covariance",
]
