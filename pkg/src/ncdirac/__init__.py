"""Deformed space-time algebra toolkit: exact structure constants and their
stability checks, a differential-operator realization, normal ordering in
the enveloping algebra with a formal inverse, Majorana-representation
gamma matrices, extended Dirac dispersion branches with Dirac/Majorana
classification, and the coupled-branch seesaw spectrum."""

from .scalars import (
    ExactScalar,
    ParamPoly,
    SubstitutionError,
    TruncationOrderError,
    UnknownSymbolError,
    poly,
    sym,
)
from .matrices import ExactMatrix
from .lie_algebra import (
    DEFORMED_BASIS,
    StructureConstants,
    build_deformed_algebra,
    build_orthogonal_algebra,
    contract,
    jacobi_residual,
    solve_isomorphism_scalings,
    verify_linear_isomorphism,
)
from .weyl import WeylOperator, build_rep, verify_rep_closure
from .enveloping import (
    Derivation,
    NCExpression,
    PlaneWaveExponent,
    commutator,
    anticommutator,
    lemma_matrix_check,
    normal_form,
    verify_plane_wave_relations,
)
from .clifford import (
    GammaRep,
    SpinorMatrix,
    VerificationError,
    boost_matrix,
    build_majorana_rep,
    reality_class,
    vector_boost,
    verify_clifford,
)
from .modes import (
    ModeProblem,
    SpinorSolution,
    boost_solution,
    dirac_matrix,
    dispersion_roots,
    reference_solutions,
    residual,
)
from .seesaw import (
    CouplingConfig,
    ModeSpectrum,
    RootFindingError,
    coupled_matrix,
    exact_mode_spectrum,
    leading_order_reduction,
    light_mass_leading,
    verify_effective_equation,
)

__version__ = "0.1.0"

__all__ = [
    "ExactScalar",
    "ParamPoly",
    "ExactMatrix",
    "SubstitutionError",
    "TruncationOrderError",
    "UnknownSymbolError",
    "VerificationError",
    "RootFindingError",
    "poly",
    "sym",
    "DEFORMED_BASIS",
    "StructureConstants",
    "build_deformed_algebra",
    "build_orthogonal_algebra",
    "contract",
    "jacobi_residual",
    "solve_isomorphism_scalings",
    "verify_linear_isomorphism",
    "WeylOperator",
    "build_rep",
    "verify_rep_closure",
    "NCExpression",
    "Derivation",
    "PlaneWaveExponent",
    "commutator",
    "anticommutator",
    "normal_form",
    "verify_plane_wave_relations",
    "lemma_matrix_check",
    "GammaRep",
    "SpinorMatrix",
    "build_majorana_rep",
    "verify_clifford",
    "boost_matrix",
    "vector_boost",
    "reality_class",
    "ModeProblem",
    "SpinorSolution",
    "dirac_matrix",
    "dispersion_roots",
    "reference_solutions",
    "boost_solution",
    "residual",
    "CouplingConfig",
    "ModeSpectrum",
    "coupled_matrix",
    "leading_order_reduction",
    "light_mass_leading",
    "verify_effective_equation",
    "exact_mode_spectrum",
    "__version__",
]
