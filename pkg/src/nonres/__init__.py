"""Exact nonresonance certificates for rank-one local systems on arrangement
complements, with an independent twisted-cohomology oracle for complexified
real line arrangements."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    IntersectionLattice,
    closure,
    enumerate_lattice,
    euler_characteristic,
    irreducible_decomposition,
    is_irreducible,
    localization,
    poincare_polynomial,
    restriction,
)
from .certificates import (
    DeltaCertificate,
    IncidenceMatrix,
    LambdaWitness,
    decide_constant_combination,
    delta_for_hyperplane,
    incidence_matrix,
    verify_delta,
    verify_lambda,
)
from .criteria import (
    Bipartition,
    CriterionReport,
    CriterionResult,
    VanishingConclusion,
    check_bipartition_general,
    check_bipartition_lines,
    check_cdo,
    check_irreducible_shelter,
    check_lambda_criterion,
    check_unique_resonant_point,
    run_all,
    search_bipartition_lines,
)
from .constructions import decone, generic_section, lift_bipartition
from .cyclo import CycloElement, CycloField, cyclo_rank, cyclotomic_polynomial
from .linalg import RatMatrix, nullspace, rat_rank
from .localsys import MonodromyMap, monodromy_of_flat, resonant_flats, resonant_points
from .oracle import CohomologyDims, presentation, twisted_cohomology, wiring_diagram

__version__ = "0.1.0"
