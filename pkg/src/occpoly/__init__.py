"""Exact-arithmetic engine for spin-resolved ensemble occupation-number polytopes.

Given a particle number, a total spin, an orbital count and a nonincreasing
weight vector, the package constructs the convex polytope of admissible
natural-occupation spectra in both vertex and minimal inequality form,
answers membership and linear-minimization queries over it exactly, and
cross-checks everything against closed-form constraint families and
brute-force enumeration.
"""

from .affine import AffineForm
from .core import (
    ExactRational,
    QuantumSystem,
    Spectrum,
    WeightVector,
    majorizes,
    rational,
    sort_descending,
    validate_system,
)
from .errors import (
    ApplicabilityError,
    DegenerateInputError,
    DepthError,
    LengthError,
    NoConvergenceError,
    NormalizationError,
    NotHermitianError,
    NotPointedError,
    OccPolyError,
    ParityError,
    RangeError,
    StabilityError,
    TieError,
    TraceError,
)
from .geometry import (
    HRep,
    LinearConstraint,
    Polytope,
    VRep,
    build_polytope,
    contraction_check,
    density_domain_check,
    lp_solve,
    member_hrep,
    member_majorization,
    minimize_linear,
    remove_redundant,
)
from .lineups import GeneratingVertex, Lineup, enumerate_lineups, generating_vertex, generating_vertices
from .oracle import audit_hrep, gok_energy_direct, symmetric_eigenvalues
from .poset import (
    Configuration,
    ConfigurationPoset,
    build_poset,
    enumerate_configurations,
    excitations,
    highest_weight_config,
    hilbert_dim,
    multiplicity,
    stability_check,
)

__version__ = "0.1.0"

__all__ = [
    "AffineForm",
    "ExactRational",
    "QuantumSystem",
    "Spectrum",
    "WeightVector",
    "majorizes",
    "rational",
    "sort_descending",
    "validate_system",
    "Configuration",
    "ConfigurationPoset",
    "build_poset",
    "enumerate_configurations",
    "excitations",
    "highest_weight_config",
    "hilbert_dim",
    "multiplicity",
    "stability_check",
    "GeneratingVertex",
    "Lineup",
    "enumerate_lineups",
    "generating_vertex",
    "generating_vertices",
    "HRep",
    "VRep",
    "LinearConstraint",
    "Polytope",
    "build_polytope",
    "contraction_check",
    "density_domain_check",
    "lp_solve",
    "member_hrep",
    "member_majorization",
    "minimize_linear",
    "remove_redundant",
    "audit_hrep",
    "gok_energy_direct",
    "symmetric_eigenvalues",
    "OccPolyError",
    "ParityError",
    "RangeError",
    "LengthError",
    "DepthError",
    "StabilityError",
    "ApplicabilityError",
    "NormalizationError",
    "NotHermitianError",
    "TraceError",
    "NoConvergenceError",
    "NotPointedError",
    "DegenerateInputError",
    "TieError",
]
