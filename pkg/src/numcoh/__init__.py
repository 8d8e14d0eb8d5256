"""Interpolating number-coherent field states and their dynamics.

Construction and analysis of the finite-superposition states ||eta,M> that
solve (sqrt(eta) N + sqrt(1-eta) a)|psi> = sqrt(eta) M |psi>: photon
statistics, quadrature squeezing, Husimi/Wigner functions, two-photon
Jaynes-Cummings dynamics, detection-conditioned preparation schemes, and a
CLI that reproduces the nine reference figure datasets as CSV.
"""

from .errors import NumcohError, NumericalError, TruncationError, ValidationError
from .fock_space import (
    coherent_vector,
    default_dim,
    displaced_number_state,
    displacement_matrix,
    ladder_matrices,
)
from .generation import (
    DriveParams,
    KerrParams,
    drive_frame_identity_defect,
    generate_by_detection,
    kerr_output,
)
from .jcm_dynamics import (
    AtomicDensity,
    JcmParams,
    JointAtomField,
    approx_pn_quarter,
    atomic_density,
    entropy,
    evolve,
    field_entropy,
    field_qfunction,
    inversion,
    perfect_oscillation_shift,
    photon_distribution,
)
from .quasiprob import (
    PhaseGrid,
    ScalarField,
    husimi_closed,
    husimi_direct,
    rasterize,
    wigner_closed,
    wigner_oracle,
)
from .special_fns import LogValue, assoc_laguerre, laguerre, log_factorial, log_laguerre_negarg
from .states import (
    IntermediateParams,
    binomial_state,
    eigen_residual,
    intermediate_state,
    lower_k,
    photon_added_coherent,
)
from .statistics import (
    MomentReport,
    QuadratureReport,
    moments_closed,
    moments_direct,
    quadratures_closed,
    quadratures_direct,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicDensity",
    "DriveParams",
    "IntermediateParams",
    "JcmParams",
    "JointAtomField",
    "KerrParams",
    "LogValue",
    "MomentReport",
    "NumcohError",
    "NumericalError",
    "PhaseGrid",
    "QuadratureReport",
    "ScalarField",
    "TruncationError",
    "ValidationError",
    "approx_pn_quarter",
    "assoc_laguerre",
    "atomic_density",
    "binomial_state",
    "coherent_vector",
    "default_dim",
    "displaced_number_state",
    "displacement_matrix",
    "drive_frame_identity_defect",
    "eigen_residual",
    "entropy",
    "evolve",
    "field_entropy",
    "field_qfunction",
    "generate_by_detection",
    "husimi_closed",
    "husimi_direct",
    "intermediate_state",
    "inversion",
    "kerr_output",
    "ladder_matrices",
    "laguerre",
    "log_factorial",
    "log_laguerre_negarg",
    "lower_k",
    "moments_closed",
    "moments_direct",
    "perfect_oscillation_shift",
    "photon_added_coherent",
    "photon_distribution",
    "quadratures_closed",
    "quadratures_direct",
    "rasterize",
    "wigner_closed",
    "wigner_oracle",
]
