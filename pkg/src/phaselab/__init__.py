"""Phase retrieval, norm retrieval, tightness and scalability checks for
frames and hyperplane arrangements in R^d, exact wherever the data is
rational."""

from .frames import (
    CPReport,
    Frame,
    GuardExceeded,
    ScalabilityCertificate,
    complement_property,
    does_phase_retrieval,
    frame_operator,
    full_spark,
    is_frame,
    is_tight,
    rescale,
    scalability,
)
from .linalg import DEFAULT_EPS, EXACT, FLOAT
from .poly import BivariatePoly, IntPoly, count_real_roots, f0_dataset, sturm_chain
from .reconstruct import measure, pr_empirical, reconstruct_brute
from .search import edidin_numeric_falsify, z_random_probe
from .subspaces import (
    Arrangement,
    EdidinWitness,
    Subspace,
    arrangement_from_perps,
    edidin_small_n_witness,
    edidin_verify_witness,
    fusion_scalability,
    minimal_fullspark_necessity,
    perp,
    weighted_tight_check,
    z_membership,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BivariatePoly",
    "CPReport",
    "DEFAULT_EPS",
    "EXACT",
    "EdidinWitness",
    "FLOAT",
    "Frame",
    "GuardExceeded",
    "IntPoly",
    "ScalabilityCertificate",
    "Subspace",
    "arrangement_from_perps",
    "complement_property",
    "count_real_roots",
    "does_phase_retrieval",
    "edidin_numeric_falsify",
    "edidin_small_n_witness",
    "edidin_verify_witness",
    "f0_dataset",
    "frame_operator",
    "full_spark",
    "fusion_scalability",
    "is_frame",
    "is_tight",
    "measure",
    "minimal_fullspark_necessity",
    "perp",
    "pr_empirical",
    "reconstruct_brute",
    "rescale",
    "scalability",
    "sturm_chain",
    "weighted_tight_check",
    "z_membership",
    "z_random_probe",
    "__version__",
]
