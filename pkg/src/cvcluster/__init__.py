"""Simulation of measurement-based Gaussian logic gates on a four-mode
linear optical cluster state.

The package tracks every quadrature as an exact linear form in independent
Gaussian seeds (:mod:`cvcluster.algebra`), builds the cluster and certifies
its entanglement (:mod:`cvcluster.cluster`), applies the displacement,
squeezing and controlled-X gates (:mod:`cvcluster.gates`), evaluates Wigner
functions and the reference datasets (:mod:`cvcluster.analysis`), and
cross-checks everything with Monte-Carlo sampling and covariance-matrix
propagation (:mod:`cvcluster.oracle`).
"""

from .algebra import (
    Axis,
    ModePair,
    PRUNE_TOL,
    QuadExpr,
    SeedKind,
    SeedRegistry,
    SeedVar,
    beamsplitter,
    rotate_quadrature,
    squeezed_variance,
)
from .analysis import (
    CurveDataset,
    GaussianMoments,
    fig3_dataset,
    fig4_dataset,
    fig5_dataset,
    fig6_dataset,
    fig8_dataset,
    mode_moments,
    wigner,
)
from .cluster import (
    CLUSTER_NETWORK,
    INSEPARABILITY_BOUND,
    SLOT_MODES,
    SOURCE_KINDS,
    BeamsplitterSpec,
    ClusterState,
    InseparabilityReport,
    build_cluster,
    inseparability_check,
    inseparability_threshold,
    nullifier_slot_vectors,
    nullifier_variances,
    nullifiers,
)
from .gates import (
    CRITERION_SIGMAS,
    CxParams,
    DisplacementParams,
    GateResult,
    ModeStats,
    SqueezerParams,
    controlled_x_gate,
    cx_output_moments,
    displacement_gate,
    displacement_output_variance,
    fidelity_from_variances,
    identity_fidelity,
    min_distinguishable_displacement,
    optimal_detection_angle,
    optimal_displacement_variance,
    optimal_gain,
    rotated_output_variance,
    squeezer_gate,
    squeezing_threshold,
)
from .io import dataset_to_csv, dataset_to_json, format_float, write_dataset
from .oracle import (
    CertifyResult,
    RngConfig,
    SampleEstimate,
    beamsplitter_symplectic,
    certify,
    covariance_propagate,
    sample_expr,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "ModePair",
    "PRUNE_TOL",
    "QuadExpr",
    "SeedKind",
    "SeedRegistry",
    "SeedVar",
    "beamsplitter",
    "rotate_quadrature",
    "squeezed_variance",
    "CurveDataset",
    "GaussianMoments",
    "fig3_dataset",
    "fig4_dataset",
    "fig5_dataset",
    "fig6_dataset",
    "fig8_dataset",
    "mode_moments",
    "wigner",
    "CLUSTER_NETWORK",
    "INSEPARABILITY_BOUND",
    "SLOT_MODES",
    "SOURCE_KINDS",
    "BeamsplitterSpec",
    "ClusterState",
    "InseparabilityReport",
    "build_cluster",
    "inseparability_check",
    "inseparability_threshold",
    "nullifier_slot_vectors",
    "nullifier_variances",
    "nullifiers",
    "CRITERION_SIGMAS",
    "CxParams",
    "DisplacementParams",
    "GateResult",
    "ModeStats",
    "SqueezerParams",
    "controlled_x_gate",
    "cx_output_moments",
    "displacement_gate",
    "displacement_output_variance",
    "fidelity_from_variances",
    "identity_fidelity",
    "min_distinguishable_displacement",
    "optimal_detection_angle",
    "optimal_displacement_variance",
    "optimal_gain",
    "rotated_output_variance",
    "squeezer_gate",
    "squeezing_threshold",
    "dataset_to_csv",
    "dataset_to_json",
    "format_float",
    "write_dataset",
    "CertifyResult",
    "RngConfig",
    "SampleEstimate",
    "beamsplitter_symplectic",
    "certify",
    "covariance_propagate",
    "sample_expr",
]
