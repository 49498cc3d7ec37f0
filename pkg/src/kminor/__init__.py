"""kminor: extract large complete-graph minors with verifiable certificates."""

from .connectivity import (
    SeparatorResult,
    extract_connected_core,
    find_small_separator,
    is_k_connected,
    max_vertex_disjoint_paths,
)
from .errors import (
    CertificateFormatError,
    CoreExtractionError,
    DensityTooLowError,
    EdgeListFormatError,
    GuaranteeUnmetError,
    InternalInvariantError,
    JoinOverflowError,
    KMinorError,
    LemmaPreconditionError,
    PipelineError,
    SamplerFailedError,
)
from .estimator import CompleteMinorExtractor
from .fileio import (
    emit_certificate,
    emit_edge_list,
    gnp_generate,
    parse_certificate,
    parse_edge_list,
)
from .graph import (
    ContractionTrace,
    Graph,
    contract_edge,
    delete_edge,
    delete_vertex,
    validate_trace,
)
from .pipeline import (
    MinorCertificate,
    PipelineConfig,
    expand_branch_sets,
    extract_dense_neighborhood,
    guarantee_iteration_target,
    pick_min_degree_vertex,
    run_pipeline,
)
from .reduction import Move, ReducedMinor, applicable_moves, reduce_minor
from .sampling import (
    DominatorSet,
    SamplerParams,
    check_avoidance,
    check_domination,
    draw_sample,
    join_components,
    sample_dominator,
)
from .verification import (
    VerificationReport,
    Violation,
    hadwiger_number,
    has_complete_minor,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "CompleteMinorExtractor",
    "ContractionTrace",
    "DominatorSet",
    "Graph",
    "MinorCertificate",
    "Move",
    "PipelineConfig",
    "ReducedMinor",
    "SamplerParams",
    "SeparatorResult",
    "VerificationReport",
    "Violation",
    "applicable_moves",
    "check_avoidance",
    "check_domination",
    "contract_edge",
    "delete_edge",
    "delete_vertex",
    "draw_sample",
    "emit_certificate",
    "emit_edge_list",
    "expand_branch_sets",
    "extract_connected_core",
    "extract_dense_neighborhood",
    "find_small_separator",
    "gnp_generate",
    "guarantee_iteration_target",
    "hadwiger_number",
    "has_complete_minor",
    "is_k_connected",
    "join_components",
    "max_vertex_disjoint_paths",
    "parse_certificate",
    "parse_edge_list",
    "pick_min_degree_vertex",
    "reduce_minor",
    "run_pipeline",
    "sample_dominator",
    "validate_trace",
    "verify_certificate",
    # errors
    "KMinorError",
    "PipelineError",
    "DensityTooLowError",
    "CoreExtractionError",
    "LemmaPreconditionError",
    "SamplerFailedError",
    "JoinOverflowError",
    "GuaranteeUnmetError",
    "InternalInvariantError",
    "EdgeListFormatError",
    "CertificateFormatError",
]
