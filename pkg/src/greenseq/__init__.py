"""Maximal green sequences of cluster quivers, with multiple-edge reductions."""

from .core import (
    ExtendedState,
    Quiver,
    QuiverError,
    SignCoherenceError,
    euler_form,
    euler_matrix,
    exchange_matrix,
    format_quiver,
    framed_seed,
    green_vertices,
    is_acyclic,
    mutate,
    mutate_quiver,
    parse_quiver,
)
from .mgs import (
    EnumerationResult,
    MGSTrace,
    NotGreen,
    NotMaximal,
    apply_sequence,
    count_mgs,
    enumerate_mgs,
    mgs_equivalent,
    shuffle_count,
)
from .reduction import (
    MultiEdge,
    is_me_equivalent,
    is_q_me_free_cvector,
    is_q_me_free_trace,
    me_free_version,
    multiple_edges,
    skeleton,
    support,
)
from .theorems import (
    KPartition,
    NonAcyclic,
    NotPartible,
    Verdict,
    VerificationReport,
    check_real_schur,
    cut,
    k_partitions,
    predicted_mgs,
    replay_cyclic_double,
    t3_condition_holds,
    verify_t1,
    verify_t2,
    verify_t3,
)

__version__ = "0.1.0"
