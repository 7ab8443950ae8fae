"""Entanglement detection for bipartite density matrices via the
generalized-reduction trace-norm test and its classical special cases."""

from .criteria import (
    AB_TEST_GRID,
    TOL_VERDICT,
    BoundPair,
    CriterionVerdict,
    ReductionParams,
    bound_for,
    evaluate,
    evaluate_all_Y,
    generalized_reduction_map,
    h_factor,
    ppt_check,
    realignment_check,
    reduction_check,
)
from .errors import (
    DimensionMismatch,
    InvariantViolation,
    NoSignChange,
    NotHermitian,
    NotUnitary,
    ParamOutOfRange,
    ParseError,
    SepscopeError,
)
from .gptops import (
    GptOpSet,
    KronTermList,
    all_subsets,
    col_transposition,
    double_transposition,
    gpt_transform,
    kron_decompose,
    partial_transpose,
    realign,
    row_transposition,
)
from .matlin import (
    DensityState,
    SubsystemDims,
    as_cmatrix,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    svd,
    trace_norm,
    vec,
)
from .states import (
    LabeledState,
    horodecki_3x3,
    load_state,
    local_unitary_conjugate,
    random_density,
    random_separable,
    random_unitary,
    save_state,
    swap_operator,
    werner,
)
from .sweep import GridSpec, SweepRecord, axis_points, emit, find_threshold, load_records, run_sweep

__all__ = [
    "AB_TEST_GRID",
    "TOL_VERDICT",
    "BoundPair",
    "CriterionVerdict",
    "DensityState",
    "DimensionMismatch",
    "GptOpSet",
    "GridSpec",
    "InvariantViolation",
    "KronTermList",
    "LabeledState",
    "NoSignChange",
    "NotHermitian",
    "NotUnitary",
    "ParamOutOfRange",
    "ParseError",
    "ReductionParams",
    "SepscopeError",
    "SubsystemDims",
    "SweepRecord",
    "all_subsets",
    "as_cmatrix",
    "axis_points",
    "bound_for",
    "col_transposition",
    "double_transposition",
    "emit",
    "evaluate",
    "evaluate_all_Y",
    "find_threshold",
    "generalized_reduction_map",
    "gpt_transform",
    "h_factor",
    "hermitian_eigenvalues",
    "horodecki_3x3",
    "kron",
    "kron_decompose",
    "load_records",
    "load_state",
    "local_unitary_conjugate",
    "partial_trace",
    "partial_transpose",
    "ppt_check",
    "random_density",
    "random_separable",
    "random_unitary",
    "realign",
    "realignment_check",
    "reduction_check",
    "row_transposition",
    "run_sweep",
    "save_state",
    "svd",
    "swap_operator",
    "trace_norm",
    "vec",
    "werner",
]
