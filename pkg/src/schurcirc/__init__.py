"""Monotone arithmetic circuits for symmetric polynomials.

Build {+, *} circuits computing elementary symmetric, complete
homogeneous, and Schur polynomials, evaluate them exactly over big
integers or custom semirings, check them against brute-force tableau
enumeration, and serialize them to a line-oriented text format or DOT.
"""

from .builders import EBatch, HBatch, build_elementary, build_h_batch, build_h_single
from .circuit import (
    Circuit,
    CircuitBuilder,
    CircuitError,
    CircuitParseError,
    Gate,
    GateCount,
    deserialize,
)
from .oracle import (
    OracleGuardError,
    Partition,
    Tableau,
    e_eval,
    enumerate_ssyt,
    enumerate_ssyt_by_columns,
    enumerate_syt,
    h_eval,
    h_eval_through,
    partitions,
    schur_eval,
    schur_poly_map,
    ssyt_count,
)
from .poset import (
    DescentSet,
    Interval,
    MaxChain,
    column_rank,
    compute_q_star,
    enumerate_chains,
    enumerate_max_chains,
    enumerate_multichains,
    full_interval,
    multichain_gf_eval,
    poset_elements,
)
from .schur import (
    GateCountReport,
    Pruning,
    PruningDecomposition,
    ZeroPolynomialError,
    build_schur,
    decompose,
    enumerate_prunings,
    predict_bound,
    prune_tableau,
)
from .semirings import BoundedInt, EvaluationOverflow, MonomialPoly

__version__ = "0.1.0"

__all__ = [
    "BoundedInt",
    "Circuit",
    "CircuitBuilder",
    "CircuitError",
    "CircuitParseError",
    "DescentSet",
    "EBatch",
    "EvaluationOverflow",
    "Gate",
    "GateCount",
    "GateCountReport",
    "HBatch",
    "Interval",
    "MaxChain",
    "MonomialPoly",
    "OracleGuardError",
    "Partition",
    "Pruning",
    "PruningDecomposition",
    "Tableau",
    "ZeroPolynomialError",
    "build_elementary",
    "build_h_batch",
    "build_h_single",
    "build_schur",
    "column_rank",
    "compute_q_star",
    "decompose",
    "deserialize",
    "e_eval",
    "enumerate_chains",
    "enumerate_max_chains",
    "enumerate_multichains",
    "enumerate_prunings",
    "enumerate_ssyt",
    "enumerate_ssyt_by_columns",
    "enumerate_syt",
    "full_interval",
    "h_eval",
    "h_eval_through",
    "multichain_gf_eval",
    "partitions",
    "poset_elements",
    "predict_bound",
    "prune_tableau",
    "schur_eval",
    "schur_poly_map",
    "ssyt_count",
]
