"""Multiplexed streaming erasure codes for two deadline classes.

An urgent stream (deadline T_u) and a less urgent stream (deadline T_v,
T_v > T_u + B) are jointly encoded into one packet flow that survives either
one burst erasure of length <= B or up to N arbitrary erasures per sliding
window of length W.  The package provides the code constructions, a generic
deadline-aware linear decoder, exhaustive achievability verification, rate
analysis against the separate-encoding baseline, and a streaming simulator.
"""

__version__ = "0.1.0"

from .galois import FieldElement, FieldSpec, ff_add, ff_inv, ff_mul, in_base_field
from .linalg import Matrix, UnitVector, is_mds, rank, solve_for_unit
from .channel import (
    ChannelModel,
    ErasurePattern,
    apply_erasure,
    enumerate_admissible_patterns,
    is_admissible,
    random_erasure_sequence,
)
from .singlecode import BlockCode, build_single_code, verify_single_structure
from .muxcode import (
    MuxCode,
    MuxParams,
    build_mux_code,
    check_merge_bounds,
    merge_codewords,
    select_parameters,
)
from .decoder import DecodeReport, decode_message, earliest_decode_time, verify_achievable
from .analysis import (
    RateReport,
    capacity,
    case_m_small_bound,
    gain_table,
    mux_sum_rate,
    rate_report,
    separate_sum_rate,
)
from .stream import simulate_stream, stream_encode

__all__ = [
    "BlockCode",
    "ChannelModel",
    "DecodeReport",
    "ErasurePattern",
    "FieldElement",
    "FieldSpec",
    "Matrix",
    "MuxCode",
    "MuxParams",
    "RateReport",
    "UnitVector",
    "apply_erasure",
    "build_mux_code",
    "build_single_code",
    "capacity",
    "case_m_small_bound",
    "check_merge_bounds",
    "decode_message",
    "earliest_decode_time",
    "enumerate_admissible_patterns",
    "ff_add",
    "ff_inv",
    "ff_mul",
    "gain_table",
    "in_base_field",
    "is_admissible",
    "is_mds",
    "merge_codewords",
    "mux_sum_rate",
    "random_erasure_sequence",
    "rank",
    "rate_report",
    "select_parameters",
    "separate_sum_rate",
    "simulate_stream",
    "solve_for_unit",
    "stream_encode",
    "verify_achievable",
    "verify_single_structure",
]
