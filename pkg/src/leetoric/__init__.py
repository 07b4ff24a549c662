"""Toric quantum codes from perfect Lee-sphere lattice codes.

The package certifies, by exact computation, the chain of constructions
behind a family of burst-error-correcting toric quantum codes: nested
integer lattices, perfect radius-1 Lee-sphere codes and their tilings,
stabilizer supports on periodic hypercubic complexes, a burst interleaver,
and the rate/gain tables of the resulting codes.
"""

from .instances import CERTIFIED, certified_code, code_generators, scaling_matrix
from .interleave import (
    BurstPattern,
    BurstSweepSummary,
    CorrectionVerdict,
    InterleaverMap,
    LogicalIndex,
    PhysicalSlot,
    all_burst_translates,
    build_interleaver,
    code_block,
    deinterleave,
    enumerate_bursts,
    interleaved_params,
    verify_burst_correction,
)
from .lattices import (
    ChainReport,
    IntMatrix,
    contains,
    coset_count,
    determinant,
    hermite_decomposition,
    hermite_form,
    solve_left,
    verify_chain,
)
from .lee import (
    DecodeResult,
    LeeCode,
    LeeSphere,
    decode_nearest,
    enumerate_codewords,
    lee_sphere,
    mannheim_weight,
    minimum_distance,
    symmetric_residue,
    tiling_check,
)
from .report import (
    RateGain,
    TableRow,
    VerificationCertificate,
    emit_tables,
    parse_tables,
    rate_gain,
    table_rows,
)
from .toric import (
    Cell,
    CodeParams,
    StabilizerSupport,
    boundary_support,
    commutation_check,
    enumerate_faces,
    face_from_index,
    face_index,
    face_owner,
    literature_params,
    new_code_params,
    star_support,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFIED",
    "BurstPattern",
    "BurstSweepSummary",
    "Cell",
    "ChainReport",
    "CodeParams",
    "CorrectionVerdict",
    "DecodeResult",
    "IntMatrix",
    "InterleaverMap",
    "LeeCode",
    "LeeSphere",
    "LogicalIndex",
    "PhysicalSlot",
    "RateGain",
    "StabilizerSupport",
    "TableRow",
    "VerificationCertificate",
    "all_burst_translates",
    "boundary_support",
    "build_interleaver",
    "certified_code",
    "code_block",
    "code_generators",
    "commutation_check",
    "contains",
    "coset_count",
    "decode_nearest",
    "deinterleave",
    "determinant",
    "emit_tables",
    "enumerate_bursts",
    "enumerate_codewords",
    "enumerate_faces",
    "face_from_index",
    "face_index",
    "face_owner",
    "hermite_decomposition",
    "hermite_form",
    "interleaved_params",
    "lee_sphere",
    "literature_params",
    "mannheim_weight",
    "minimum_distance",
    "new_code_params",
    "parse_tables",
    "rate_gain",
    "scaling_matrix",
    "solve_left",
    "star_support",
    "symmetric_residue",
    "table_rows",
    "tiling_check",
    "verify_burst_correction",
    "verify_chain",
]
