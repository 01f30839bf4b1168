"""Exact signature computations for Lefschetz fibrations over the disk."""

from .cover import CorrectionTerm, correction_sigma, cover_signature
from .engine import (
    SignatureTrace,
    StepRecord,
    homologically_trivial_split_check,
    local_sigma,
    local_sigma_via_maslov,
    shortcut_dual_preserved,
    signature,
)
from .errors import InputError, InternalConsistencyError, LefsigError
from .maslov import WallSpace, fiber_sum_defect, maslov_index, meyer_cocycle, wall_space
from .positive import (
    BLOCK_VECTORS,
    PositiveFamilySpec,
    generate,
    signature_zero_certificate,
)
from .ratlinalg import (
    Matrix,
    SolveResult,
    matrix_power,
    signature_symmetric,
    solve_linear,
)
from .symplectic import (
    Lagrangian,
    MonodromyWord,
    Surface,
    SymplecticSpace,
    VanishingCycle,
    direct_sum_lagrangian,
    direct_sum_space,
    effective_dimension,
    graph_lagrangians,
    is_symplectic,
    map_lagrangian,
    transvection,
    word,
    word_action,
)

__all__ = [
    "BLOCK_VECTORS",
    "CorrectionTerm",
    "InputError",
    "InternalConsistencyError",
    "Lagrangian",
    "LefsigError",
    "Matrix",
    "MonodromyWord",
    "PositiveFamilySpec",
    "SignatureTrace",
    "SolveResult",
    "StepRecord",
    "Surface",
    "SymplecticSpace",
    "VanishingCycle",
    "WallSpace",
    "correction_sigma",
    "cover_signature",
    "direct_sum_lagrangian",
    "direct_sum_space",
    "effective_dimension",
    "fiber_sum_defect",
    "generate",
    "graph_lagrangians",
    "homologically_trivial_split_check",
    "is_symplectic",
    "local_sigma",
    "local_sigma_via_maslov",
    "map_lagrangian",
    "maslov_index",
    "matrix_power",
    "meyer_cocycle",
    "shortcut_dual_preserved",
    "signature",
    "signature_symmetric",
    "signature_zero_certificate",
    "solve_linear",
    "transvection",
    "wall_space",
    "word",
    "word_action",
]
