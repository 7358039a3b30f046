"""cubictrace: exact cubic trace/norm counts, torus cosets, and p-adic branches."""

from .algebra import (
    FpCubicAlgebra,
    PrecisionError,
    PrimeModulus,
    RankDSplitAlgebra,
    ZpCubicAlgebra,
    canonical_algebra,
)
from .branch import BranchContext, brute_force_zero_oracle, certified_zero_set
from .counts import CountQuery, brute_force_count, count
from .torus import TorusGroup

__all__ = [
    "BranchContext",
    "CountQuery",
    "FpCubicAlgebra",
    "PrecisionError",
    "PrimeModulus",
    "RankDSplitAlgebra",
    "TorusGroup",
    "ZpCubicAlgebra",
    "brute_force_count",
    "brute_force_zero_oracle",
    "canonical_algebra",
    "certified_zero_set",
    "count",
]

__version__ = "0.1.0"
