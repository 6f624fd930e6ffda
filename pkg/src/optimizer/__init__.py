# Optimizer package
from .simplex import euclidean_proj_simplex, project_shifted_simplex
from .solver import (
    INFIMUM_NOT_ATTAINED,
    InitKind,
    SolverConfig,
    SolveResult,
    initialize,
    minimize_psi,
    minimize_multistart,
)

__all__ = [
    "euclidean_proj_simplex",
    "project_shifted_simplex",
    "INFIMUM_NOT_ATTAINED",
    "InitKind",
    "SolverConfig",
    "SolveResult",
    "initialize",
    "minimize_psi",
    "minimize_multistart",
]
