"""Exact-arithmetic second cohomology of deformed Schrodinger-Virasoro algebras."""

from .algebra import (
    BasisIndex,
    Element,
    Family,
    L,
    M,
    MuClass,
    Params,
    Y,
    bracket,
    bracket_elements,
    classify_mu,
    degree,
    enumerate_window,
    jacobi_defect,
)
from .cocycles import (
    Cochain2,
    KnownCocycleId,
    RegimeMismatch,
    coboundary,
    cocycle_defect,
    expected_h2,
    known_cocycle,
    known_cocycle_value,
    normalize,
    normalizing_functional,
)
from .linalg import (
    EliminationResult,
    SparseMatrix,
    SubspaceNotContained,
    eliminate,
    in_span,
    quotient_dim,
    rank,
)
from .solver import (
    H2Report,
    WindowTooSmall,
    build_constraints,
    coboundary_basis,
    degree_zero_pairs,
    degree_zero_sufficiency,
    solve_h2,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
