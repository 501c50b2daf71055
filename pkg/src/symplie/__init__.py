"""Exact calculus of quadratic extensions of symplectic Lie algebras."""
from .exactlin import Subspace, intersect, kernel, perp, rank, solve
from .group_action import (
    PairIso,
    TauShift,
    act_tau,
    are_equivalent,
    equivalence_iso,
    pullback,
)
from .invariants import eps_orbit_key, invariant_kappa7, invariant_l, invariant_sign_xi2
from .lie import LieAlgebra, LinearMap, center, check_iso, is_nilpotent, quotient, validate_lie
from .quadext import (
    CocycleTriple,
    build_standard_model,
    is_balanced,
    is_cocycle,
    is_nilpotent_cocycle,
)
from .symplectic import (
    SymplecticLieAlgebra,
    canonical_isotropic_ideal,
    extract_cocycle,
    reduce,
    validate_symplectic,
)

__all__ = [
    "CocycleTriple", "LieAlgebra", "LinearMap", "PairIso", "Subspace", "SymplecticLieAlgebra",
    "TauShift", "act_tau", "are_equivalent", "build_standard_model", "canonical_isotropic_ideal",
    "center", "check_iso", "eps_orbit_key", "equivalence_iso", "extract_cocycle", "intersect",
    "invariant_kappa7", "invariant_l", "invariant_sign_xi2", "is_balanced", "is_cocycle",
    "is_nilpotent", "is_nilpotent_cocycle", "kernel", "perp", "pullback", "quotient", "rank",
    "reduce", "solve", "validate_lie", "validate_symplectic",
]
