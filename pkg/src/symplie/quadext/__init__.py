from .cocycle import (
    CocycleTriple,
    DerivedMaps,
    beta0,
    derived_maps,
    eps_from_matrix,
    gamma0,
    matrix_from_eps,
    xi0,
)
from .cochain import Cochain, Pairing, d_rep, d_xi, d_xi_hat, wedge
from .conditions import (
    is_balanced,
    is_cocycle,
    is_factor_system,
    is_nilpotent_cocycle,
    violated,
)
from .model import build_standard_model, lstar_block

__all__ = [
    "CocycleTriple", "DerivedMaps", "Cochain", "Pairing", "beta0", "build_standard_model",
    "d_rep", "d_xi", "d_xi_hat", "derived_maps", "eps_from_matrix", "gamma0", "is_balanced",
    "is_cocycle", "is_factor_system", "is_nilpotent_cocycle", "lstar_block",
    "matrix_from_eps", "violated", "wedge", "xi0",
]
