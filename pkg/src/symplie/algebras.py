"""The small symplectic Lie algebras that appear as the middle term a."""
from __future__ import annotations

from .lie import LieAlgebra
from .symplectic import SymplecticLieAlgebra


def zero() -> SymplecticLieAlgebra:
    return SymplecticLieAlgebra.zero()


def abelian(n: int, pairs=None) -> SymplecticLieAlgebra:
    """Q^n with omega = a^1^a^2 + a^3^a^4 + ... unless pairs is given."""
    if pairs is None:
        pairs = {(2 * k, 2 * k + 1): 1 for k in range(n // 2)}
    return SymplecticLieAlgebra.from_form(LieAlgebra.abelian(n), pairs)


def r2() -> SymplecticLieAlgebra:
    return abelian(2)


def r4() -> SymplecticLieAlgebra:
    """Q^4 with omega = a^1^a^2 + a^3^a^4."""
    return abelian(4)


def h3r() -> SymplecticLieAlgebra:
    """h_3 + Q: [a1, a2] = a3, omega = a^1^a^4 + a^2^a^3."""
    g = LieAlgebra.from_brackets(4, {(0, 1): {2: 1}})
    return SymplecticLieAlgebra.from_form(g, {(0, 3): 1, (1, 2): 1})


def n4() -> SymplecticLieAlgebra:
    """Filiform n_4: [a4, a1] = a2, [a4, a2] = a3, omega = a^1^a^2 + a^3^a^4."""
    g = LieAlgebra.from_brackets(4, {(3, 0): {1: 1}, (3, 1): {2: 1}})
    return SymplecticLieAlgebra.from_form(g, {(0, 1): 1, (2, 3): 1})


def h3r_wrong_form() -> SymplecticLieAlgebra:
    """h_3 + Q with a^1^a^2 + a^3^a^4, which is not closed."""
    g = LieAlgebra.from_brackets(4, {(0, 1): {2: 1}})
    return SymplecticLieAlgebra.from_form(g, {(0, 1): 1, (2, 3): 1})
