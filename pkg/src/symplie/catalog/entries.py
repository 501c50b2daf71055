from __future__ import annotations

from dataclasses import dataclass, field

from ..quadext.cocycle import CocycleTriple
from ..symplectic import SymplecticLieAlgebra


@dataclass(frozen=True)
class Expected:
    balanced: bool
    nilpotent: bool
    model_dim: int
    invariants: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str
    parameters: dict
    cocycle: CocycleTriple
    expected: Expected
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Dim4Entry:
    id: str
    algebra: SymplecticLieAlgebra
    expected: dict = field(default_factory=dict)
