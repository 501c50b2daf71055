"""Regenerate the bundled catalog files: python -m symplie.catalog.build"""
from __future__ import annotations

from pathlib import Path

from .. import algebras
from .entries import Dim4Entry
from .families import dim6_entries
from .store import dump


def dim4_entries():
    return [
        Dim4Entry("R4", algebras.r4(), {"center_dim": 4, "nilpotency_class": 1}),
        Dim4Entry("n4", algebras.n4(), {"center_dim": 1, "nilpotency_class": 3}),
        Dim4Entry("h3+R", algebras.h3r(), {"center_dim": 2, "nilpotency_class": 2}),
    ]


def main():
    data = Path(__file__).parent / "data"
    dump(dim4_entries(), data / "dim4.jsonl")
    dump(dim6_entries(), data / "dim6.jsonl")


if __name__ == "__main__":
    main()
