"""The deterministic small-group catalog driving the verification suites.

Entries are group-spec strings with their (precomputed) orders, so
filtering by a maximum order never builds groups beyond the bound. The
list order is fixed: cyclic, dihedral, symmetric, alternating, Q8,
elementary abelian, the power-action semidirect family, selected products,
then holomorphs of prime cyclic groups.
"""

from __future__ import annotations

from functools import reduce
from math import factorial

from .autgrp import AUT_CAP
from .group import MAX_ORDER, FiniteGroup
from .spec_lang import build

_CYCLIC = [(f"C{n}", n) for n in range(2, 33)]
_DIHEDRAL = [(f"D{n}", n) for n in range(6, 33, 2)]
_SYMMETRIC = [(f"S{n}", factorial(n)) for n in range(3, 7)]
_ALTERNATING = [(f"A{n}", factorial(n) // 2) for n in range(4, 7)]
_MISC = [("Q8", 8), ("E2^2", 4), ("E2^3", 8), ("E3^2", 9)]
_SDP = [("sdp(5,4,2)", 20), ("sdp(7,3,2)", 21), ("sdp(9,3,4)", 27)]
_PRODUCTS = [
    ("C2 x C4", 8),
    ("C2 x C6", 12),
    ("C2 x C8", 16),
    ("C4 x C4", 16),
    ("C3 x C9", 27),
    ("C2 x S3", 12),
    ("C3 x S3", 18),
    ("C2 x A4", 24),
    ("C2 x D8", 16),
    ("C2 x Q8", 16),
    ("S3 x S3", 36),
    ("C2 x S4", 48),
    ("C5 x S3", 30),
    ("C3 x A4", 36),
]
_HOLOMORPHS = [
    ("Hol(C2)", 2),
    ("Hol(C3)", 6),
    ("Hol(C5)", 20),
    ("Hol(C7)", 42),
    ("Hol(C11)", 110),
    ("Hol(C13)", 156),
]

CATALOG_SPECS: tuple[tuple[str, int], ...] = tuple(
    reduce(
        list.__add__,
        [_CYCLIC, _DIHEDRAL, _SYMMETRIC, _ALTERNATING, _MISC, _SDP, _PRODUCTS, _HOLOMORPHS],
    )
)


def catalog(
    max_order: int, aut_cap: int = AUT_CAP, build_cap: int = MAX_ORDER
) -> list[tuple[str, FiniteGroup]]:
    """All catalog entries of order <= max_order, built, in fixed order."""
    bound = max(max_order, 1)
    return [
        (spec, build(spec, max_order=max(bound, 2), aut_cap=aut_cap))
        for spec, order in CATALOG_SPECS
        if order <= max_order and order <= build_cap
    ]
