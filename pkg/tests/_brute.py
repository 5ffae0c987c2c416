"""Tiny brute-force helpers independent of the library's table machinery.

Everything here works on raw image tuples so tests can cross-check the
package against a second route.
"""

from __future__ import annotations

from itertools import product


def compose_t(a: tuple, b: tuple) -> tuple:
    """Right factor first, same convention as the package."""
    return tuple(a[x] for x in b)


def inverse_t(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def closure_set(gens: list[tuple], degree: int) -> frozenset:
    """Fixpoint closure under composition (order-free)."""
    identity = tuple(range(degree))
    known = {identity} | set(gens)
    while True:
        new = {compose_t(a, b) for a, b in product(known, repeat=2)} - known
        if not new:
            return frozenset(known)
        known |= new


def conjugacy_class_sets(elements: list[tuple]) -> list[frozenset]:
    """Conjugation orbits by pairwise scanning."""
    left = set(elements)
    out = []
    while left:
        x = min(left)
        orbit = {compose_t(compose_t(g, x), inverse_t(g)) for g in elements}
        out.append(frozenset(orbit))
        left -= orbit
    return out


def is_subgroup_set(elements: frozenset, degree: int) -> bool:
    identity = tuple(range(degree))
    if identity not in elements:
        return False
    return all(
        compose_t(a, b) in elements for a in elements for b in elements
    )


def is_normal_set(group: list[tuple], sub: frozenset) -> bool:
    return all(
        compose_t(compose_t(g, s), inverse_t(g)) in sub
        for g in group
        for s in sub
    )
