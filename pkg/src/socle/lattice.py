"""Conjugacy classes, the normal-subgroup lattice, and complement searches.

Normal subgroups are enumerated by closing class-wise normal closures under
pairwise join (every normal subgroup is the join of the normal closures of
its elements), which avoids the exponential all-subgroups enumeration. The
brute-force all-subgroups fixpoint is kept as an independent oracle for
small orders.

Lattices are cached content-addressed by the parent's product-table hash;
the cache stores bare member tuples and handles are re-parented per query,
so groups with identical tables share the combinatorial work. The cache is
populated once per key and read-only afterwards (compute-once-then-freeze);
concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .errors import NotNormal, OrderBoundExceeded
from .group import FiniteGroup, SubgroupHandle, normal_closure

ORACLE_CAP = 48

_NORMALS_CACHE: dict[str, tuple[tuple[int, ...], ...]] = {}
_ALL_SUBGROUPS_CACHE: dict[str, tuple[tuple[int, ...], ...]] = {}


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Orbits of the conjugation action, each sorted, listed by least member."""
    mul, inv = G.mul_table, G.inv_table
    n = G.order
    seen = np.zeros(n, dtype=bool)
    classes: list[tuple[int, ...]] = []
    for i in range(n):
        if seen[i]:
            continue
        orbit = np.unique(mul[mul[:, i], inv])
        seen[orbit] = True
        classes.append(tuple(int(x) for x in orbit))
    return classes


@dataclass(frozen=True)
class NormalLattice:
    """All normal subgroups of a group, sorted by (order, member set)."""

    parent: FiniteGroup
    normals: tuple[SubgroupHandle, ...]
    minimal: tuple[SubgroupHandle, ...]

    @property
    def trivial(self) -> SubgroupHandle:
        return self.normals[0]

    @property
    def whole(self) -> SubgroupHandle:
        return self.normals[-1]

    def __len__(self) -> int:
        return len(self.normals)


def normal_subgroups(G: FiniteGroup) -> NormalLattice:
    """Exactly the normal subgroups of G.

    Seeds are the normal closures of one representative per nontrivial
    conjugacy class; the seed set is closed under pairwise join and the
    trivial subgroup is added.
    """
    key = G.table_hash()
    members_list = _NORMALS_CACHE.get(key)
    if members_list is None:
        mul = G.mul_table
        known: dict[tuple[int, ...], frozenset[int]] = {}

        def add(t: tuple[int, ...]) -> bool:
            if t in known:
                return False
            known[t] = frozenset(t)
            return True

        add((0,))
        add(tuple(range(G.order)))
        frontier: list[tuple[int, ...]] = []
        for cls in conjugacy_classes(G):
            rep = cls[0]
            if rep == 0:
                continue
            t = normal_closure(G, [rep]).members
            if add(t):
                frontier.append(t)
        while frontier:
            fresh: list[tuple[int, ...]] = []
            snapshot = sorted(known, key=lambda t: (len(t), t))
            for a in frontier:
                aset = known[a]
                for b in snapshot:
                    bset = known[b]
                    if aset <= bset or bset <= aset:
                        continue
                    joined = kernels.subgroup_closure(
                        mul, np.array(sorted(aset | bset), dtype=np.int32)
                    )
                    t = tuple(int(x) for x in joined)
                    if add(t):
                        fresh.append(t)
            frontier = fresh
        members_list = tuple(sorted(known, key=lambda t: (len(t), t)))
        _NORMALS_CACHE[key] = members_list
    handles = tuple(
        SubgroupHandle(G, m, normal=True) for m in members_list
    )
    nontrivial = [h for h in handles if not h.is_trivial]
    minimal = tuple(
        h
        for h in nontrivial
        if not any(o.member_set < h.member_set for o in nontrivial)
    )
    return NormalLattice(G, handles, minimal)


def all_subgroups(G: FiniteGroup, cap: int = ORACLE_CAP) -> list[SubgroupHandle]:
    """Every subgroup of G, by fixpoint extension. Oracle-grade: small G only.

    Starts from all cyclic subgroups and repeatedly extends each known
    subgroup by each outside element, closing, until nothing new appears.
    """
    if G.order > cap:
        raise OrderBoundExceeded(
            f"|G| = {G.order} exceeds the all-subgroups oracle cap {cap}"
        )
    key = G.table_hash()
    members_list = _ALL_SUBGROUPS_CACHE.get(key)
    if members_list is None:
        mul = G.mul_table
        n = G.order
        known: dict[tuple[int, ...], None] = {}
        worklist: list[tuple[int, ...]] = []
        for g in range(n):
            t = tuple(
                int(x) for x in kernels.subgroup_closure(mul, np.array([g], dtype=np.int32))
            )
            if t not in known:
                known[t] = None
                worklist.append(t)
        head = 0
        while head < len(worklist):
            S = worklist[head]
            head += 1
            sset = set(S)
            for x in range(n):
                if x in sset:
                    continue
                t = tuple(
                    int(v)
                    for v in kernels.subgroup_closure(
                        mul, np.array(S + (x,), dtype=np.int32)
                    )
                )
                if t not in known:
                    known[t] = None
                    worklist.append(t)
        members_list = tuple(sorted(known, key=lambda t: (len(t), t)))
        _ALL_SUBGROUPS_CACHE[key] = members_list
    return [SubgroupHandle(G, m) for m in members_list]


def minimal_normal_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    """Minimal elements among the nontrivial normal subgroups."""
    return list(normal_subgroups(G).minimal)


def normal_complement(G: FiniteGroup, N: SubgroupHandle) -> SubgroupHandle | None:
    """Some normal T with trivial intersection and |N|*|T| = |G|, if any.

    Deterministic choice: the smallest such T in the lattice ordering.
    Returns None when no complement exists (a value, not an error).
    """
    if not N.is_normal():
        raise NotNormal("complement search requires a normal subgroup")
    target = G.order // N.order if N.order else 0
    for T in normal_subgroups(G).normals:
        if T.order == target and len(T.member_set & N.member_set) == 1:
            return T
    return None


def maximal_trivial_intersector(G: FiniteGroup, K: SubgroupHandle) -> SubgroupHandle:
    """A normal T, inclusion-maximal among those meeting K trivially.

    Tie-break: largest order, then least member set lexicographically. The
    trivial subgroup always qualifies, so this never fails.
    """
    if not K.is_normal():
        raise NotNormal("intersector search requires a normal subgroup")
    lat = normal_subgroups(G)
    cands = [T for T in lat.normals if len(T.member_set & K.member_set) == 1]
    maximal = [
        T for T in cands if not any(T.member_set < U.member_set for U in cands)
    ]
    return min(maximal, key=lambda T: (-T.order, T.members))


def clear_caches() -> None:
    _NORMALS_CACHE.clear()
    _ALL_SUBGROUPS_CACHE.clear()
