"""Finite group actions and the action-based essentiality certificates.

An action is stored as a validated table act[g, x]; construction extends
generator point-images along the group's closure tree and checks the
one-step law act(i*g) = act(i) after act(g), which forces the full law.

The certificates: when the point stabilizers inside a subgroup H form an
antichain (no containment between stabilizers of distinct points), the
product of the normal closure of H with the action kernel is essential.
Self-normalizing and malnormal subgroups feed that condition through the
coset action, giving the "whole group or proper essential" dichotomy for
their normal closures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidAction, PreconditionFailed
from .essential import EssentialCertificate, is_essential
from .group import (
    FiniteGroup,
    SubgroupHandle,
    normal_closure,
    normalizer,
    subgroup_generated,
)
from .perm import Perm


class GroupAction:
    """A validated action of a finite group on {0..set_size-1}."""

    def __init__(self, group: FiniteGroup, set_size: int, table: np.ndarray):
        self.group = group
        self.set_size = set_size
        self.table = table
        self.table.setflags(write=False)

    def apply(self, g: int, x: int) -> int:
        return int(self.table[g, x])

    @classmethod
    def from_generator_images(
        cls, G: FiniteGroup, set_size: int, images: list[Perm]
    ) -> "GroupAction":
        """Extend generator point-permutations to the whole group.

        Raises InvalidAction when the extension breaks the action law.
        """
        if len(images) != len(G.generators):
            raise InvalidAction(
                f"need {len(G.generators)} generator images, got {len(images)}"
            )
        rows = []
        for p in images:
            if p.degree != set_size:
                raise InvalidAction(f"image degree {p.degree} != set size {set_size}")
            rows.append(np.array(p.images, dtype=np.int32))
        n = G.order
        table = np.empty((n, set_size), dtype=np.int32)
        table[0] = np.arange(set_size, dtype=np.int32)
        parent, via = G._parent, G._via
        for j in range(1, n):
            table[j] = table[parent[j]][rows[via[j]]]
        for gi, row in zip(G.gen_indices, rows):
            if not np.array_equal(table[G.mul_table[:, gi]], table[:, row]):
                raise InvalidAction("generator images do not satisfy the action law")
        return cls(G, set_size, table)

    def validate_exhaustive(self, budget: int = 10**6) -> bool:
        """Check act(g*h) = act(g) after act(h) over all pairs, within budget.

        Returns False when the |G|^2 * set_size work would exceed the budget
        (the check is then skipped), True when the law holds.
        """
        n = self.group.order
        if n * n * self.set_size > budget:
            return False
        mul = self.group.mul_table
        for h in range(n):
            if not np.array_equal(self.table[mul[:, h]], self.table[:, self.table[h]]):
                raise InvalidAction("action law fails on exhaustive check")
        return True


def natural_action(G: FiniteGroup) -> GroupAction:
    """G acting on its own permutation domain."""
    return GroupAction.from_generator_images(G, G.degree, list(G.generators))


def trivial_action(G: FiniteGroup, set_size: int) -> GroupAction:
    return GroupAction.from_generator_images(
        G, set_size, [Perm.identity(set_size)] * len(G.generators)
    )


def coset_action(G: FiniteGroup, S: SubgroupHandle) -> GroupAction:
    """Left multiplication on the left cosets of S (S need not be normal).

    Cosets are numbered by least element, so point 0 is the coset S itself
    and its stabilizer is S.
    """
    mul = G.mul_table
    members = np.array(S.members, dtype=np.int32)
    n = G.order
    coset_id = np.full(n, -1, dtype=np.int32)
    reps: list[int] = []
    for i in range(n):
        if coset_id[i] < 0:
            coset_id[mul[i, members]] = len(reps)
            reps.append(i)
    reps_arr = np.array(reps, dtype=np.int32)
    images = [
        Perm(tuple(int(x) for x in coset_id[mul[gi, reps_arr]]))
        for gi in G.gen_indices
    ]
    return GroupAction.from_generator_images(G, len(reps), images)


def action_kernel(f: GroupAction) -> SubgroupHandle:
    """Elements acting as the identity."""
    idt = np.arange(f.set_size, dtype=np.int32)
    mask = (f.table == idt).all(axis=1)
    return SubgroupHandle(
        f.group, tuple(int(i) for i in np.nonzero(mask)[0]), normal=True
    )


def stabilizer(
    f: GroupAction, x: int, within: SubgroupHandle | None = None
) -> SubgroupHandle:
    """Members of `within` (default: the whole group) fixing the point x."""
    if not 0 <= x < f.set_size:
        raise ValueError(f"point {x} out of range")
    if within is None:
        within = f.group.whole_handle()
    m = np.array(within.members, dtype=np.int32)
    keep = m[f.table[m, x] == x]
    return SubgroupHandle(f.group, tuple(int(i) for i in keep))


def fixed_points(f: GroupAction, S: SubgroupHandle) -> tuple[int, ...]:
    """Points fixed by every member of S."""
    m = np.array(S.members, dtype=np.int32)
    idt = np.arange(f.set_size, dtype=np.int32)
    mask = (f.table[m] == idt).all(axis=0)
    return tuple(int(x) for x in np.nonzero(mask)[0])


@dataclass(frozen=True)
class StabilizerContainment:
    """Witness that the antichain hypothesis fails: H_x is contained in H_y."""

    x: int
    y: int


def essential_from_action(
    G: FiniteGroup, H: SubgroupHandle, f: GroupAction
) -> EssentialCertificate | StabilizerContainment:
    """Certify ncl(H)*Ker(f) essential when stabilizers form an antichain.

    Checks Stab_x(H) not contained in Stab_y(H) over all ordered pairs of
    distinct points; on failure returns the first violating pair, otherwise
    certifies the join of the normal closure of H with the action kernel.
    """
    if G.order == 1:
        raise PreconditionFailed("the ambient group must be nontrivial")
    stabs = [stabilizer(f, x, within=H).member_set for x in range(f.set_size)]
    for x in range(f.set_size):
        for y in range(f.set_size):
            if x != y and stabs[x] <= stabs[y]:
                return StabilizerContainment(x, y)
    ncl = normal_closure(G, H)
    ker = action_kernel(f)
    K = subgroup_generated(G, ncl.member_set | ker.member_set)
    K._normal = True  # join of normal subgroups
    cert = is_essential(G, K)
    if not cert.essential:
        raise RuntimeError("antichain condition held but the join is not essential")
    return cert


def is_self_normalizing(G: FiniteGroup, S: SubgroupHandle) -> bool:
    return normalizer(G, S).members == S.members


def is_malnormal(G: FiniteGroup, S: SubgroupHandle) -> bool:
    """Every conjugate by an outside element meets S only in the identity."""
    m = np.array(S.members, dtype=np.int32)
    mul, inv = G.mul_table, G.inv_table
    conj = mul[mul[:, m], inv[:, None]]
    hits = np.isin(conj, m).sum(axis=1)
    outside = np.array(
        [g for g in range(G.order) if g not in S.member_set], dtype=np.int32
    )
    return bool((hits[outside] == 1).all()) if len(outside) else True


@dataclass(frozen=True)
class WholeGroup:
    """The normal closure turned out to be the whole group."""

    closure: SubgroupHandle


def essential_from_self_normalizing(
    G: FiniteGroup, S: SubgroupHandle
) -> WholeGroup | EssentialCertificate:
    """Normal closure of a self-normalizing subgroup: whole group, or a
    certified proper essential subgroup."""
    if G.order == 1:
        raise PreconditionFailed("the ambient group must be nontrivial")
    if not is_self_normalizing(G, S):
        raise PreconditionFailed("subgroup is not self-normalizing")
    return _closure_dichotomy(G, S)


def essential_from_malnormal(
    G: FiniteGroup, S: SubgroupHandle
) -> WholeGroup | EssentialCertificate:
    """Normal closure of a nontrivial malnormal subgroup: whole group, or a
    certified proper essential subgroup."""
    if S.is_trivial:
        raise PreconditionFailed("subgroup must be nontrivial")
    if not is_malnormal(G, S):
        raise PreconditionFailed("subgroup is not malnormal")
    return _closure_dichotomy(G, S)


def _closure_dichotomy(G: FiniteGroup, S: SubgroupHandle) -> WholeGroup | EssentialCertificate:
    H = normal_closure(G, S)
    if H.is_whole:
        return WholeGroup(H)
    cert = is_essential(G, H)
    if not cert.essential:
        raise RuntimeError("proper normal closure failed the essentiality check")
    return cert
