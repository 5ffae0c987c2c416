"""Isomorphism testing by backtracking over generator images.

The search fixes a short generating sequence of the domain (greedy: highest
element order first, extending until the sequence generates; ties broken by
largest generated closure, then least index), then assigns candidate images
constrained to matching element order and conjugacy-class size, pruning
partial assignments by product orders and generated-subgroup sizes. A full
assignment is validated by extending it along closure words with conflict
detection. Enumerating *all* valid assignments for the domain onto itself
yields the automorphism group; stopping at the first yields an isomorphism
witness.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as kernels
from .errors import OrderBoundExceeded
from .group import FiniteGroup, Homomorphism, center
from .lattice import conjugacy_classes

ISO_CAP = 512


def class_size_by_element(G: FiniteGroup) -> np.ndarray:
    sizes = np.empty(G.order, dtype=np.int32)
    for cls in conjugacy_classes(G):
        sizes[list(cls)] = len(cls)
    return sizes


def invariant_profile(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariants used to prune before any search."""
    orders = tuple(sorted(int(x) for x in G.element_orders()))
    sizes = tuple(sorted(len(c) for c in conjugacy_classes(G)))
    return (G.order, orders, sizes, center(G).order)


def generating_sequence(G: FiniteGroup) -> list[int]:
    """Greedy generating sequence; see module docstring for the rule."""
    mul = G.mul_table
    orders = G.element_orders()
    seq: list[int] = []
    known = {0}
    while len(known) < G.order:
        outside = [i for i in range(G.order) if i not in known]
        maxord = max(int(orders[i]) for i in outside)
        best, best_size, best_members = -1, -1, None
        for i in outside:
            if int(orders[i]) != maxord:
                continue
            members = kernels.subgroup_closure(mul, np.array(seq + [i], dtype=np.int32))
            if len(members) > best_size:
                best, best_size, best_members = i, len(members), members
                if best_size == G.order:
                    break
        seq.append(best)
        known = {int(x) for x in best_members}
    return seq


class _SearchTree:
    """Domain relabeled in breadth-first order over a chosen generating
    sequence, so closure-word extension can run with parent < child."""

    def __init__(self, G: FiniteGroup, gens_idx: list[int]):
        mul = G.mul_table
        n = G.order
        order = [0]
        pos = {0: 0}
        parent = [0]
        via = [0]
        head = 0
        while head < len(order):
            x = order[head]
            for gi, g in enumerate(gens_idx):
                y = int(mul[x, g])
                if y not in pos:
                    pos[y] = len(order)
                    order.append(y)
                    parent.append(head)
                    via.append(gi)
            head += 1
        if len(order) != n:
            raise ValueError("sequence does not generate the group")
        self.sigma = np.array(order, dtype=np.int32)  # new index -> old index
        inv_sigma = np.empty(n, dtype=np.int32)
        inv_sigma[self.sigma] = np.arange(n, dtype=np.int32)
        relabeled = np.ascontiguousarray(inv_sigma[mul[np.ix_(self.sigma, self.sigma)]])
        self.parent = np.array(parent, dtype=np.int32)
        self.via = np.array(via, dtype=np.int32)
        new_gen_pos = inv_sigma[np.array(gens_idx, dtype=np.int32)]
        self.dom_gen_cols = np.ascontiguousarray(relabeled[:, new_gen_pos].T)

    def unrelabel(self, image_new: np.ndarray) -> np.ndarray:
        out = np.empty(len(image_new), dtype=np.int32)
        out[self.sigma] = image_new
        return out


def _assignment_search(A: FiniteGroup, B: FiniteGroup, first_only: bool) -> list[np.ndarray]:
    """All (or the first) image arrays of isomorphisms A -> B; |A| == |B|."""
    n = A.order
    gens = generating_sequence(A)
    if not gens:
        return [np.zeros(1, dtype=np.int32)]
    tree = _SearchTree(A, gens)
    ords_a, ords_b = A.element_orders(), B.element_orders()
    cls_a, cls_b = class_size_by_element(A), class_size_by_element(B)
    mul_a, mul_b = A.mul_table, B.mul_table
    k = len(gens)
    cands = []
    for s in gens:
        prof = (int(ords_a[s]), int(cls_a[s]))
        cands.append(
            [t for t in range(n) if (int(ords_b[t]), int(cls_b[t])) == prof]
        )
    prefix_sizes = [
        len(kernels.subgroup_closure(mul_a, np.array(gens[: j + 1], dtype=np.int32)))
        for j in range(k)
    ]
    prod_ords = [
        [int(ords_a[mul_a[gens[j], gens[i]]]) for j in range(i)] for i in range(k)
    ]
    solutions: list[np.ndarray] = []
    assigned: list[int] = []

    def dfs(level: int) -> bool:
        for t in cands[level]:
            ok = True
            for j in range(level):
                if int(ords_b[mul_b[assigned[j], t]]) != prod_ords[level][j]:
                    ok = False
                    break
            if not ok:
                continue
            if level < k - 1:
                size = len(
                    kernels.subgroup_closure(
                        mul_b, np.array(assigned + [t], dtype=np.int32)
                    )
                )
                if size != prefix_sizes[level]:
                    continue
            assigned.append(t)
            if level == k - 1:
                image = kernels.try_extend(
                    tree.parent,
                    tree.via,
                    tree.dom_gen_cols,
                    mul_b,
                    np.array(assigned, dtype=np.int32),
                )
                if image is not None and int(np.count_nonzero(image == 0)) == 1:
                    solutions.append(tree.unrelabel(image))
                    if first_only:
                        assigned.pop()
                        return True
            else:
                if dfs(level + 1):
                    assigned.pop()
                    return True
            assigned.pop()
        return False

    dfs(0)
    return solutions


def all_automorphism_images(G: FiniteGroup) -> list[np.ndarray]:
    """Every automorphism of G as a total index map (unsorted search order)."""
    return _assignment_search(G, G, first_only=False)


def find_isomorphism(A: FiniteGroup, B: FiniteGroup, search_cap: int = ISO_CAP) -> Homomorphism | None:
    """An isomorphism A -> B if one exists, else None."""
    if A.order != B.order:
        return None
    if A.order > search_cap:
        raise OrderBoundExceeded(f"|A| = {A.order} exceeds the iso search cap {search_cap}")
    if invariant_profile(A) != invariant_profile(B):
        return None
    sols = _assignment_search(A, B, first_only=True)
    if not sols:
        return None
    h = Homomorphism(A, B, sols[0])
    assert h.mono and h.epi
    return h


def is_isomorphic(A: FiniteGroup, B: FiniteGroup, search_cap: int = ISO_CAP) -> bool:
    return find_isomorphism(A, B, search_cap=search_cap) is not None
