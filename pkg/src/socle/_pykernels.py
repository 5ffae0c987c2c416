"""Pure-Python kernels (numpy-backed) for the hot table operations.

These mirror `socle._ckern` exactly: same signatures, same deterministic
orderings. The compiled module is preferred at import time when present;
this module is the fallback and the reference semantics.

All tables are int32 numpy arrays. Products follow the package convention:
`mul[i, j]` is the index of `elements[i] * elements[j]` (right factor
applies first).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def bfs_closure(gens: np.ndarray, max_order: int):
    """Close a generator set under composition, breadth-first from the identity.

    `gens` is a (k, degree) int32 array of generator image rows. Returns
    `(elems, parent, via, gen_cols)` where `elems` is the (n, degree) element
    table in discovery order (identity first), `elems[j] = elems[parent[j]] *
    gens[via[j]]` for j > 0, and `gen_cols[g][i]` is the index of
    `elems[i] * gens[g]`. Returns None if the closure exceeds `max_order`.

    Discovery order: for each known element in order, right-multiply by each
    generator in list order; new elements are appended as found.
    """
    k, degree = gens.shape
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    parent = [0]
    via = [0]
    gen_rows = [tuple(int(x) for x in gens[g]) for g in range(k)]
    gen_cols = [[] for _ in range(k)]
    head = 0
    while head < len(elems):
        row = elems[head]
        for g in range(k):
            grow = gen_rows[g]
            new = tuple(row[grow[i]] for i in range(degree))
            j = index.get(new)
            if j is None:
                j = len(elems)
                if j >= max_order:
                    return None
                index[new] = j
                elems.append(new)
                parent.append(head)
                via.append(g)
            gen_cols[g].append(j)
        head += 1
    n = len(elems)
    return (
        np.array(elems, dtype=np.int32).reshape(n, degree),
        np.array(parent, dtype=np.int32),
        np.array(via, dtype=np.int32),
        np.array(gen_cols, dtype=np.int32).reshape(k, n),
    )


def mul_table(parent: np.ndarray, via: np.ndarray, gen_cols: np.ndarray) -> np.ndarray:
    """Full n*n product table from the closure tree, by column recursion.

    For j > 0: i*elems[j] = (i*elems[parent[j]])*gens[via[j]], which is a
    pure gather once the parent column is known; no permutation composition
    happens here.
    """
    n = parent.shape[0]
    mul = np.empty((n, n), dtype=np.int32)
    mul[:, 0] = np.arange(n, dtype=np.int32)
    for j in range(1, n):
        mul[:, j] = gen_cols[via[j]][mul[:, parent[j]]]
    return mul


def inv_from_mul(mul: np.ndarray) -> np.ndarray:
    """Inverse index table: inv[i] is the j with mul[i, j] == 0."""
    rows, cols = np.nonzero(mul == 0)
    inv = np.empty(mul.shape[0], dtype=np.int32)
    inv[rows] = cols
    return inv


def subgroup_closure(mul: np.ndarray, seeds: np.ndarray) -> np.ndarray:
    """Member indices of the subgroup generated by `seeds`, sorted ascending."""
    n = mul.shape[0]
    flags = bytearray(n)
    flags[0] = 1
    queue = [0]
    for s in seeds:
        s = int(s)
        if not flags[s]:
            flags[s] = 1
            queue.append(s)
    gens = [int(s) for s in seeds]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        row = mul[x]
        for s in gens:
            y = int(row[s])
            if not flags[y]:
                flags[y] = 1
                queue.append(y)
    queue.sort()
    return np.array(queue, dtype=np.int32)


def try_extend(
    parent: np.ndarray,
    via: np.ndarray,
    dom_gen_cols: np.ndarray,
    cod_mul: np.ndarray,
    gen_images: np.ndarray,
) -> np.ndarray | None:
    """Extend generator images along the closure tree and validate the law.

    Returns the total image array, or None if the one-step homomorphism law
    image[i*g] == image[i]*image(g) fails anywhere (which also catches
    conflicting extensions).
    """
    n = parent.shape[0]
    image = np.empty(n, dtype=np.int32)
    image[0] = 0
    for j in range(1, n):
        image[j] = cod_mul[image[parent[j]], gen_images[via[j]]]
    for g in range(dom_gen_cols.shape[0]):
        if not np.array_equal(image[dom_gen_cols[g]], cod_mul[image, gen_images[g]]):
            return None
    return image


def element_orders(mul: np.ndarray) -> np.ndarray:
    """Multiplicative order of every element index."""
    n = mul.shape[0]
    idx = np.arange(n, dtype=np.int32)
    orders = np.zeros(n, dtype=np.int32)
    power = idx.copy()
    t = 1
    while True:
        fresh = (power == 0) & (orders == 0)
        orders[fresh] = t
        if orders.all():
            return orders
        power = mul[power, idx]
        t += 1
