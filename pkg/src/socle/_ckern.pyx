# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot table operations.

Semantics (including discovery order) are identical to socle._pykernels;
that module is the reference. Keep the two in lockstep.
"""

import numpy as np

BACKEND = "c"


def bfs_closure(gens, int max_order):
    cdef int k = gens.shape[0]
    cdef int degree = gens.shape[1]
    if max_order < 1:
        return None
    gens_arr = np.ascontiguousarray(gens, dtype=np.int32)
    cdef int[:, ::1] g = gens_arr
    elems_arr = np.empty((max_order, degree), dtype=np.int32)
    parent_arr = np.empty(max_order, dtype=np.int32)
    via_arr = np.empty(max_order, dtype=np.int32)
    gen_cols_arr = np.empty((k, max_order), dtype=np.int32)
    newrow_arr = np.empty(degree, dtype=np.int32)
    cdef int[:, ::1] elems = elems_arr
    cdef int[::1] parent = parent_arr
    cdef int[::1] via = via_arr
    cdef int[:, ::1] gen_cols = gen_cols_arr
    cdef int[::1] newrow = newrow_arr
    cdef int n = 1, head = 0, i, gi, j
    for i in range(degree):
        elems[0, i] = i
    parent[0] = 0
    via[0] = 0
    index = {elems_arr[0].tobytes(): 0}
    while head < n:
        for gi in range(k):
            for i in range(degree):
                newrow[i] = elems[head, g[gi, i]]
            key = newrow_arr.tobytes()
            got = index.get(key)
            if got is None:
                if n >= max_order:
                    return None
                j = n
                index[key] = j
                for i in range(degree):
                    elems[j, i] = newrow[i]
                parent[j] = head
                via[j] = gi
                n += 1
            else:
                j = got
            gen_cols[gi, head] = j
        head += 1
    return (
        elems_arr[:n].copy(),
        parent_arr[:n].copy(),
        via_arr[:n].copy(),
        gen_cols_arr[:, :n].copy(),
    )


def mul_table(parent, via, gen_cols):
    cdef int n = parent.shape[0]
    cdef int[::1] par = np.ascontiguousarray(parent, dtype=np.int32)
    cdef int[::1] vi = np.ascontiguousarray(via, dtype=np.int32)
    cdef int[:, ::1] gc = np.ascontiguousarray(gen_cols, dtype=np.int32)
    mul_arr = np.empty((n, n), dtype=np.int32)
    cdef int[:, ::1] mul = mul_arr
    cdef int i, j, p, gi
    for i in range(n):
        mul[i, 0] = i
    for j in range(1, n):
        p = par[j]
        gi = vi[j]
        for i in range(n):
            mul[i, j] = gc[gi, mul[i, p]]
    return mul_arr


def inv_from_mul(mul):
    cdef int[:, ::1] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef int n = m.shape[0]
    inv_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] inv = inv_arr
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if m[i, j] == 0:
                inv[i] = j
                break
    return inv_arr


def subgroup_closure(mul, seeds):
    cdef int[:, ::1] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef int[::1] sd = np.ascontiguousarray(seeds, dtype=np.int32)
    cdef int n = m.shape[0]
    cdef int ns = sd.shape[0]
    flags_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef unsigned char[::1] flags = flags_arr
    cdef int[::1] queue = queue_arr
    cdef int count = 1, head = 0, x, y, si
    flags[0] = 1
    queue[0] = 0
    for si in range(ns):
        x = sd[si]
        if not flags[x]:
            flags[x] = 1
            queue[count] = x
            count += 1
    while head < count:
        x = queue[head]
        head += 1
        for si in range(ns):
            y = m[x, sd[si]]
            if not flags[y]:
                flags[y] = 1
                queue[count] = y
                count += 1
    out = queue_arr[:count].copy()
    out.sort()
    return out


def try_extend(parent, via, dom_gen_cols, cod_mul, gen_images):
    cdef int[::1] par = np.ascontiguousarray(parent, dtype=np.int32)
    cdef int[::1] vi = np.ascontiguousarray(via, dtype=np.int32)
    cdef int[:, ::1] cols = np.ascontiguousarray(dom_gen_cols, dtype=np.int32)
    cdef int[:, ::1] cm = np.ascontiguousarray(cod_mul, dtype=np.int32)
    cdef int[::1] gim = np.ascontiguousarray(gen_images, dtype=np.int32)
    cdef int n = par.shape[0]
    cdef int k = cols.shape[0]
    image_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] image = image_arr
    cdef int i, j, gi, t
    image[0] = 0
    for j in range(1, n):
        image[j] = cm[image[par[j]], gim[vi[j]]]
    for gi in range(k):
        t = gim[gi]
        for i in range(n):
            if image[cols[gi, i]] != cm[image[i], t]:
                return None
    return image_arr


def element_orders(mul):
    cdef int[:, ::1] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef int n = m.shape[0]
    orders_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] orders = orders_arr
    cdef int i, x, t
    for i in range(n):
        x = i
        t = 1
        while x != 0:
            x = m[x, i]
            t += 1
        orders[i] = t
    return orders_arr
