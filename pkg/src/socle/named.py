"""Standard group constructors in faithful permutation representations."""

from __future__ import annotations

from math import factorial

from .errors import OrderBoundExceeded
from .group import MAX_ORDER, FiniteGroup, close
from .perm import Perm


def cyclic(n: int) -> FiniteGroup:
    """C_n as the powers of an n-cycle; element i is the i-th power."""
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    if n == 1:
        return close(1, [])
    gen = Perm(tuple((i + 1) % n for i in range(n)))
    return close(n, [gen], max_order=n)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given ORDER (even, >= 4).

    For order >= 6 this is the polygon representation on order/2 points;
    the order-4 case (the Klein group) needs 4 points to stay faithful.
    """
    if order < 4 or order % 2:
        raise ValueError("dihedral order must be even and >= 4")
    m = order // 2
    if m == 2:
        return close(4, [Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(2, 3)])],
                     max_order=4)
    rot = Perm(tuple((i + 1) % m for i in range(m)))
    ref = Perm(tuple((m - i) % m for i in range(m)))
    return close(m, [rot, ref], max_order=order)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("symmetric degree must be >= 1")
    if factorial(n) > MAX_ORDER:
        raise OrderBoundExceeded(f"|S_{n}| = {factorial(n)} > {MAX_ORDER}")
    if n == 1:
        return close(1, [])
    gens = [Perm.from_cycles(n, [(0, 1)]), Perm(tuple((i + 1) % n for i in range(n)))]
    return close(n, gens, max_order=factorial(n))


def alternating(n: int) -> FiniteGroup:
    """A_n generated by the 3-cycles (0 1 k)."""
    if n < 2:
        raise ValueError("alternating degree must be >= 2")
    order = factorial(n) // 2
    if order > MAX_ORDER:
        raise OrderBoundExceeded(f"|A_{n}| = {order} > {MAX_ORDER}")
    if n == 2:
        return close(2, [])
    gens = [Perm.from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
    return close(n, gens, max_order=order)


def quaternion8() -> FiniteGroup:
    """Q8 via the regular representation on {1,-1,i,-i,j,-j,k,-k}."""
    left_i = Perm((2, 3, 1, 0, 6, 7, 5, 4))
    left_j = Perm((4, 5, 7, 6, 1, 0, 2, 3))
    return close(8, [left_i, left_j], max_order=8)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """(C_p)^k on p*k points, one p-cycle per coordinate."""
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**k > MAX_ORDER:
        raise OrderBoundExceeded(f"p^k = {p ** k} > {MAX_ORDER}")
    degree = p * k
    gens = []
    for c in range(k):
        base = c * p
        gens.append(Perm.from_cycles(degree, [tuple(range(base, base + p))]))
    return close(degree, gens, max_order=p**k)


def make_named(kind: str, *params: int) -> FiniteGroup:
    """Dispatch by kind name: cyclic n | dihedral n | symmetric n |
    alternating n | quaternion8 | elementary-abelian p k."""
    table = {
        "cyclic": lambda: cyclic(params[0]),
        "dihedral": lambda: dihedral(params[0]),
        "symmetric": lambda: symmetric(params[0]),
        "alternating": lambda: alternating(params[0]),
        "quaternion8": quaternion8,
        "elementary-abelian": lambda: elementary_abelian(params[0], params[1]),
    }
    if kind not in table:
        raise ValueError(f"unknown group kind {kind!r}")
    return table[kind]()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True
