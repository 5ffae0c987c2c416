"""Fully enumerated finite permutation groups and their subgroup calculus.

Conventions pinned repo-wide:

- The group product is `compose`: the right factor applies first.
- Elements are enumerated breadth-first from the identity over the generator
  list (ties broken by generator order), so element 0 is always the identity
  and two closures of the same input are identical.
- Every set-valued result is sorted by element index.

Groups are immutable after construction and all operations here are pure
functions of their inputs; instances can be shared across threads freely.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from . import _kernels as kernels
from .errors import NotAHomomorphism, NotMonomorphism, NotNormal, OrderBoundExceeded
from .perm import Perm

MAX_ORDER = 2000


class FiniteGroup:
    """A finite group given by its full element enumeration.

    Carries the element list (as permutations of {0..degree-1}), the n*n
    product index table, the inverse table, and the closure tree used to
    extend generator maps. Construct via `close` or the named constructors.
    """

    def __init__(self, degree, generators, elements, mul_table, inv_table,
                 parent, via, gen_cols):
        self.degree: int = degree
        self.generators: tuple[Perm, ...] = tuple(generators)
        self.elements: tuple[Perm, ...] = tuple(elements)
        self.mul_table: np.ndarray = mul_table
        self.inv_table: np.ndarray = inv_table
        self._parent = parent
        self._via = via
        self._gen_cols = gen_cols
        # identity * g is g itself, so column 0 of gen_cols indexes the generators
        self.gen_indices: tuple[int, ...] = tuple(
            int(gen_cols[g, 0]) for g in range(len(self.generators))
        )
        self._index: dict[Perm, int] | None = None
        self._orders: np.ndarray | None = None
        self._abelian: bool | None = None
        self._hash_hex: str | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inv_table[i])

    def conjugate(self, g: int, x: int) -> int:
        """Index of g * x * g^-1."""
        return int(self.mul_table[self.mul_table[g, x], self.inv_table[g]])

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(i), -e)
        acc = 0
        for _ in range(e):
            acc = int(self.mul_table[acc, i])
        return acc

    def index_of(self, p: Perm) -> int:
        if self._index is None:
            self._index = {q: i for i, q in enumerate(self.elements)}
        try:
            return self._index[p]
        except KeyError:
            raise ValueError(f"permutation {p} is not an element of this group") from None

    def element_order(self, i: int) -> int:
        return int(self.element_orders()[i])

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = kernels.element_orders(self.mul_table)
        return self._orders

    def is_abelian(self) -> bool:
        if self._abelian is None:
            gi = self.gen_indices
            self._abelian = all(
                self.mul(a, b) == self.mul(b, a) for a in gi for b in gi
            )
        return self._abelian

    def table_hash(self) -> str:
        """Content hash of the product table; equal tables mean the same
        index-level structure (used to share lattice computations)."""
        if self._hash_hex is None:
            h = hashlib.sha1()
            h.update(np.int64(self.order).tobytes())
            h.update(np.ascontiguousarray(self.mul_table).tobytes())
            self._hash_hex = h.hexdigest()
        return self._hash_hex

    def trivial_handle(self) -> "SubgroupHandle":
        return SubgroupHandle(self, (0,), normal=True, abelian=True)

    def whole_handle(self) -> "SubgroupHandle":
        return SubgroupHandle(self, tuple(range(self.order)), normal=True,
                              abelian=self.is_abelian())

    def __repr__(self) -> str:
        return f"FiniteGroup(degree={self.degree}, order={self.order})"


def close(degree: int, generators: Sequence[Perm], max_order: int = MAX_ORDER) -> FiniteGroup:
    """Enumerate the group generated by `generators` on {0..degree-1}.

    Raises OrderBoundExceeded if the closure passes `max_order` (the input
    is too large for desk-scale enumeration).
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    for p in generators:
        if p.degree != degree:
            raise ValueError(f"generator degree {p.degree} != {degree}")
    arr = np.array([p.images for p in generators], dtype=np.int32).reshape(
        len(generators), degree
    )
    res = kernels.bfs_closure(arr, max_order)
    if res is None:
        raise OrderBoundExceeded(
            f"closure exceeds max_order={max_order} (degree {degree}, "
            f"{len(generators)} generators)"
        )
    elems, parent, via, gen_cols = res
    mul = kernels.mul_table(parent, via, gen_cols)
    inv = kernels.inv_from_mul(mul)
    elements = tuple(Perm(tuple(int(x) for x in row)) for row in elems)
    return FiniteGroup(degree, generators, elements, mul, inv, parent, via, gen_cols)


class SubgroupHandle:
    """A subgroup of a parent group, stored as a sorted tuple of element
    indices closed under the parent's product and inverse.

    Normality and abelianness are tri-state cached: unknown until asked.
    """

    def __init__(self, parent: FiniteGroup, members: tuple[int, ...], *,
                 normal: bool | None = None, abelian: bool | None = None):
        self.parent = parent
        self.members = tuple(int(m) for m in members)
        self._member_set: frozenset[int] | None = None
        self._normal = normal
        self._abelian = abelian

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        if self._member_set is None:
            self._member_set = frozenset(self.members)
        return self._member_set

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def __contains__(self, i: int) -> bool:
        return i in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def is_normal(self) -> bool:
        if self._normal is None:
            m = np.array(self.members, dtype=np.int32)
            mul, inv = self.parent.mul_table, self.parent.inv_table
            conj = mul[mul[:, m], inv[:, None]]
            self._normal = bool(np.isin(conj, m).all())
        return self._normal

    def is_abelian(self) -> bool:
        if self._abelian is None:
            m = np.array(self.members, dtype=np.int32)
            block = self.parent.mul_table[np.ix_(m, m)]
            self._abelian = bool((block == block.T).all())
        return self._abelian

    def perms(self) -> tuple[Perm, ...]:
        return tuple(self.parent.elements[i] for i in self.members)

    def generating_subset(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by ascending index."""
        mul = self.parent.mul_table
        gens: list[int] = []
        known = {0}
        for m in self.members:
            if m in known:
                continue
            gens.append(m)
            known = set(
                int(x) for x in kernels.subgroup_closure(mul, np.array(gens, dtype=np.int32))
            )
            if len(known) == len(self.members):
                break
        return tuple(gens)

    def as_group(self, max_order: int = MAX_ORDER) -> FiniteGroup:
        """Re-close this handle's permutations as a standalone group."""
        gens = [self.parent.elements[i] for i in self.generating_subset()]
        return close(self.parent.degree, gens, max_order=max_order)

    def intersection(self, other: "SubgroupHandle") -> "SubgroupHandle":
        assert other.parent is self.parent
        members = tuple(sorted(self.member_set & other.member_set))
        return SubgroupHandle(self.parent, members)

    def __le__(self, other: "SubgroupHandle") -> bool:
        return self.member_set <= other.member_set

    def __lt__(self, other: "SubgroupHandle") -> bool:
        return self.member_set < other.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} of {self.parent.order})"


def _member_indices(S: Union[SubgroupHandle, Iterable[int]]) -> list[int]:
    if isinstance(S, SubgroupHandle):
        return list(S.members)
    return sorted(set(int(i) for i in S))


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> SubgroupHandle:
    """Least subgroup of G containing the given element indices."""
    seeds = sorted(set(int(i) for i in gens))
    for s in seeds:
        if not 0 <= s < G.order:
            raise ValueError(f"element index {s} out of range")
    members = kernels.subgroup_closure(G.mul_table, np.array(seeds, dtype=np.int32))
    return SubgroupHandle(G, tuple(int(x) for x in members))


def normal_closure(G: FiniteGroup, S: Union[SubgroupHandle, Iterable[int]]) -> SubgroupHandle:
    """Least normal subgroup of G containing S."""
    seeds = _member_indices(S)
    m = np.array(seeds, dtype=np.int32)
    mul, inv = G.mul_table, G.inv_table
    conj = mul[mul[:, m], inv[:, None]]
    gens = np.unique(conj).astype(np.int32)
    members = kernels.subgroup_closure(mul, gens)
    return SubgroupHandle(G, tuple(int(x) for x in members), normal=True)


def centralizer(G: FiniteGroup, S: Union[SubgroupHandle, Iterable[int]]) -> SubgroupHandle:
    """Elements commuting with every member of S."""
    m = np.array(_member_indices(S), dtype=np.int32)
    mul = G.mul_table
    mask = (mul[:, m] == mul[m, :].T).all(axis=1)
    return SubgroupHandle(G, tuple(int(i) for i in np.nonzero(mask)[0]))


def normalizer(G: FiniteGroup, S: Union[SubgroupHandle, Iterable[int]]) -> SubgroupHandle:
    """Elements g with g S g^-1 = S."""
    m = np.array(_member_indices(S), dtype=np.int32)
    mul, inv = G.mul_table, G.inv_table
    conj = mul[mul[:, m], inv[:, None]]
    mask = np.isin(conj, m).all(axis=1)
    return SubgroupHandle(G, tuple(int(i) for i in np.nonzero(mask)[0]))


def center(G: FiniteGroup) -> SubgroupHandle:
    mul = G.mul_table
    mask = (mul == mul.T).all(axis=1)
    return SubgroupHandle(
        G, tuple(int(i) for i in np.nonzero(mask)[0]), normal=True, abelian=True
    )


class Homomorphism:
    """A validated total map between two finite groups, stored by index.

    `image_of[i]` is the codomain index of the image of domain element i.
    `mono` and `epi` are computed at construction.
    """

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, image_of: np.ndarray):
        self.domain = domain
        self.codomain = codomain
        self.image_of = np.ascontiguousarray(image_of, dtype=np.int32)
        self.image_of.setflags(write=False)
        self.mono: bool = int(np.count_nonzero(self.image_of == 0)) == 1
        self.epi: bool = len(np.unique(self.image_of)) == codomain.order

    def __call__(self, i: int) -> int:
        return int(self.image_of[i])

    def image_handle(self) -> SubgroupHandle:
        members = tuple(int(x) for x in np.unique(self.image_of))
        return SubgroupHandle(self.codomain, members)

    def kernel_handle(self) -> SubgroupHandle:
        members = tuple(int(x) for x in np.nonzero(self.image_of == 0)[0])
        return SubgroupHandle(self.domain, members, normal=True)

    def inverse(self) -> "Homomorphism":
        if not (self.mono and self.epi):
            raise NotMonomorphism("inverse requires an isomorphism")
        inv = np.empty(self.domain.order, dtype=np.int32)
        inv[self.image_of] = np.arange(self.domain.order, dtype=np.int32)
        return Homomorphism(self.codomain, self.domain, inv)

    def validate_exhaustive(self) -> None:
        """Check the pair law on all |domain|^2 pairs; raises on failure.

        Construction already guarantees the law (one-step validation along
        the closure tree); this is the independent test-mode check.
        """
        dom, cod = self.domain.mul_table, self.codomain.mul_table
        img = self.image_of
        lhs = img[dom]
        rhs = cod[img[:, None], img[None, :]]
        if not np.array_equal(lhs, rhs):
            raise NotAHomomorphism("pair law fails on exhaustive check")

    def __repr__(self) -> str:
        tags = "".join(t for t, f in (("m", self.mono), ("e", self.epi)) if f)
        return (
            f"Homomorphism({self.domain.order} -> {self.codomain.order}"
            f"{', ' + tags if tags else ''})"
        )


def hom_from_generator_images(
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Sequence[Union[Perm, int]],
) -> Homomorphism:
    """Extend a generator map along the domain's closure words.

    Raises NotAHomomorphism if the extension reaches conflicting images or
    the one-step law fails (either way the map does not exist).
    """
    if len(images) != len(domain.generators):
        raise ValueError(
            f"need {len(domain.generators)} generator images, got {len(images)}"
        )
    idxs = [
        codomain.index_of(p) if isinstance(p, Perm) else int(p) for p in images
    ]
    image = kernels.try_extend(
        domain._parent,
        domain._via,
        domain._gen_cols,
        codomain.mul_table,
        np.array(idxs, dtype=np.int32).reshape(len(idxs)),
    )
    if image is None:
        raise NotAHomomorphism(
            "generator images do not extend to a homomorphism"
        )
    return Homomorphism(domain, codomain, image)


def identity_hom(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, np.arange(G.order, dtype=np.int32))


def compose_homs(outer: Homomorphism, inner: Homomorphism) -> Homomorphism:
    """outer after inner; inner's codomain must be outer's domain."""
    if inner.codomain is not outer.domain:
        raise ValueError("homomorphisms do not chain")
    return Homomorphism(inner.domain, outer.codomain, outer.image_of[inner.image_of])


def quotient(G: FiniteGroup, N: SubgroupHandle) -> tuple[FiniteGroup, Homomorphism]:
    """The image of the left-coset action of G on G/N, with the projection.

    Cosets are numbered by least element index, so the quotient is
    deterministic. The projection's kernel is checked to equal N.
    """
    if not N.is_normal():
        raise NotNormal("quotient requires a normal subgroup")
    mul = G.mul_table
    members = np.array(N.members, dtype=np.int32)
    n = G.order
    coset_id = np.full(n, -1, dtype=np.int32)
    reps: list[int] = []
    for i in range(n):
        if coset_id[i] < 0:
            coset_id[mul[i, members]] = len(reps)
            reps.append(i)
    reps_arr = np.array(reps, dtype=np.int32)
    gen_perms = [
        Perm(tuple(int(x) for x in coset_id[mul[gi, reps_arr]]))
        for gi in G.gen_indices
    ]
    Q = close(len(reps), gen_perms, max_order=n)
    proj = hom_from_generator_images(G, Q, gen_perms)
    if proj.kernel_handle().members != N.members:
        raise RuntimeError("projection kernel does not match N")  # unreachable
    return Q, proj


@dataclass(frozen=True)
class DirectProduct:
    """A direct product with its two factor embeddings."""

    group: FiniteGroup
    embed_left: Homomorphism
    embed_right: Homomorphism
    left: SubgroupHandle
    right: SubgroupHandle


def direct_product(A: FiniteGroup, B: FiniteGroup, max_order: int = MAX_ORDER) -> DirectProduct:
    """A x B on deg(A)+deg(B) points, factors returned as normal handles.

    The defining equations (trivial intersection, full product, both factors
    normal) are asserted on every construction.
    """
    order = A.order * B.order
    if order > max_order:
        raise OrderBoundExceeded(f"|A|*|B| = {order} > {max_order}")
    da, db = A.degree, B.degree
    left_perms = [
        Perm(tuple(p.images) + tuple(range(da, da + db))) for p in A.generators
    ]
    right_perms = [
        Perm(tuple(range(da)) + tuple(x + da for x in p.images)) for p in B.generators
    ]
    P = close(da + db, left_perms + right_perms, max_order=max_order)
    if P.order != order:
        raise RuntimeError("direct product closure has wrong order")  # unreachable
    embed_left = hom_from_generator_images(A, P, left_perms)
    embed_right = hom_from_generator_images(B, P, right_perms)
    left = embed_left.image_handle()
    right = embed_right.image_handle()
    if not (
        left.member_set & right.member_set == {0}
        and left.order * right.order == order
        and left.is_normal()
        and right.is_normal()
    ):
        raise RuntimeError("direct product factor equations fail")  # unreachable
    left._normal = right._normal = True
    return DirectProduct(P, embed_left, embed_right, left, right)
