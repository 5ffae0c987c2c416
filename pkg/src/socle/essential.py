"""Essential subgroups, the essential core e(G), socles, and essential
extensions.

Definitions (finite groups throughout):

- A normal subgroup E of G is *essential* if every nontrivial normal
  subgroup of G meets E nontrivially. G is essential in itself; the trivial
  subgroup is essential only in the trivial group.
- e(G), the *essential core*, is the intersection of all essential
  subgroups of G (e(G) = {1} for trivial G).
- The *socle* is the subgroup generated by all minimal normal subgroups,
  trivial when there are none.

In a finite group every nontrivial normal subgroup contains a minimal one,
so essentiality reduces to meeting every *minimal* normal subgroup
nontrivially; `is_essential` uses that reduction and
`is_essential_definitional` keeps the quantifier over all normal subgroups
as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import NotAbelian, NotMonomorphism, NotNormal, OrderBoundExceeded, TrivialGroup
from .group import (
    MAX_ORDER,
    FiniteGroup,
    Homomorphism,
    SubgroupHandle,
    compose_homs,
    direct_product,
    hom_from_generator_images,
    quotient,
    subgroup_generated,
)
from .lattice import (
    maximal_trivial_intersector,
    minimal_normal_subgroups,
    normal_complement,
    normal_subgroups,
)
from .named import cyclic


@dataclass(frozen=True)
class EssentialCertificate:
    """Outcome of an essentiality check, with re-checkable witness data.

    For a not-essential verdict, `blocker` is a nontrivial normal subgroup
    meeting the subject trivially. For an essential verdict, `meets` pairs
    every minimal normal subgroup with a shared nontrivial element.
    """

    subject: SubgroupHandle
    essential: bool
    blocker: SubgroupHandle | None = None
    meets: tuple[tuple[SubgroupHandle, int], ...] = field(default=())

    def recheck(self) -> bool:
        """Re-verify the witness data from scratch."""
        G = self.subject.parent
        if not self.essential:
            W = self.blocker
            return (
                W is not None
                and not W.is_trivial
                and W.is_normal()
                and len(W.member_set & self.subject.member_set) == 1
            )
        minimals = minimal_normal_subgroups(G)
        if {m.members for m in minimals} != {m.members for m, _ in self.meets}:
            return False
        return all(
            x != 0 and x in m and x in self.subject for m, x in self.meets
        )


def is_essential(G: FiniteGroup, E: SubgroupHandle) -> EssentialCertificate:
    """Certify whether E is essential in G (E must be normal).

    Uses the minimal-normal reduction; in the trivial group the only
    subgroup is essential.
    """
    if not E.is_normal():
        raise NotNormal("essentiality is defined for normal subgroups")
    if G.order == 1:
        return EssentialCertificate(E, True)
    meets = []
    for M in minimal_normal_subgroups(G):
        shared = sorted(E.member_set & M.member_set)
        if len(shared) == 1:
            return EssentialCertificate(E, False, blocker=M)
        meets.append((M, shared[1]))
    return EssentialCertificate(E, True, meets=tuple(meets))


def is_essential_definitional(G: FiniteGroup, E: SubgroupHandle) -> bool:
    """Oracle: scan every nontrivial normal subgroup for a trivial meet."""
    if not E.is_normal():
        raise NotNormal("essentiality is defined for normal subgroups")
    for N in normal_subgroups(G).normals:
        if N.is_trivial:
            continue
        if len(N.member_set & E.member_set) == 1:
            return False
    return True


def essential_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    """All essential members of the normal lattice, in lattice order."""
    lat = normal_subgroups(G)
    if G.order == 1:
        return [lat.trivial]
    minimals = lat.minimal
    return [
        E
        for E in lat.normals
        if all(len(E.member_set & M.member_set) > 1 for M in minimals)
    ]


def essential_core(G: FiniteGroup) -> SubgroupHandle:
    """e(G): the intersection of all essential subgroups of G."""
    ess = essential_subgroups(G)
    members = reduce(lambda a, b: a & b, (E.member_set for E in ess))
    return SubgroupHandle(G, tuple(sorted(members)), normal=True)


def socle(G: FiniteGroup) -> SubgroupHandle:
    """Join of all minimal normal subgroups; trivial if there are none."""
    minimals = minimal_normal_subgroups(G)
    if not minimals:
        return G.trivial_handle()
    gens: set[int] = set()
    for M in minimals:
        gens.update(M.members)
    h = subgroup_generated(G, gens)
    h._normal = True
    return h


def has_proper_essential(G: FiniteGroup) -> bool:
    return any(not E.is_whole for E in essential_subgroups(G))


@dataclass(frozen=True)
class SplitConditions:
    """The equivalent characterizations of groups with no proper essential
    subgroup, evaluated independently; they agree on every finite group."""

    no_proper_essential: bool
    every_normal_splits: bool
    normals_inherit: bool
    relative_splits: bool
    socle_is_whole: bool

    def flags(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.no_proper_essential,
            self.every_normal_splits,
            self.normals_inherit,
            self.relative_splits,
            self.socle_is_whole,
        )

    def agree(self) -> bool:
        return len(set(self.flags())) == 1

    def as_dict(self) -> dict[str, bool]:
        return {
            "no_proper_essential": self.no_proper_essential,
            "every_normal_splits": self.every_normal_splits,
            "normals_inherit": self.normals_inherit,
            "relative_splits": self.relative_splits,
            "socle_is_whole": self.socle_is_whole,
        }


def split_conditions(G: FiniteGroup) -> SplitConditions:
    """Evaluate the five characterizations separately.

    - no_proper_essential: no essential subgroup other than G.
    - every_normal_splits: each normal subgroup has a normal complement.
    - normals_inherit: each nontrivial normal subgroup, re-closed as a
      standalone group, itself has no proper essential subgroup.
    - relative_splits: for every proper normal N and normal A >= N there is
      a normal B >= N with AB = G and A cap B = N.
    - socle_is_whole: soc(G) = G.
    """
    lat = normal_subgroups(G)
    a = not has_proper_essential(G)
    b = all(normal_complement(G, N) is not None for N in lat.normals)
    c = all(
        not has_proper_essential(N.as_group())
        for N in lat.normals
        if not N.is_trivial
    )
    e = True
    whole = G.order
    for N in lat.normals:
        if N.is_whole:
            continue
        nset = N.member_set
        for A in lat.normals:
            if not nset <= A.member_set:
                continue
            found = False
            for B in lat.normals:
                if (
                    nset <= B.member_set
                    and (A.member_set & B.member_set) == nset
                    and A.order * B.order == whole * N.order
                ):
                    found = True
                    break
            if not found:
                e = False
                break
        if not e:
            break
    return SplitConditions(a, b, c, e, socle(G).is_whole)


def essentialize(phi: Homomorphism) -> tuple[FiniteGroup, Homomorphism, SubgroupHandle]:
    """Turn a normal embedding into an essential one by quotienting.

    For a monomorphism phi with normal image, absorb a maximal normal
    subgroup T meeting the image trivially: the composite of phi with the
    projection onto codomain/T is again a monomorphism and its image is
    essential there. Returns (quotient group, composite, T).
    """
    if not phi.mono:
        raise NotMonomorphism("essentialize requires an injective embedding")
    img = phi.image_handle()
    if not img.is_normal():
        raise NotNormal("essentialize requires the image to be normal")
    Gbar = phi.codomain
    T = maximal_trivial_intersector(Gbar, img)
    Q, proj = quotient(Gbar, T)
    psi = compose_homs(proj, phi)
    if not psi.mono:
        raise RuntimeError("composite lost injectivity")  # unreachable
    psi_img = psi.image_handle()
    if not psi_img.is_normal():
        raise RuntimeError("composite image not normal")  # unreachable
    cert = is_essential(Q, psi_img)
    if not cert.essential:
        raise RuntimeError("essentialized image is not essential")  # unreachable
    return Q, psi, T


@dataclass(frozen=True)
class PrimaryFactor:
    """One cyclic factor C_{p^exponent} with a realizing generator index."""

    prime: int
    exponent: int
    generator: int

    @property
    def order(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class PrimaryDecomposition:
    """A finite abelian group as a product of cyclic prime-power factors."""

    factors: tuple[PrimaryFactor, ...]
    iso: Homomorphism  # from the group onto the cyclic-product model
    model: FiniteGroup


def abelian_primary_decomposition(G: FiniteGroup) -> PrimaryDecomposition:
    """Split an abelian group into cyclic prime-power factors.

    Peels off a maximal-order cyclic subgroup and a complement (found in the
    subgroup lattice) until nothing is left, then refines each invariant
    factor into its prime-power parts. The returned isomorphism onto the
    model product is fully validated.
    """
    if not G.is_abelian():
        raise NotAbelian("primary decomposition requires an abelian group")
    orders = G.element_orders()
    lat = normal_subgroups(G)  # all subgroups: the group is abelian
    invariant_gens: list[int] = []
    current = frozenset(range(G.order))
    while len(current) > 1:
        maxo = max(int(orders[i]) for i in current)
        g = min(i for i in current if int(orders[i]) == maxo)
        cyc = subgroup_generated(G, [g]).member_set
        target = len(current) // maxo
        comp = None
        for T in lat.normals:
            if (
                T.order == target
                and T.member_set <= current
                and len(T.member_set & cyc) == 1
            ):
                comp = T
                break
        if comp is None:
            raise RuntimeError("no cyclic complement found")  # unreachable
        invariant_gens.append(g)
        current = comp.member_set
    factors: list[PrimaryFactor] = []
    for g in invariant_gens:
        m = int(orders[g])
        for p, k in _factorize(m):
            factors.append(PrimaryFactor(p, k, G.power(g, m // p**k)))
    model = _cyclic_product([f.order for f in factors])
    lift = hom_from_generator_images(model, G, [f.generator for f in factors])
    if not (lift.mono and lift.epi):
        raise RuntimeError("decomposition map is not an isomorphism")  # unreachable
    return PrimaryDecomposition(tuple(factors), lift.inverse(), model)


def abelian_essential_extension(
    G: FiniteGroup, max_order: int = MAX_ORDER
) -> tuple[FiniteGroup, Homomorphism]:
    """A proper essential extension of a nontrivial abelian group.

    Lifts each primary factor C_{p^k} to C_{p^{k+1}}, embedding the old
    generator as the p-th power of the new one. The image then contains the
    socle of the extension (the product of the bottom C_p's), which for
    abelian groups forces essentiality; the certificate is checked anyway.
    """
    if not G.is_abelian():
        raise NotAbelian("constructive extension requires an abelian group")
    if G.order == 1:
        raise TrivialGroup("the trivial group is not extended")
    dec = abelian_primary_decomposition(G)
    ext_order = 1
    for f in dec.factors:
        ext_order *= f.prime ** (f.exponent + 1)
    if ext_order > max_order:
        raise OrderBoundExceeded(f"extension order {ext_order} > {max_order}")
    ext = _cyclic_product([f.prime ** (f.exponent + 1) for f in dec.factors],
                          max_order=max_order)
    images = [
        ext.power(ext.gen_indices[i], f.prime) for i, f in enumerate(dec.factors)
    ]
    lift = hom_from_generator_images(dec.model, ext, images)
    emb = compose_homs(lift, dec.iso)
    if not emb.mono:
        raise RuntimeError("extension embedding is not injective")  # unreachable
    img = emb.image_handle()
    img._normal = True  # abelian codomain: every subgroup is normal
    if img.is_whole:
        raise RuntimeError("extension is not proper")  # unreachable
    cert = is_essential(ext, img)
    if not cert.essential:
        raise RuntimeError("extension image is not essential")  # unreachable
    return ext, emb


def _cyclic_product(orders: list[int], max_order: int = MAX_ORDER) -> FiniteGroup:
    """Left-associated direct product of cyclic groups; the generator list
    keeps one generator per factor, in order."""
    if not orders:
        return cyclic(1)
    acc = cyclic(orders[0])
    for m in orders[1:]:
        acc = direct_product(acc, cyclic(m), max_order=max_order).group
    return acc


def _factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization [(p, multiplicity)], ascending p."""
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out
