"""Automorphism groups, completeness, holomorphs, and semidirect products.

Automorphisms are represented as permutations of the base group's element
indices (fixing index 0), which makes Hol(G) a literal permutation group on
the carrier of G: it is generated by the left translations together with
the automorphism permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import InvalidAction, OrderBoundExceeded
from .group import (
    MAX_ORDER,
    FiniteGroup,
    Homomorphism,
    SubgroupHandle,
    center,
    close,
    hom_from_generator_images,
    subgroup_generated,
)
from .iso import all_automorphism_images, class_size_by_element
from .named import cyclic
from .perm import Perm

AUT_CAP = 512

_AUT_IMAGE_CACHE: dict[str, tuple[tuple[int, ...], ...]] = {}


@dataclass(frozen=True)
class AutGroup:
    """Aut(base) as a permutation group on base's element indices."""

    base: FiniteGroup
    as_perm_group: FiniteGroup
    inner: SubgroupHandle
    out_order: int

    @property
    def order(self) -> int:
        return self.as_perm_group.order


def automorphism_group(G: FiniteGroup, aut_cap: int = AUT_CAP) -> AutGroup:
    """The full automorphism group, by generator-image backtracking.

    Search results are cached by product-table hash; groups with identical
    tables share the search.
    """
    if G.order > aut_cap:
        raise OrderBoundExceeded(f"|G| = {G.order} exceeds the Aut search cap {aut_cap}")
    key = G.table_hash()
    perms = _AUT_IMAGE_CACHE.get(key)
    if perms is None:
        found = all_automorphism_images(G)
        perms = tuple(sorted(tuple(int(x) for x in im) for im in found))
        _AUT_IMAGE_CACHE[key] = perms
    _check_aut_invariants(G, perms)
    A = _group_from_element_set(G.order, perms)
    conj_perms = [
        Perm(
            tuple(
                int(G.mul_table[G.mul_table[g, x], G.inv_table[g]])
                for x in range(G.order)
            )
        )
        for g in G.gen_indices
    ]
    inner = subgroup_generated(A, [A.index_of(p) for p in conj_perms])
    inner._normal = True
    z = center(G).order
    if inner.order * z != G.order:
        raise RuntimeError("inner automorphism count mismatch")  # unreachable
    return AutGroup(G, A, inner, A.order // inner.order)


def _check_aut_invariants(G: FiniteGroup, perms) -> None:
    # every automorphism preserves element orders and conjugacy class sizes
    arr = np.array(perms, dtype=np.int32)
    orders = G.element_orders()
    sizes = class_size_by_element(G)
    if not (orders[arr] == orders).all() or not (sizes[arr] == sizes).all():
        raise RuntimeError("automorphism search produced an invalid map")


def _group_from_element_set(degree: int, perms) -> FiniteGroup:
    """Close a small generating subset of a known element set; asserts the
    closure reproduces the set exactly."""
    target = len(perms)
    sel: list[Perm] = []
    grp = close(degree, [], max_order=1)
    elemset = {grp.elements[0].images}
    for t in perms:
        if grp.order == target:
            break
        if t in elemset:
            continue
        sel.append(Perm(t))
        grp = close(degree, sel, max_order=target)
        elemset = {p.images for p in grp.elements}
    if grp.order != target or elemset != set(perms):
        raise RuntimeError("generating subset does not reproduce the element set")
    return grp


def is_complete(G: FiniteGroup, aut_cap: int = AUT_CAP) -> bool:
    """Trivial center and every automorphism inner."""
    if center(G).order != 1:
        return False
    return automorphism_group(G, aut_cap=aut_cap).out_order == 1


@dataclass(frozen=True)
class Holomorph:
    """Hol(base) on the carrier of base, with both canonical embeddings."""

    group: FiniteGroup
    embed_base: Homomorphism
    embed_aut: Homomorphism
    base_image: SubgroupHandle
    aut_image: SubgroupHandle


def holomorph(
    G: FiniteGroup, aut_cap: int = AUT_CAP, max_order: int = MAX_ORDER
) -> Holomorph:
    """The permutation group on |G| points generated by left translations
    and automorphisms; order |G|*|Aut(G)|, translation image normal."""
    A = automorphism_group(G, aut_cap=aut_cap)
    order = G.order * A.order
    if order > max_order:
        raise OrderBoundExceeded(f"|Hol(G)| = {order} > {max_order}")
    trans = [
        Perm(tuple(int(x) for x in G.mul_table[g])) for g in G.gen_indices
    ]
    autgens = list(A.as_perm_group.generators)
    H = close(G.order, trans + autgens, max_order=order)
    if H.order != order:
        raise RuntimeError("holomorph closure has wrong order")  # unreachable
    embed_base = hom_from_generator_images(G, H, trans)
    embed_aut = hom_from_generator_images(A.as_perm_group, H, autgens)
    base_image = embed_base.image_handle()
    aut_image = embed_aut.image_handle()
    if not (
        embed_base.mono
        and embed_aut.mono
        and base_image.is_normal()
        and len(base_image.member_set & aut_image.member_set) == 1
    ):
        raise RuntimeError("holomorph embeddings fail their equations")  # unreachable
    base_image._normal = True
    return Holomorph(H, embed_base, embed_aut, base_image, aut_image)


@dataclass(frozen=True)
class Semidirect:
    """N acted on by H, as a permutation group on the carrier N x H."""

    group: FiniteGroup
    embed_normal: Homomorphism
    embed_acting: Homomorphism
    normal_part: SubgroupHandle
    acting_part: SubgroupHandle


def semidirect(
    N: FiniteGroup,
    H: FiniteGroup,
    alpha: Homomorphism,
    max_order: int = MAX_ORDER,
) -> Semidirect:
    """Semidirect product with multiplication (n1,h1)(n2,h2) =
    (n1 * alpha(h1)(n2), h1*h2), realized through its left regular
    representation on the |N|*|H| carrier pairs.

    `alpha` must map H into a permutation group on N's element indices whose
    generator images respect N's product table.
    """
    if alpha.domain is not H:
        raise InvalidAction("alpha must have H as its domain")
    if alpha.codomain.degree != N.order:
        raise InvalidAction("alpha images must permute N's element indices")
    for hgen in H.gen_indices:
        p = np.array(
            alpha.codomain.elements[alpha(hgen)].images, dtype=np.int32
        )
        if p[0] != 0 or not np.array_equal(
            p[N.mul_table], N.mul_table[p[:, None], p[None, :]]
        ):
            raise InvalidAction("alpha image does not respect N's product")
    order = N.order * H.order
    if order > max_order:
        raise OrderBoundExceeded(f"|N|*|H| = {order} > {max_order}")
    nh = H.order
    a_idx = np.repeat(np.arange(N.order, dtype=np.int32), nh)
    b_idx = np.tile(np.arange(nh, dtype=np.int32), N.order)
    n_gens = [
        Perm(tuple(int(v) for v in N.mul_table[x, a_idx] * nh + b_idx))
        for x in N.gen_indices
    ]
    h_gens = []
    for y in H.gen_indices:
        p = np.array(alpha.codomain.elements[alpha(y)].images, dtype=np.int32)
        h_gens.append(
            Perm(tuple(int(v) for v in p[a_idx] * nh + H.mul_table[y, b_idx]))
        )
    S = close(order, n_gens + h_gens, max_order=order)
    if S.order != order:
        raise RuntimeError("semidirect closure has wrong order")  # unreachable
    embed_normal = hom_from_generator_images(N, S, n_gens)
    embed_acting = hom_from_generator_images(H, S, h_gens)
    normal_part = embed_normal.image_handle()
    acting_part = embed_acting.image_handle()
    if not (
        embed_normal.mono
        and embed_acting.mono
        and normal_part.is_normal()
        and len(normal_part.member_set & acting_part.member_set) == 1
        and normal_part.order * acting_part.order == order
    ):
        raise RuntimeError("semidirect part equations fail")  # unreachable
    normal_part._normal = True
    return Semidirect(S, embed_normal, embed_acting, normal_part, acting_part)


def cyclic_power_semidirect(
    n: int,
    m: int,
    e: int,
    max_order: int = MAX_ORDER,
) -> Semidirect:
    """C_n acted on by C_m, the C_m generator acting as x -> x^e.

    Needs gcd(e, n) = 1 and e^m = 1 (mod n). The action maps into the
    cyclic group generated by the power map (a subgroup of Aut(C_n)).
    """
    if n < 1 or m < 1:
        raise InvalidAction("cyclic orders must be positive")
    e = e % n if n > 1 else 0
    if n > 1 and gcd(e, n) != 1:
        raise InvalidAction(f"exponent {e} is not a unit mod {n}")
    if n > 1 and pow(e, m, n) != 1:
        raise InvalidAction(f"exponent {e} does not have order dividing {m} mod {n}")
    N, H = cyclic(n), cyclic(m)
    sigma = Perm(tuple((i * e) % n for i in range(n))) if n > 1 else Perm((0,))
    powers = close(max(n, 1), [sigma], max_order=m if n > 1 else 1)
    images = [powers.index_of(sigma)] if H.generators else []
    alpha = hom_from_generator_images(H, powers, images)
    return semidirect(N, H, alpha, max_order=max_order)
