import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from socle import (
    NotAHomomorphism,
    NotNormal,
    OrderBoundExceeded,
    Perm,
    center,
    centralizer,
    close,
    compose,
    compose_homs,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    hom_from_generator_images,
    identity_hom,
    is_isomorphic,
    normal_closure,
    normalizer,
    quaternion8,
    quotient,
    subgroup_generated,
    symmetric,
)

from _brute import closure_set, is_normal_set


def _s4():
    return symmetric(4)


# --- closure ---------------------------------------------------------------


def test_close_s3():
    g = close(3, [Perm.from_cycles(3, [(0, 1)]), Perm.from_cycles(3, [(0, 1, 2)])])
    assert g.order == 6
    assert {p.images for p in g.elements} == closure_set(
        [(1, 0, 2), (1, 2, 0)], 3
    )


def test_close_trivial():
    g = close(1, [])
    assert g.order == 1
    assert g.elements[0].is_identity()


def test_close_cyclic_powers():
    g = close(4, [Perm.from_cycles(4, [(0, 1, 2, 3)])])
    assert g.order == 4
    # BFS from the identity over a single generator lists the powers in order
    assert [g.element_order(i) for i in range(4)] == [1, 4, 2, 4]


def test_close_deterministic():
    gens = [Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(0, 1, 2, 3)])]
    a, b = close(4, gens), close(4, gens)
    assert a.elements == b.elements
    assert np.array_equal(a.mul_table, b.mul_table)


def test_close_order_bound():
    with pytest.raises(OrderBoundExceeded):
        close(5, [Perm.from_cycles(5, [(0, 1)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])], max_order=100)


def test_mul_table_matches_perm_composition():
    g = _s4()
    rng = np.random.default_rng(7)
    for _ in range(50):
        i, j = rng.integers(0, g.order, 2)
        assert g.elements[g.mul(i, j)] == compose(g.elements[i], g.elements[j])
    for i in range(g.order):
        assert g.elements[g.inv(i)] == g.elements[i].inverse()


# --- named constructors ----------------------------------------------------


def test_named_orders():
    assert symmetric(4).order == 24
    assert dihedral(12).order == 12
    assert cyclic(7).order == 7
    assert elementary_abelian(3, 2).order == 9


def test_quaternion8_unique_involution():
    q8 = quaternion8()
    assert q8.order == 8
    assert sum(1 for i in range(8) if q8.element_order(i) == 2) == 1


def test_klein_four_all_involutions():
    v4 = elementary_abelian(2, 2)
    assert v4.order == 4
    assert all(v4.element_order(i) == 2 for i in range(1, 4))


def test_dihedral_validation():
    with pytest.raises(ValueError):
        dihedral(7)
    with pytest.raises(ValueError):
        dihedral(2)
    assert dihedral(4).order == 4  # Klein group, faithful on 4 points


# --- subgroups -------------------------------------------------------------


def test_subgroup_generated_examples():
    g = _s4()
    t = g.index_of(Perm.from_cycles(4, [(0, 1)]))
    assert subgroup_generated(g, [t]).order == 2
    four = g.index_of(Perm.from_cycles(4, [(0, 1, 2, 3)]))
    assert subgroup_generated(g, [t, four]).order == 24
    assert subgroup_generated(g, []).members == (0,)


@settings(max_examples=30)
@given(st.data())
def test_lagrange(data):
    g = _s4()
    k = data.draw(st.integers(0, 3))
    gens = data.draw(st.lists(st.integers(0, g.order - 1), min_size=k, max_size=k))
    h = subgroup_generated(g, gens)
    assert g.order % h.order == 0


def test_normal_closure_examples():
    g = _s4()
    t = g.index_of(Perm.from_cycles(4, [(0, 1)]))
    assert normal_closure(g, [t]).order == 24
    dt = g.index_of(Perm.from_cycles(4, [(0, 1), (2, 3)]))
    v4 = normal_closure(g, [dt])
    assert v4.order == 4
    assert is_normal_set([p.images for p in g.elements], frozenset(p.images for p in v4.perms()))
    c12 = cyclic(12)
    h = subgroup_generated(c12, [3])
    assert normal_closure(c12, h).members == h.members


def test_centralizer_normalizer_center():
    q8 = quaternion8()
    assert center(q8).order == 2
    assert center(symmetric(3)).order == 1
    g = _s4()
    syl = subgroup_generated(
        g,
        [g.index_of(Perm.from_cycles(4, [(0, 1, 2, 3)])), g.index_of(Perm.from_cycles(4, [(0, 2)]))],
    )
    assert syl.order == 8
    assert normalizer(g, syl).members == syl.members
    rot = subgroup_generated(g, [g.index_of(Perm.from_cycles(4, [(0, 1, 2, 3)]))])
    assert centralizer(g, rot).members == rot.members


# --- quotients and products -------------------------------------------------


def test_quotient_s4_by_v4():
    g = _s4()
    dt = g.index_of(Perm.from_cycles(4, [(0, 1), (2, 3)]))
    v4 = normal_closure(g, [dt])
    q, proj = quotient(g, v4)
    assert q.order == 6
    assert q.degree == 6
    assert proj.kernel_handle().members == v4.members
    assert is_isomorphic(q, symmetric(3))
    proj.validate_exhaustive()


def test_quotient_edges():
    g = _s4()
    q, proj = quotient(g, g.trivial_handle())
    assert q.order == g.order and proj.mono and proj.epi
    q, proj = quotient(g, g.whole_handle())
    assert q.order == 1
    assert proj.kernel_handle().order == g.order


def test_quotient_requires_normal():
    g = _s4()
    s3 = subgroup_generated(
        g, [g.index_of(Perm.from_cycles(4, [(0, 1)])), g.index_of(Perm.from_cycles(4, [(0, 1, 2)]))]
    )
    with pytest.raises(NotNormal):
        quotient(g, s3)


def test_direct_product_examples():
    p = direct_product(cyclic(2), cyclic(3))
    assert p.group.order == 6 and p.group.is_abelian()
    p = direct_product(symmetric(3), symmetric(3))
    assert p.group.order == 36
    assert p.left.is_normal() and p.right.is_normal()
    assert p.left.member_set & p.right.member_set == {0}
    p = direct_product(_s4(), cyclic(1))
    assert is_isomorphic(p.group, _s4())


# --- homomorphisms ----------------------------------------------------------


def test_hom_c4_onto_c2():
    c4, c2 = cyclic(4), cyclic(2)
    h = hom_from_generator_images(c4, c2, [1])
    assert h.epi and not h.mono
    assert h.kernel_handle().order == 2
    h.validate_exhaustive()


def test_hom_order_obstruction():
    with pytest.raises(NotAHomomorphism):
        hom_from_generator_images(cyclic(2), cyclic(3), [1])


def test_identity_hom():
    g = _s4()
    h = hom_from_generator_images(g, g, list(g.generators))
    assert h.mono and h.epi
    assert np.array_equal(h.image_of, identity_hom(g).image_of)


def test_hom_pair_law_exhaustive_on_constructions():
    # the one-step construction law forces the full pair law; check it
    # exhaustively for a sample of constructed maps (domains <= 200)
    p = direct_product(quaternion8(), cyclic(3))
    p.embed_left.validate_exhaustive()
    p.embed_right.validate_exhaustive()
    comp = compose_homs(p.embed_left, identity_hom(quaternion8()))
    comp.validate_exhaustive()


def test_hom_inverse():
    c6 = cyclic(6)
    other = close(6, [Perm.from_cycles(6, [(0, 1, 2, 3, 4, 5)])])
    h = hom_from_generator_images(c6, other, [other.gen_indices[0]])
    inv = h.inverse()
    assert np.array_equal(inv.image_of[h.image_of], np.arange(6))


# --- isomorphism -----------------------------------------------------------


def test_is_isomorphic_examples():
    assert is_isomorphic(_s4(), _s4())
    assert not is_isomorphic(cyclic(4), elementary_abelian(2, 2))
    assert is_isomorphic(dihedral(6), symmetric(3))
    assert not is_isomorphic(dihedral(8), quaternion8())  # same profile sizes, differ in involutions


def test_is_isomorphic_cap():
    with pytest.raises(OrderBoundExceeded):
        is_isomorphic(_s4(), _s4(), search_cap=10)
