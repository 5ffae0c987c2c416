import pytest
from hypothesis import given, strategies as st

from socle import Perm, compose

from _brute import compose_t, inverse_t


def _perm_strategy(max_degree=7):
    return st.integers(2, max_degree).flatmap(
        lambda n: st.permutations(range(n)).map(lambda im: Perm(tuple(im)))
    )


def _pair_strategy(max_degree=7):
    return st.integers(2, max_degree).flatmap(
        lambda n: st.tuples(
            st.permutations(range(n)).map(lambda im: Perm(tuple(im))),
            st.permutations(range(n)).map(lambda im: Perm(tuple(im))),
        )
    )


def test_compose_convention_pinned():
    # a = (0 1), b = (1 2): evaluating result(i) = a(b(i)) point by point
    # gives 0->1, 1->2, 2->0; the other orientation would give (2, 0, 1).
    a = Perm.from_cycles(3, [(0, 1)])
    b = Perm.from_cycles(3, [(1, 2)])
    assert compose(a, b).images == (1, 2, 0)
    assert compose(b, a).images == (2, 0, 1)


@given(_perm_strategy())
def test_identity_and_inverse_laws(p):
    e = Perm.identity(p.degree)
    assert compose(p, e) == p
    assert compose(e, p) == p
    assert compose(p, p.inverse()) == e
    assert compose(p.inverse(), p) == e


@given(_pair_strategy())
def test_compose_matches_brute(pair):
    a, b = pair
    assert compose(a, b).images == compose_t(a.images, b.images)
    assert a.inverse().images == inverse_t(a.images)


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        compose(Perm.identity(3), Perm.identity(4))


def test_not_a_bijection_rejected():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm((0, 3, 1))


def test_cycles_and_order():
    p = Perm.from_cycles(6, [(0, 1, 2), (3, 4)])
    assert p.cycles() == ((0, 1, 2), (3, 4))
    assert p.order() == 6
    assert str(p) == "(0 1 2)(3 4)"
    assert str(Perm.identity(4)) == "()"
    assert Perm.identity(5).order() == 1


def test_from_cycles_validation():
    with pytest.raises(ValueError):
        Perm.from_cycles(3, [(0, 1), (1, 2)])  # overlapping
    with pytest.raises(ValueError):
        Perm.from_cycles(3, [(0, 5)])  # out of range


@given(_perm_strategy())
def test_mul_operator_is_compose(p):
    assert (p * p.inverse()).is_identity()
