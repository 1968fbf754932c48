import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og10hodge import (
    DuplicateEntry,
    HodgeDiamond,
    NegativeMultiplicity,
    NegativeValue,
    VirtualDiamond,
    make_diamond,
)
from known_diamonds import K3_TRIPLES

K3 = make_diamond(K3_TRIPLES)


def virtual_diamonds(max_coord=3, max_mult=5, max_entries=4):
    return st.dictionaries(
        st.tuples(st.integers(0, max_coord), st.integers(0, max_coord)),
        st.integers(-max_mult, max_mult),
        max_size=max_entries,
    ).map(VirtualDiamond)


def test_make_diamond_edge_cases():
    assert make_diamond([]) == VirtualDiamond.zero()
    assert make_diamond([(0, 0, 1)]) == VirtualDiamond.unit()
    assert make_diamond([]).total_dim() == 0
    assert VirtualDiamond.zero().is_nonnegative()


def test_make_diamond_builds_the_k3_diamond():
    assert K3[1, 1] == 20
    assert K3[2, 0] == 1
    assert K3[5, 5] == 0
    assert K3.total_dim() == 24


def test_make_diamond_rejects_duplicates():
    with pytest.raises(DuplicateEntry):
        make_diamond([(0, 0, 1), (0, 0, 2)])


def test_make_diamond_rejects_bad_values():
    with pytest.raises(NegativeValue):
        make_diamond([(-1, 0, 1)])
    with pytest.raises(NegativeValue):
        make_diamond([(0, 0, 0)])
    with pytest.raises(NegativeValue):
        make_diamond([(0, 0, -2)])


def test_zero_entries_are_pruned():
    assert VirtualDiamond({(0, 0): 0}) == VirtualDiamond.zero()
    assert not VirtualDiamond({(1, 1): 0})


def test_equality_ignores_the_hodge_refinement():
    assert VirtualDiamond({(0, 0): 1}) == HodgeDiamond({(0, 0): 1})
    assert hash(VirtualDiamond({(0, 0): 1})) == hash(HodgeDiamond({(0, 0): 1}))


def test_add_and_subtract_cancel():
    assert K3 - K3 == VirtualDiamond.zero()
    assert K3 + (-K3) == VirtualDiamond.zero()


def test_scalar_multiple():
    doubled = K3 + K3
    assert 2 * K3 == doubled
    assert doubled[1, 1] == 40
    assert 0 * K3 == VirtualDiamond.zero()
    assert (-1) * K3 == -K3


def test_tensor_with_unit_is_identity():
    assert K3 * VirtualDiamond.unit() == K3


def test_tensor_square_of_k3():
    sq = K3 * K3
    assert sq[1, 1] == 40
    # three pair families land in (2,2): 2 + 2 + 20*20
    assert sq[2, 2] == 404
    assert sq.betti(4) == 486 == 2 * 1 + 22 * 22
    assert sq.total_dim() == 24 * 24


def test_lshift_moves_the_diagonal():
    assert VirtualDiamond.unit().lshift(1) == VirtualDiamond({(1, 1): 1})
    shifted = K3.lshift(1)
    assert shifted[1, 1] == 1
    assert shifted[2, 2] == 20
    assert shifted[3, 3] == 1
    assert shifted.total_dim() == K3.total_dim()
    far = K3.lshift(4)
    assert far[5, 5] == 20
    assert far.max_weight() == 12
    assert min(p + q for p, q in far.support()) == 8


def test_lshift_composes_additively():
    assert K3.lshift(2).lshift(3) == K3.lshift(5)
    assert K3.lshift(0) == K3


def test_lshift_rejects_negative_shift():
    with pytest.raises(NegativeValue):
        K3.lshift(-1)


def test_betti_and_euler_of_k3():
    assert K3.betti(0) == 1
    assert K3.betti(2) == 22
    assert K3.betti(4) == 1
    assert K3.betti(1) == 0
    assert K3.euler() == 24
    assert K3.betti_numbers() == (1, 0, 22, 0, 1)


def test_euler_of_unit_and_zero():
    assert VirtualDiamond.unit().euler() == 1
    assert VirtualDiamond.zero().euler() == 0
    assert VirtualDiamond.zero().betti_numbers() == ()


def test_to_hodge_certifies_nonnegativity():
    virtual = K3 - 2 * VirtualDiamond.unit()
    assert not virtual.is_nonnegative()
    with pytest.raises(NegativeMultiplicity):
        virtual.to_hodge()
    restored = virtual + 2 * VirtualDiamond.unit()
    assert restored.to_hodge() == K3


def test_hodge_diamond_rejects_negative_entries():
    with pytest.raises(NegativeMultiplicity):
        HodgeDiamond({(0, 0): -1})


@given(a=virtual_diamonds(), b=virtual_diamonds(), c=virtual_diamonds())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + VirtualDiamond.zero() == a
    assert a * VirtualDiamond.unit() == a
    assert a - a == VirtualDiamond.zero()


@given(a=virtual_diamonds(), b=virtual_diamonds(), j=st.integers(0, 3), k=st.integers(0, 3))
def test_lshift_is_multiplication_by_a_shifted_unit(a, b, j, k):
    assert a.lshift(j) * b.lshift(k) == (a * b).lshift(j + k)
    assert (a + b).lshift(k) == a.lshift(k) + b.lshift(k)


@given(a=virtual_diamonds(), b=virtual_diamonds())
def test_euler_and_dimension_are_multiplicative(a, b):
    assert (a * b).euler() == a.euler() * b.euler()
    assert (a * b).total_dim() == a.total_dim() * b.total_dim()


@given(a=virtual_diamonds(), b=virtual_diamonds())
@settings(max_examples=50)
def test_betti_is_additive_and_convolutive(a, b):
    top = max(a.max_weight(), 0) + max(b.max_weight(), 0)
    for d in range(top + 1):
        assert (a + b).betti(d) == a.betti(d) + b.betti(d)
        assert (a * b).betti(d) == sum(
            a.betti(i) * b.betti(d - i) for i in range(d + 1)
        )
