import itertools

import pytest
from hypothesis import given, settings, strategies as st

from algcomplete.catalog import cyclic, dihedral, symmetric
from algcomplete.errors import NotASubgroup, TableInvalid
from algcomplete.groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    brute_force_homs,
    direct_product,
    enumerate_homs,
    group_from_permutations,
    is_isomorphic,
    load_group,
    normal_subgroups,
    quotient,
    subgroup_closure,
    validate_table,
)


def test_validate_rejects_broken_identity():
    with pytest.raises(TableInvalid):
        validate_table([[1, 0], [0, 1]])


def test_validate_rejects_nonassociative():
    # a quasigroup table that is not a group
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(TableInvalid):
        validate_table(table)


def test_load_group_relabels_identity():
    # identity sits at index 1 in this table for Z2
    G = load_group({"cayley": [[1, 0], [0, 1]]})
    assert G.table == ((0, 1), (1, 0))


def test_permutation_closure_matches_symmetric_group():
    S3 = group_from_permutations(3, [(1, 0, 2), (1, 2, 0)])
    assert S3.order == 6
    assert S3.order_profile == ((1, 1), (2, 3), (3, 2))


def test_element_orders_cyclic():
    Z6 = cyclic(6)
    assert [Z6.element_order(k) for k in range(6)] == [1, 6, 3, 2, 3, 6]


def test_inverses_and_conjugation(S3):
    for g in range(S3.order):
        assert S3.mul(g, S3.inv(g)) == 0
        for x in range(S3.order):
            assert S3.conj(g, x) == S3.mul(S3.mul(g, x), S3.inv(g))


def test_subgroup_closure_generates_whole_group(S3):
    gens = S3.generators
    assert subgroup_closure(S3, gens) == tuple(range(6))


def test_subgroup_create_rejects_non_closed(S4):
    bad = [x for x in range(24) if S4.element_order(x) <= 3]
    with pytest.raises(NotASubgroup):
        Subgroup.create(S4, bad)


def test_all_subgroups_of_s3(S3):
    subs = all_subgroups(S3)
    assert sorted(s.order for s in subs) == [1, 2, 2, 2, 3, 6]
    assert sorted(s.order for s in normal_subgroups(S3)) == [1, 3, 6]


def test_quotient_s3_by_a3(S3):
    A3 = next(s for s in normal_subgroups(S3) if s.order == 3)
    Q, proj = quotient(S3, A3)
    assert Q.order == 2
    assert proj.kernel().elements == A3.elements


def test_direct_product_projections(Z2, Z3):
    P, (p1, p2), (i1, i2) = direct_product(Z2, Z3)
    assert P.order == 6
    assert p1.compose(i1).image == tuple(range(2))
    assert p2.compose(i2).image == tuple(range(3))
    assert is_isomorphic(P, cyclic(6)) is not None


def test_hom_enumeration_matches_brute_force(Z4, S3):
    for G, H in [(Z4, S3), (S3, Z4), (S3, S3)]:
        fast = {h.image for h in enumerate_homs(G, H)}
        assert fast == brute_force_homs(G, H)


def test_hom_kernel_image_duality(S4):
    S3 = symmetric(3)
    for h in enumerate_homs(S4, S3):
        assert h.kernel().order * len(set(h.image)) == S4.order


def test_iso_detects_non_isomorphic():
    assert is_isomorphic(cyclic(4), dihedral(2)) is None
    assert is_isomorphic(dihedral(3), symmetric(3)) is not None


def test_iso_rejects_q8_vs_d4():
    from algcomplete.catalog import dicyclic

    assert is_isomorphic(dicyclic(2), dihedral(4)) is None


@st.composite
def small_groups(draw):
    kind = draw(st.sampled_from(["cyclic", "dihedral", "symmetric"]))
    if kind == "cyclic":
        return cyclic(draw(st.integers(1, 12)))
    if kind == "dihedral":
        return dihedral(draw(st.integers(1, 6)))
    return symmetric(draw(st.integers(1, 4)))


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_group_axioms_hold(G):
    n = G.order
    assert all(G.mul(0, x) == x and G.mul(x, 0) == x for x in range(n))
    for g in range(n):
        assert G.mul(g, G.inv(g)) == 0


@settings(max_examples=20, deadline=None)
@given(small_groups(), st.data())
def test_conjugation_is_automorphism(G, data):
    g = data.draw(st.integers(0, G.order - 1))
    perm = G.conjugation_permutation(g)
    assert sorted(perm) == list(range(G.order))
    for x, y in itertools.product(range(G.order), repeat=2):
        assert perm[G.mul(x, y)] == G.mul(perm[x], perm[y])


@settings(max_examples=20, deadline=None)
@given(small_groups())
def test_homs_compose(G):
    H = symmetric(3)
    homs = enumerate_homs(G, H)[:4]
    for h in homs:
        for k in enumerate_homs(H, H)[:4]:
            kh = k.compose(h)
            assert all(kh(x) == k(h(x)) for x in range(G.order))
