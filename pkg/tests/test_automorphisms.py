import pytest
from hypothesis import given, settings, strategies as st

from algcomplete.catalog import cyclic, dicyclic, dihedral, symmetric
from algcomplete.commutators import center, centralizer
from algcomplete.groups import Subgroup, is_isomorphic, normal_subgroups
from algcomplete.automorphisms import (
    automorphism_group,
    conjugation_morphism,
    inner_subgroup,
    outer_quotient,
    relative_classifier,
)

# independently known automorphism group orders
KNOWN_AUT_ORDERS = {
    ("cyclic", 1): 1,
    ("cyclic", 2): 1,
    ("cyclic", 3): 2,
    ("cyclic", 4): 2,
    ("cyclic", 5): 4,
    ("cyclic", 6): 2,
    ("cyclic", 8): 4,
    ("cyclic", 12): 4,
    ("dihedral", 2): 6,
    ("dihedral", 3): 6,
    ("dihedral", 4): 8,
    ("dihedral", 5): 20,
    ("dihedral", 6): 12,
    ("symmetric", 3): 6,
    ("symmetric", 4): 24,
    ("dicyclic", 2): 24,
}

MAKERS = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric, "dicyclic": dicyclic}


@pytest.mark.parametrize("kind,n", sorted(KNOWN_AUT_ORDERS))
def test_automorphism_group_orders(kind, n):
    G = MAKERS[kind](n)
    assert automorphism_group(G).order == KNOWN_AUT_ORDERS[(kind, n)]


def test_identity_is_index_zero(S4):
    aut = automorphism_group(S4)
    assert aut.elems[0] == tuple(range(24))
    assert aut.element_order(0) == 1


def test_ops_interface_matches_carrier(S3):
    aut = automorphism_group(S3)
    carrier = aut.carrier
    for i in range(aut.order):
        assert aut.element_order(i) == carrier.element_order(i)
        for j in range(aut.order):
            assert aut.mul(i, j) == carrier.mul(i, j)
        assert aut.mul(i, aut.inv(i)) == 0


def test_aut_s3_is_s3(S3):
    assert is_isomorphic(automorphism_group(S3).carrier, S3) is not None


def test_conjugation_kernel_is_center(S4, Z4, Z2xS3):
    for G in (S4, Z4, Z2xS3):
        c = conjugation_morphism(G)
        assert c.kernel().elements == center(G).elements


def test_inner_subgroup_is_normal_in_aut():
    for G in (symmetric(4), dihedral(4), dicyclic(2)):
        aut = automorphism_group(G)
        assert inner_subgroup(G, aut).is_normal()


def test_outer_quotients():
    Q, proj = outer_quotient(cyclic(4))
    assert Q.order == 2
    Q, proj = outer_quotient(symmetric(4))
    assert Q.order == 1
    Q, proj = outer_quotient(dicyclic(2))  # Out(Q8) = S3
    assert Q.order == 6
    assert proj.is_surjective


def test_relative_classifier_a3_s3(S3):
    A3 = next(s for s in normal_subgroups(S3) if s.order == 3)
    rc = relative_classifier(S3, A3)
    # every automorphism of S3 preserves A3, so the carrier is all of Aut(S3)
    assert rc.carrier.order == 6
    assert rc.q2.is_injective and rc.q2.is_surjective
    assert not rc.q1.is_injective and rc.q1.is_surjective


def test_relative_classifier_q1_injective_when_centralizer_trivial(S4):
    A4 = next(s for s in normal_subgroups(S4) if s.order == 12)
    assert centralizer(S4, A4).order == 1
    rc = relative_classifier(S4, A4)
    assert rc.q1.is_injective


def test_relative_classifier_center_subgroup(Z2xS3):
    Z = center(Z2xS3)
    rc = relative_classifier(Z2xS3, Z)
    # Aut(Z2) is trivial, so q1 lands in the one-element group
    assert rc.q1.codomain.order == 1


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 6, 7, 9, 10, 12]))
def test_cyclic_aut_order_is_totient(n):
    phi = sum(1 for k in range(1, n + 1) if _gcd(k, n) == 1)
    assert automorphism_group(cyclic(n)).order == phi


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@settings(max_examples=8, deadline=None)
@given(st.sampled_from([3, 4, 5, 6, 8]))
def test_conjugation_image_order(n):
    # |Inn(D_n)| = 2n / |Z(D_n)|
    G = dihedral(n)
    inn = inner_subgroup(G)
    assert inn.order == G.order // center(G).order
