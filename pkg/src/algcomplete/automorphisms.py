"""Automorphism groups, conjugation morphisms, Out, and relative classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Optional

from .errors import NotNormal, SizeCap
from .groups import (
    DEFAULT_ELEMENT_CAP,
    FiniteGroup,
    GroupHom,
    Subgroup,
    _Budget,
    _exact_candidates,
    iter_hom_images,
    quotient,
)
from .commutators import centralizer


def _perm_order(p) -> int:
    n = len(p)
    seen = [False] * n
    out = 1
    for i in range(n):
        if seen[i]:
            continue
        ln, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        out = lcm(out, ln)
    return out


@dataclass(frozen=True)
class AutomorphismGroup:
    """Aut(base) as an indexed list of permutation arrays.

    Composition is (f.g)(x) = f(g(x)); element 0 is the identity and the
    list is sorted lexicographically, which pins the identity at index 0.
    The Cayley table (`carrier`) is only materialized on demand because it
    is quadratic in the (possibly large) automorphism count; all searches
    can run against the group-ops interface (order/mul/element_order)
    implemented directly on the permutations.
    """

    base: FiniteGroup
    elems: tuple[tuple[int, ...], ...]
    carrier_cap: int = DEFAULT_ELEMENT_CAP

    @property
    def order(self) -> int:
        return len(self.elems)

    @cached_property
    def _fingerprint_gens(self) -> tuple[int, ...]:
        return self.base.generators if self.base.order > 1 else (0,)

    @cached_property
    def _index(self) -> dict:
        gens = self._fingerprint_gens
        return {tuple(p[g] for g in gens): i for i, p in enumerate(self.elems)}

    def index_of_perm(self, p) -> int:
        return self._index[tuple(p[g] for g in self._fingerprint_gens)]

    def mul(self, i: int, j: int) -> int:
        pi, pj = self.elems[i], self.elems[j]
        return self._index[tuple(pi[pj[g]] for g in self._fingerprint_gens)]

    def inv(self, i: int) -> int:
        p = self.elems[i]
        q = [0] * len(p)
        for a, b in enumerate(p):
            q[b] = a
        return self.index_of_perm(q)

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        return tuple(_perm_order(p) for p in self.elems)

    def element_order(self, i: int) -> int:
        return self._orders[i]

    @cached_property
    def carrier(self) -> FiniteGroup:
        """Cayley table of Aut(base) under composition."""
        n = self.order
        if n > self.carrier_cap:
            raise SizeCap(f"automorphism group order {n} exceeds cap {self.carrier_cap}")
        table = tuple(tuple(self.mul(i, j) for j in range(n)) for i in range(n))
        name = f"Aut({self.base.name})" if self.base.name else None
        return FiniteGroup(table, name)

    def apply(self, i: int, x: int) -> int:
        return self.elems[i][x]


_AUT_CACHE: dict[FiniteGroup, AutomorphismGroup] = {}


def automorphism_group(
    G: FiniteGroup, budget: Optional[int] = None, carrier_cap: int = DEFAULT_ELEMENT_CAP
) -> AutomorphismGroup:
    """Complete automorphism list via backtracking on generator images.

    Candidates are constrained to elements of equal order; partial maps are
    pruned by closure consistency and injectivity.
    """
    cached = _AUT_CACHE.get(G)
    if cached is not None:
        return cached
    if G.order == 1:
        aut = AutomorphismGroup(G, ((0,),), carrier_cap)
        _AUT_CACHE[G] = aut
        return aut
    gens = G.generators
    cands = [_exact_candidates(G, G.element_order(g)) for g in gens]
    b = _Budget(budget) if budget is not None else None
    perms = []
    for img in iter_hom_images(G, G, gens, cands, budget=b, injective=True):
        perms.append(img)
    perms.sort()
    assert perms[0] == tuple(range(G.order))
    aut = AutomorphismGroup(G, tuple(perms), carrier_cap)
    _AUT_CACHE[G] = aut
    return aut


def conjugation_morphism(G: FiniteGroup, aut: Optional[AutomorphismGroup] = None) -> GroupHom:
    """c_G: G -> Aut(G) carrier, g -> (x -> g x g^-1); kernel is the center."""
    if aut is None:
        aut = automorphism_group(G)
    images = tuple(aut.index_of_perm(G.conjugation_permutation(g)) for g in range(G.order))
    return GroupHom(G, aut.carrier, images)


def conjugation_indices(G: FiniteGroup, aut: AutomorphismGroup) -> tuple[int, ...]:
    """Images of c_G as indices into aut.elems, without touching the carrier."""
    return tuple(aut.index_of_perm(G.conjugation_permutation(g)) for g in range(G.order))


def inner_subgroup(G: FiniteGroup, aut: Optional[AutomorphismGroup] = None) -> Subgroup:
    """Inn(G) = im(c_G), as a subgroup of the automorphism carrier."""
    if aut is None:
        aut = automorphism_group(G)
    idx = sorted(set(conjugation_indices(G, aut)))
    return Subgroup(aut.carrier, tuple(idx))


def outer_quotient(G: FiniteGroup, aut: Optional[AutomorphismGroup] = None):
    """Out(G) = Aut(G)/Inn(G) with the projection from the carrier."""
    if aut is None:
        aut = automorphism_group(G)
    inn = inner_subgroup(G, aut)
    Q, proj = quotient(aut.carrier, inn)
    if G.name:
        Q = FiniteGroup(Q.table, f"Out({G.name})")
        proj = GroupHom(aut.carrier, Q, proj.image)
    return Q, proj


@dataclass(frozen=True)
class RelativeClassifier:
    """Pairs (theta, phi) in Aut(S) x Aut(X) agreeing along the inclusion m."""

    S: FiniteGroup
    X: FiniteGroup
    m: GroupHom
    carrier: FiniteGroup
    pairs: tuple[tuple[int, int], ...]
    q1: GroupHom
    q2: GroupHom


def relative_classifier(G: FiniteGroup, S: Subgroup) -> RelativeClassifier:
    """The classifier of the normal inclusion S <= G with its two projections.

    The carrier consists of the pairs (theta, phi) with phi restricting to
    theta on S; q2 is injective by construction, and q1 is asserted
    injective whenever the centralizer of S in G is trivial.
    """
    if not S.is_normal():
        raise NotNormal("relative classifier requires a normal subgroup")
    Sg, incl = S.as_group()
    autS = automorphism_group(Sg)
    autX = automorphism_group(G)
    local = {e: i for i, e in enumerate(S.elements)}
    eset = S._element_set
    pairs = []
    for j, phi in enumerate(autX.elems):
        if any(phi[e] not in eset for e in S.elements):
            continue
        theta = tuple(local[phi[e]] for e in S.elements)
        i = autS.index_of_perm(theta)
        pairs.append((i, j))
    pairs.sort()
    index = {pr: k for k, pr in enumerate(pairs)}
    n = len(pairs)
    table = tuple(
        tuple(index[(autS.mul(a1, b1), autX.mul(a2, b2))] for (b1, b2) in pairs)
        for (a1, a2) in pairs
    )
    carrier = FiniteGroup(table, name=f"[{Sg.name or 'S'},{G.name or 'X'}]")
    q1 = GroupHom(carrier, autS.carrier, tuple(p[0] for p in pairs))
    q2 = GroupHom(carrier, autX.carrier, tuple(p[1] for p in pairs))
    assert q2.is_injective
    if centralizer(G, S).order == 1 and not q1.is_injective:
        raise AssertionError("q1 must be injective when the centralizer of S is trivial")
    return RelativeClassifier(Sg, G, incl, carrier, tuple(pairs), q1, q2)
