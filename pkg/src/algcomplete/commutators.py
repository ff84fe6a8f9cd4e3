"""Huq-commutation, centers, centralizers and subgroup predicates.

Bourn-normal and normal monomorphisms coincide for groups (Barr-exact
context), so only a single "normal" predicate is exposed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CodomainMismatch, NotASubgroup
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    find_constrained_hom,
    greedy_generators,
    _Budget,
)


def commutes(f: GroupHom, g: GroupHom) -> bool:
    """Huq-commutation of two maps into a common codomain.

    In groups this is elementwise commutation of the two images; when true
    the cooperator is the product map (a, b) -> f(a) g(b).
    """
    if f.codomain != g.codomain:
        raise CodomainMismatch("maps must share a codomain")
    X = f.codomain
    fim = sorted(set(f.image))
    gim = sorted(set(g.image))
    return all(X.table[a][b] == X.table[b][a] for a in fim for b in gim)


def center(G: FiniteGroup) -> Subgroup:
    """{z : zg = gz for all g}, the kernel of the conjugation morphism."""
    t = G.table
    n = G.order
    elems = tuple(z for z in range(n) if all(t[z][g] == t[g][z] for g in range(n)))
    return Subgroup(G, elems)


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """C_G(S); centralizer(G, G) coincides with center(G)."""
    if S.parent != G:
        raise NotASubgroup("subgroup belongs to a different parent")
    t = G.table
    elems = tuple(
        g for g in range(G.order) if all(t[g][s] == t[s][g] for s in S.elements)
    )
    return Subgroup(G, elems)


@dataclass(frozen=True)
class SubgroupVerdict:
    is_normal: bool
    is_characteristic: bool
    split_retraction: Optional[GroupHom]


def is_characteristic(G: FiniteGroup, S: Subgroup, aut_perms) -> bool:
    """alpha(S) = S for every automorphism (given as permutation arrays)."""
    eset = S._element_set
    return all(all(p[s] in eset for s in S.elements) for p in aut_perms)


def find_retraction(
    G: FiniteGroup, S: Subgroup, budget: Optional[int] = None
) -> Optional[GroupHom]:
    """Some hom r: G -> S_as_group with r|S = id, or a verified None.

    Reuses the constrained hom search: generators of S get forced images,
    the remaining generators of G range over order-compatible elements.
    """
    H, incl = S.as_group()
    local = {e: i for i, e in enumerate(S.elements)}
    sgens = [S.elements[g] for g in H.generators] if H.order > 1 else []
    gens = list(greedy_generators(G, seed=sgens))
    cands = []
    for g in gens:
        if g in local:
            cands.append([local[g]])
        else:
            o = G.element_order(g)
            cands.append([h for h in range(H.order) if o % H.element_order(h) == 0])
    b = _Budget(budget) if budget is not None else None
    found = find_constrained_hom(G, H, gens, cands, budget=b, limit=1)
    if not found:
        return None
    img = found[0]
    # the search fixes generators of S; that forces r|S = id
    assert all(img[e] == local[e] for e in S.elements)
    return GroupHom(G, H, img)


def subgroup_verdict(
    G: FiniteGroup, S: Subgroup, aut_perms, budget: Optional[int] = None
) -> SubgroupVerdict:
    """Normality, characteristicity and split-retraction verdicts for S <= G."""
    if S.parent != G:
        raise NotASubgroup("subgroup belongs to a different parent")
    normal = S.is_normal()
    char = is_characteristic(G, S, aut_perms)
    retr = find_retraction(G, S, budget=budget)
    if char and not normal:
        raise AssertionError("characteristic subgroup must be normal")
    return SubgroupVerdict(normal, char, retr)
