"""Split extensions: semidirect products, holonomy, classifiers, enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import SizeCap
from .groups import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_SEARCH_BUDGET,
    FiniteGroup,
    GroupHom,
    Subgroup,
    _Budget,
    _divisor_candidates,
    _exact_candidates,
    iter_hom_images,
)
from .automorphisms import AutomorphismGroup, automorphism_group, conjugation_indices


@dataclass(frozen=True)
class GroupAction:
    """A homomorphism B -> Aut(X), stored as indices into the automorphism list.

    Storing indices instead of a GroupHom into the Aut carrier keeps actions
    usable when the carrier table would blow the element cap; `act` exposes
    the carrier-based homomorphism on demand.
    """

    B: FiniteGroup
    X: FiniteGroup
    aut: AutomorphismGroup
    indices: tuple[int, ...]

    @staticmethod
    def create(B: FiniteGroup, X: FiniteGroup, aut: AutomorphismGroup, indices) -> "GroupAction":
        idx = tuple(indices)
        assert len(idx) == B.order and idx[0] == 0
        for a in B.generators:
            for b in range(B.order):
                assert aut.mul(idx[a], idx[b]) == idx[B.mul(a, b)], "action is not a hom"
        return GroupAction(B, X, aut, idx)

    @cached_property
    def act(self) -> GroupHom:
        return GroupHom(self.B, self.aut.carrier, self.indices)

    def apply(self, b: int, x: int) -> int:
        return self.aut.elems[self.indices[b]][x]

    @property
    def is_trivial(self) -> bool:
        return all(i == 0 for i in self.indices)


def trivial_action(B: FiniteGroup, X: FiniteGroup) -> GroupAction:
    return GroupAction(B, X, automorphism_group(X), (0,) * B.order)


def iter_actions(
    B: FiniteGroup, X: FiniteGroup, budget: Optional[int] = None
) -> Iterator[GroupAction]:
    """All actions of B on X, lazily, in canonical order."""
    aut = automorphism_group(X)
    if B.order == 1:
        yield GroupAction(B, X, aut, (0,))
        return
    gens = B.generators
    cands = [_divisor_candidates(aut, B.element_order(g)) for g in gens]
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    for img in iter_hom_images(B, aut, gens, cands, b):
        yield GroupAction(B, X, aut, img)


@dataclass(frozen=True)
class SplitExtension:
    """X --kappa--> A --alpha--> B with a section beta of alpha.

    Invariants (checked in `create`): alpha.beta = id_B, kappa injective,
    im(kappa) = ker(alpha) and is normal in A.
    """

    X: FiniteGroup
    A: FiniteGroup
    B: FiniteGroup
    kappa: GroupHom
    alpha: GroupHom
    beta: GroupHom
    action: Optional[GroupAction] = None

    @staticmethod
    def create(kappa: GroupHom, alpha: GroupHom, beta: GroupHom, action=None) -> "SplitExtension":
        X, A, B = kappa.domain, kappa.codomain, alpha.codomain
        assert alpha.domain == A and beta.domain == B and beta.codomain == A
        assert all(alpha(beta(b)) == b for b in range(B.order)), "beta is not a section"
        assert kappa.is_injective, "kappa is not mono"
        ker = alpha.kernel()
        assert tuple(sorted(set(kappa.image))) == ker.elements, "im(kappa) != ker(alpha)"
        assert ker.is_normal()
        return SplitExtension(X, A, B, kappa, alpha, beta, action)


def semidirect_product(
    a: GroupAction, cap: int = DEFAULT_ELEMENT_CAP, name: Optional[str] = None
) -> SplitExtension:
    """B acting on X, carrier B x X with (b,x)(b',x') = (bb', a(b'^-1)(x) x').

    Element (b,x) is encoded as b*|X| + x, so kappa(x) = x and the identity
    lands at index 0.  The table is assembled blockwise with numpy; the
    convention makes conjugation by beta(b) realize the action on im(kappa).
    """
    B, X = a.B, a.X
    nb, m = B.order, X.order
    n = nb * m
    if n > cap:
        raise SizeCap(f"semidirect product order {n} exceeds cap {cap}")
    xt = X.np_table
    binv = B.inverses
    # inner[b', x, x'] = X.table[a(b'^-1)(x)][x']
    perms = np.asarray([a.aut.elems[a.indices[binv[b]]] for b in range(nb)], dtype=np.int64)
    inner = xt[perms]  # shape (nb, m, m)
    bm = B.np_table * m  # shape (nb, nb)
    full = bm[:, None, :, None] + np.transpose(inner, (1, 0, 2))[None, :, :, :]
    table = tuple(map(tuple, full.reshape(n, n).tolist()))
    if name is None and B.name and X.name:
        name = f"{X.name}:{B.name}" if not a.is_trivial else f"{X.name}x{B.name}"
    A = FiniteGroup(table, name)
    kappa = GroupHom(X, A, tuple(range(m)))
    alpha = GroupHom(A, B, tuple(i // m for i in range(n)))
    beta = GroupHom(B, A, tuple(b * m for b in range(nb)))
    return SplitExtension.create(kappa, alpha, beta, a)


def holonomy(G: FiniteGroup, cap: int = DEFAULT_ELEMENT_CAP) -> SplitExtension:
    """The generic split extension G -> Aut(G) |x G -> Aut(G).

    Built from the tautological action; the evaluation map p2(a, x) = a.c(x)
    into Aut(G) is verified to be a homomorphism restricting to the
    conjugation morphism along kappa.
    """
    aut = automorphism_group(G)
    if aut.order > aut.carrier_cap:
        raise SizeCap(f"holonomy base Aut of order {aut.order} exceeds carrier cap")
    carrier = aut.carrier
    a = GroupAction(carrier, G, aut, tuple(range(aut.order)))
    name = f"Hol({G.name})" if G.name else None
    e = semidirect_product(a, cap=cap, name=name)
    m = G.order
    cidx = conjugation_indices(G, aut)
    p2 = GroupHom.create(
        e.A, carrier, tuple(aut.mul(i // m, cidx[i % m]) for i in range(e.A.order))
    )
    assert all(p2(e.kappa(x)) == cidx[x] for x in range(m)), "evaluation must restrict to c"
    return e


def induced_action(e: SplitExtension) -> GroupAction:
    """The action b -> (conjugation by beta(b), transported along kappa)."""
    X, B = e.X, e.B
    aut = automorphism_group(X)
    local = {e.kappa(x): x for x in range(X.order)}
    A = e.A
    idx = []
    for b in range(B.order):
        g = e.beta(b)
        perm = tuple(local[A.conj(g, e.kappa(x))] for x in range(X.order))
        idx.append(aut.index_of_perm(perm))
    return GroupAction.create(B, X, aut, idx)


def classify_into_generic(
    e: SplitExtension,
    cap: int = DEFAULT_ELEMENT_CAP,
    budget: Optional[int] = None,
    verify_unique: bool = True,
) -> tuple[GroupHom, GroupHom]:
    """The unique morphism (u, v) from e into the generic extension of its kernel.

    v sends b to conjugation-by-beta(b) on im(kappa); u factors a as
    beta(alpha(a)) . kappa(x) and maps it to the corresponding holonomy pair.
    With verify_unique the terminality claim is checked by exhausting all
    kappa-compatible homomorphisms A -> Hol(X).
    """
    X, A, B = e.X, e.A, e.B
    act = induced_action(e)
    aut = act.aut
    hol = holonomy(X, cap=cap)
    v = GroupHom.create(B, aut.carrier, act.indices)
    m = X.order
    local = {e.kappa(x): x for x in range(m)}
    u_img = []
    for a in range(A.order):
        b = e.alpha(a)
        x = local[A.mul(A.inv(e.beta(b)), a)]
        u_img.append(act.indices[b] * m + x)
    u = GroupHom.create(A, hol.A, tuple(u_img))
    # morphism-of-extensions equations
    assert all(u(e.kappa(x)) == hol.kappa(x) for x in range(m))
    assert all(hol.alpha(u(a)) == v(e.alpha(a)) for a in range(A.order))
    assert all(u(e.beta(b)) == hol.beta(v(b)) for b in range(B.order))
    if verify_unique:
        count = 0
        gens = [e.kappa(x) for x in X.generators] + [e.beta(b) for b in B.generators]
        if not gens:
            gens = [0]
        forced = {e.kappa(x): hol.kappa(x) for x in range(m)}
        cands = []
        for g in gens:
            if g in forced:
                cands.append([forced[g]])
            else:
                o = A.element_order(g)
                cands.append(
                    [h for h in range(hol.A.order) if o % hol.A.element_order(h) == 0]
                )
        b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
        for img in iter_hom_images(A, hol.A, gens, cands, b):
            up = GroupHom(A, hol.A, img)
            vp = tuple(hol.alpha(up(e.beta(bb))) for bb in range(B.order))
            if all(hol.alpha(up(a)) == vp[e.alpha(a)] for a in range(A.order)) and all(
                up(e.beta(bb)) == hol.beta(vp[bb]) for bb in range(B.order)
            ):
                count += 1
        assert count == 1, f"expected a unique classifying morphism, found {count}"
    return u, v


def enumerate_split_extensions(
    X: FiniteGroup,
    B: FiniteGroup,
    cap: int = DEFAULT_ELEMENT_CAP,
    budget: Optional[int] = None,
) -> list[SplitExtension]:
    """One split extension per action of B on X, in canonical action order."""
    return [semidirect_product(a, cap=cap) for a in iter_actions(B, X, budget=budget)]


def enumerate_normal_embeddings(
    X: FiniteGroup,
    universe: Sequence[FiniteGroup],
    budget: Optional[int] = None,
    dedup_aut_cap: int = 10000,
) -> list[tuple[FiniteGroup, GroupHom]]:
    """Every injective hom X -> Y with normal image, over all Y in the universe.

    Deduplicated up to Aut(Y)-conjugacy of the image when Aut(Y) is small
    enough to enumerate, else up to image-set equality (the images are
    normal, so inner conjugacy never separates them anyway).
    """
    out = []
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    for Y in universe:
        if Y.order % X.order != 0 or Y.order < X.order:
            continue
        seen = set()
        seen_raw = set()
        aut_perms = None
        gens = X.generators if X.order > 1 else (0,)
        cands = [_exact_candidates(Y, X.element_order(g)) for g in gens]
        if X.order == 1:
            cands = [[0]]
        for img in iter_hom_images(X, Y, gens, cands, b, injective=True):
            image_set = frozenset(img)
            if image_set in seen_raw:
                continue
            seen_raw.add(image_set)
            h = GroupHom(X, Y, img)
            if not h.image_subgroup().is_normal():
                continue
            if aut_perms is None:
                try:
                    aut_perms = automorphism_group(Y).elems
                except Exception:
                    aut_perms = ()
                if len(aut_perms) > dedup_aut_cap:
                    aut_perms = ()
            key = image_set
            if aut_perms:
                key = min(
                    tuple(sorted(p[e] for e in image_set)) for p in aut_perms
                )
            if key in seen:
                continue
            seen.add(key)
            out.append((Y, h))
    return out


def product_form_isomorphism(e: SplitExtension, retraction: GroupHom) -> GroupHom:
    """<alpha, lambda>: A -> B x X for a retraction lambda of kappa, verified bijective.

    When the kernel is proto-complete this exhibits the extension as the
    product extension.
    """
    from .groups import direct_product

    P, _, _ = direct_product(e.B, e.X)
    m = e.X.order
    img = tuple(e.alpha(a) * m + retraction(a) for a in range(e.A.order))
    iso = GroupHom.create(e.A, P, img)
    assert iso.is_bijective, "product form requires a bijection"
    return iso
