"""Completeness classification: theorem criteria, bounded oracles, audits.

Terminology: a group is proto-complete when its conjugation morphism
c: G -> Aut(G) is a split epimorphism, strong-complete when c is an
isomorphism, and (boundedly) complete when every normal embedding found in
a finite universe splits.  Completeness proper quantifies over all groups,
so complete verdicts always carry their bound and universe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    AbelianInput,
    CenterNonTrivial,
    NotCharacteristicallySimple,
    NotProtoComplete,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_SEARCH_BUDGET,
    FiniteGroup,
    GroupHom,
    Subgroup,
    _Budget,
    all_subgroups,
    direct_product,
    find_constrained_hom,
    greedy_generators,
    quotient,
)
from .commutators import center, is_characteristic
from .automorphisms import (
    AutomorphismGroup,
    automorphism_group,
    conjugation_indices,
    conjugation_morphism,
    inner_subgroup,
)
from .extensions import (
    GroupAction,
    SplitExtension,
    enumerate_normal_embeddings,
    iter_actions,
    semidirect_product,
)


# -- retraction searches ------------------------------------------------------


def _kernel_retractions(e: SplitExtension, budget: Optional[_Budget], limit: int = 1):
    """Up to `limit` retractions r: A -> X of kappa, as image arrays.

    kappa(gens of X) + beta(gens of B) generate A, so no generator search
    over the (large) middle group is ever needed.
    """
    A, X = e.A, e.X
    forced = {e.kappa(x): x for x in range(X.order)}
    gens = [e.kappa(x) for x in X.generators] + [e.beta(b) for b in e.B.generators]
    if not gens:
        gens = [0]
    cands = []
    for g in gens:
        if g in forced:
            cands.append([forced[g]])
        else:
            o = A.element_order(g)
            cands.append([x for x in range(X.order) if o % X.element_order(x) == 0])
    return find_constrained_hom(A, X, gens, cands, budget=budget, limit=limit)


def _embedding_retraction(Y: FiniteGroup, h: GroupHom, budget: Optional[_Budget]):
    """A retraction r: Y -> X of the embedding h, or None."""
    X = h.domain
    forced = {h(x): x for x in range(X.order)}
    gens = greedy_generators(Y, seed=[h(x) for x in X.generators])
    cands = []
    for g in gens:
        if g in forced:
            cands.append([forced[g]])
        else:
            o = Y.element_order(g)
            cands.append([x for x in range(X.order) if o % X.element_order(x) == 0])
    found = find_constrained_hom(Y, X, gens, cands, budget=budget, limit=1)
    return found[0] if found else None


# -- theorem-based classification ---------------------------------------------


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of a definition-level bounded search."""

    mode: str
    flag: bool
    bound: int
    universe_id: str
    witness: Optional[dict] = None


@dataclass(frozen=True)
class ClassificationReport:
    name: str
    order: int
    center_order: int
    aut_order: int
    inn_order: int
    out_order: int
    proto_complete: bool
    proto_section: Optional[tuple[int, ...]]
    strong_complete: bool
    complete_bounded: Optional[OracleVerdict] = None
    decomposition: Optional[tuple] = None


def classify_completeness(
    G: FiniteGroup, budget: Optional[int] = None
) -> ClassificationReport:
    """Theorem-level verdicts: proto via a section of c, strong via c bijective.

    c is a split epi iff it is surjective (Out trivial) and some hom
    s: Aut(G) -> G satisfies c.s = id; when Out is nontrivial no
    automorphism carrier is ever materialized.  The strong verdict is
    computed both as "c bijective" and as "trivial center and trivial Out"
    and the two are cross-asserted.
    """
    aut = automorphism_group(G)
    z = center(G)
    inn_order = G.order // z.order
    out_order = aut.order // inn_order
    section = None
    if out_order == 1:
        # |Aut| = |Inn| <= |G|, so the carrier is always affordable here
        carrier = aut.carrier
        cidx = conjugation_indices(G, aut)
        fibers = {}
        for g, a in enumerate(cidx):
            fibers.setdefault(a, []).append(g)
        gens = carrier.generators if carrier.order > 1 else (0,)
        cands = [fibers[a] for a in gens] if carrier.order > 1 else [[0]]
        b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
        found = find_constrained_hom(carrier, G, gens, cands, budget=b, limit=1)
        if found:
            img = found[0]
            assert all(cidx[img[a]] == a for a in range(carrier.order))
            section = found[0]
    proto = section is not None
    strong = z.order == 1 and out_order == 1
    if strong:
        c = conjugation_morphism(G, aut)
        assert c.is_bijective, "trivial center and Out must make c an isomorphism"
        assert proto, "an isomorphism c is in particular a split epi"
    return ClassificationReport(
        name=G.name or f"group-of-order-{G.order}",
        order=G.order,
        center_order=z.order,
        aut_order=aut.order,
        inn_order=inn_order,
        out_order=out_order,
        proto_complete=proto,
        proto_section=section,
        strong_complete=strong,
    )


# -- definition-level oracles -------------------------------------------------


def _action_witness(e: SplitExtension) -> dict:
    return {
        "kind": "split-extension",
        "kernel": e.X.name or f"order-{e.X.order}",
        "cokernel": e.B.name or f"order-{e.B.order}",
        "action": list(e.action.indices) if e.action else None,
    }


def oracle_completeness(
    G: FiniteGroup,
    mode: str,
    bound: int,
    universe: Sequence[FiniteGroup],
    universe_id: str = "universe",
    budget: Optional[int] = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> OracleVerdict:
    """Check the chosen completeness definition by bounded exhaustive search.

    proto: every split extension with kernel G and cokernel in the universe
    (|B| <= bound) admits a retraction of its kernel.  strong: the
    retraction is additionally unique.  complete: every normal embedding of
    G into a universe member with |Y| <= bound*|G| splits.  The witness, if
    any, is the first failure in canonical enumeration order.
    """
    if mode not in ("proto", "strong", "complete"):
        raise ValueError(f"unknown oracle mode: {mode}")
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    if mode in ("proto", "strong"):
        for B in universe:
            if B.order > bound or B.order * G.order > cap:
                continue
            for a in iter_actions(B, G):
                e = semidirect_product(a, cap=cap)
                want = 1 if mode == "proto" else 2
                found = _kernel_retractions(e, b, limit=want)
                if not found:
                    w = _action_witness(e)
                    w["failure"] = "no retraction"
                    return OracleVerdict(mode, False, bound, universe_id, w)
                if mode == "strong" and len(found) > 1:
                    w = _action_witness(e)
                    w["failure"] = "retraction not unique"
                    return OracleVerdict(mode, False, bound, universe_id, w)
        return OracleVerdict(mode, True, bound, universe_id, None)
    members = [Y for Y in universe if Y.order <= bound * G.order]
    for Y, h in enumerate_normal_embeddings(G, members):
        if _embedding_retraction(Y, h, b) is None:
            w = {
                "kind": "normal-embedding",
                "target": Y.name or f"order-{Y.order}",
                "image": sorted(set(h.image)),
                "failure": "no retraction",
            }
            return OracleVerdict(mode, False, bound, universe_id, w)
    return OracleVerdict(mode, True, bound, universe_id, None)


# -- structure theorems as operations -----------------------------------------


def decompose_proto_complete(
    G: FiniteGroup, budget: Optional[int] = None
) -> tuple[Subgroup, FiniteGroup, GroupHom]:
    """Split a proto-complete G as center times a strong-complete quotient.

    The isomorphism is g -> (g * s(q(g))^-1, q(g)) for a section s of the
    central quotient q; both factors' expected verdicts are asserted.
    """
    rep = classify_completeness(G, budget=budget)
    if not rep.proto_complete:
        raise NotProtoComplete(rep.name)
    Z = center(G)
    Q, proj = quotient(G, Z)
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    fibers = {}
    for g in range(G.order):
        fibers.setdefault(proj(g), []).append(g)
    gens = Q.generators if Q.order > 1 else (0,)
    cands = [fibers[q] for q in gens] if Q.order > 1 else [[0]]
    found = find_constrained_hom(Q, G, gens, cands, budget=b, limit=1)
    assert found, "proto-complete group must split over its center"
    s = GroupHom(Q, G, found[0])
    assert all(proj(s(q)) == q for q in range(Q.order))
    Zg, _ = Z.as_group()
    P, _, _ = direct_product(Zg, Q)
    local = {e: i for i, e in enumerate(Z.elements)}
    img = tuple(
        local[G.mul(g, G.inv(s(proj(g))))] * Q.order + proj(g) for g in range(G.order)
    )
    iso = GroupHom.create(G, P, img)
    assert iso.is_bijective
    q_rep = classify_completeness(Q, budget=budget)
    assert q_rep.strong_complete, "quotient by the center must be strong-complete"
    assert automorphism_group(Zg).order == 1 or Zg.order == 1, (
        "center factor must be proto-complete (trivial automorphisms)"
    )
    return Z, Q, iso


def one_step_check(G: FiniteGroup, budget: Optional[int] = None) -> tuple[bool, bool]:
    """(c injective and Inn characteristic in Aut(G)) vs
    (trivial center and Aut(G) strong-complete); their equality is a theorem
    checked by the test suite, not here."""
    aut = automorphism_group(G)
    z = center(G)
    carrier = aut.carrier
    inn = inner_subgroup(G, aut)
    aut2 = automorphism_group(carrier, budget=budget)
    lhs = z.order == 1 and is_characteristic(carrier, inn, aut2.elems)
    rhs = z.order == 1 and classify_completeness(carrier, budget=budget).strong_complete
    return lhs, rhs


def centerless_char_criterion(
    G: FiniteGroup, S: Subgroup
) -> tuple[bool, bool]:
    """For centerless G: S characteristic vs c(S) normal in Aut(G).

    Returns (direct, criterion); the theorem asserts they agree, and the
    test suite checks that over whole subgroup lattices.
    """
    if center(G).order != 1:
        raise CenterNonTrivial("criterion applies to centerless groups only")
    aut = automorphism_group(G)
    direct = is_characteristic(G, S, aut.elems)
    cidx = conjugation_indices(G, aut)
    restricted = [cidx[s] for s in S.elements]
    injective = len(set(restricted)) == S.order
    image = Subgroup(aut.carrier, tuple(sorted(set(restricted))))
    criterion = injective and image.is_normal()
    return direct, criterion


@dataclass(frozen=True)
class ImplicationAudit:
    report: ClassificationReport
    oracle_proto: OracleVerdict
    oracle_strong: OracleVerdict
    oracle_complete: OracleVerdict
    normal_all_characteristic: Optional[bool]
    violations: tuple[str, ...]


def implication_audit(
    G: FiniteGroup,
    bound: int,
    universe: Sequence[FiniteGroup],
    universe_id: str = "universe",
    budget: Optional[int] = None,
    factors: Optional[tuple[FiniteGroup, FiniteGroup]] = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> ImplicationAudit:
    """Run every classifier and oracle on G and flag violated implications.

    The complete-oracle universe is augmented with the proto witness's
    middle group and, for centerless G, with Aut(G): without those members
    a catalog-only search can miss the refuting embedding and a bounded
    "complete" pass would contradict a proto failure.
    """
    rep = classify_completeness(G, budget=budget)
    op = oracle_completeness(G, "proto", bound, universe, universe_id, budget, cap)
    os_ = oracle_completeness(G, "strong", bound, universe, universe_id, budget, cap)
    extra: list[FiniteGroup] = []
    if not op.flag and op.witness is not None:
        for B in universe:
            if B.order > bound:
                continue
            if (B.name or f"order-{B.order}") == op.witness["cokernel"]:
                a = GroupAction(B, G, automorphism_group(G), tuple(op.witness["action"]))
                extra.append(semidirect_product(a, cap=cap).A)
                break
    if rep.center_order == 1:
        aut = automorphism_group(G)
        if aut.order <= aut.carrier_cap:
            extra.append(aut.carrier)
    oc = oracle_completeness(
        G, "complete", bound, list(universe) + extra, universe_id + "+witnesses", budget, cap
    )
    violations = []
    if rep.strong_complete and not oc.flag:
        violations.append("strong-complete but a normal embedding failed to split")
    if rep.strong_complete and not rep.proto_complete:
        violations.append("strong-complete but not proto-complete")
    if oc.flag and not rep.proto_complete:
        violations.append("bounded-complete unrefuted but proto-completeness fails")
    if op.flag != rep.proto_complete:
        violations.append("proto oracle disagrees with the split-epi criterion")
    if os_.flag != rep.strong_complete:
        violations.append("strong oracle disagrees with the c-isomorphism criterion")
    normal_char = None
    if rep.proto_complete:
        aut = automorphism_group(G)
        normal_char = all(
            is_characteristic(G, S, aut.elems)
            for S in all_subgroups(G)
            if S.is_normal()
        )
        if not normal_char:
            violations.append("proto-complete group with a non-characteristic normal subgroup")
    if factors is not None and oc.flag:
        for F in factors:
            fv = oracle_completeness(
                F, "complete", bound, list(universe) + extra, universe_id + "+witnesses", budget, cap
            )
            if not fv.flag:
                violations.append("bounded-complete product with a refuted factor")
    return ImplicationAudit(rep, op, os_, oc, normal_char, tuple(violations))


@dataclass(frozen=True)
class CharSimpleReport:
    name: str
    aut_order: int
    aut_strong_complete: bool


def char_simple_audit(G: FiniteGroup, budget: Optional[int] = None) -> CharSimpleReport:
    """For characteristically simple nonabelian G, Aut(G) must be strong-complete."""
    if G.is_abelian:
        raise AbelianInput(G.name or f"order-{G.order}")
    aut = automorphism_group(G, budget=budget)
    for S in all_subgroups(G):
        if S.order in (1, G.order):
            continue
        if is_characteristic(G, S, aut.elems):
            raise NotCharacteristicallySimple(S.elements)
    carrier = aut.carrier
    rep = classify_completeness(carrier, budget=budget)
    assert rep.strong_complete, "Aut of a characteristically simple group must be strong-complete"
    return CharSimpleReport(G.name or f"order-{G.order}", aut.order, rep.strong_complete)
