"""Concrete finite groups: Cayley tables, subgroups, homomorphisms, searches.

Every group lives on element indices 0..n-1 with the identity pinned at
index 0, so homomorphism equality is plain tuple comparison.  All values
are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    ClosureTooLarge,
    CodomainMismatch,
    NotASubgroup,
    NotNormal,
    SearchBudgetExceeded,
    SizeCap,
    TableInvalid,
)

DEFAULT_ELEMENT_CAP = 512
DEFAULT_SEARCH_BUDGET = 5_000_000


def validate_table(table: Sequence[Sequence[int]]) -> None:
    """Check identity/associativity/invertibility; raise TableInvalid with a witness."""
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableInvalid("table is not square", (i,))
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise TableInvalid("entry out of range", (i, j, v))
    for j in range(n):
        if table[0][j] != j:
            raise TableInvalid("identity law fails on the left", (0, j))
    for i in range(n):
        if table[i][0] != i:
            raise TableInvalid("identity law fails on the right", (i, 0))
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise TableInvalid("row is not a permutation", (i,))
        if sorted(table[j][i] for j in range(n)) != list(range(n)):
            raise TableInvalid("column is not a permutation", (i,))
    # associativity via numpy: T[T[i,j],k] == T[i,T[j,k]]
    t = np.asarray(table, dtype=np.int64)
    lhs = t[t, :]  # lhs[i,j,k] = T[T[i,j],k]
    rhs = t[:, t]  # rhs[i,j,k] = T[i,T[j,k]]
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise TableInvalid("associativity fails", tuple(int(x) for x in bad))


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full Cayley table, identity at index 0."""

    table: tuple[tuple[int, ...], ...]
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "_hash", None)

    @staticmethod
    def from_table(table, name: Optional[str] = None, validate: bool = True) -> "FiniteGroup":
        tbl = tuple(tuple(int(v) for v in row) for row in table)
        if validate:
            validate_table(tbl)
        return FiniteGroup(tbl, name)

    # -- basic structure ---------------------------------------------------

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for i, row in enumerate(self.table):
            inv[i] = row.index(0)
        return tuple(inv)

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1"""
        return self.table[self.table[g][x]][self.inverses[g]]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = [0] * self.order
        for i in range(self.order):
            k, x = 1, i
            while x != 0:
                x = self.table[x][i]
                k += 1
            orders[i] = k
        return tuple(orders)

    def element_order(self, i: int) -> int:
        return self.element_orders[i]

    @cached_property
    def order_profile(self) -> tuple[tuple[int, int], ...]:
        """Sorted (element order, multiplicity) pairs; an isomorphism invariant."""
        counts: dict[int, int] = {}
        for o in self.element_orders:
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return greedy_generators(self)

    def conjugation_permutation(self, g: int) -> tuple[int, ...]:
        return tuple(self.conj(g, x) for x in range(self.order))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.table)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        label = self.name or "group"
        return f"FiniteGroup({label}, order={self.order})"


TRIVIAL_GROUP = FiniteGroup(((0,),), "1")


# -- closures and generating sets -----------------------------------------


def subgroup_closure(G: FiniteGroup, elems: Iterable[int]) -> tuple[int, ...]:
    """Sorted closure of `elems` under multiplication (hence inversion, finitely)."""
    seen = {0}
    frontier = [0]
    gens = sorted(set(elems))
    for x in gens:
        if x not in seen:
            seen.add(x)
            frontier.append(x)
    while frontier:
        x = frontier.pop()
        row = G.table[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
            z = G.table[g][x]
            if z not in seen:
                seen.add(z)
                frontier.append(z)
    return tuple(sorted(seen))


def greedy_generators(G: FiniteGroup, seed: Sequence[int] = ()) -> tuple[int, ...]:
    """Small generating set: repeatedly add the element giving the largest closure.

    Deterministic (ties broken by smallest index).  `seed` forces a prefix.
    """
    gens = [g for g in seed if g != 0]
    current = set(subgroup_closure(G, gens))
    while len(current) < G.order:
        best, best_size = None, -1
        for x in range(G.order):
            if x in current:
                continue
            size = len(subgroup_closure(G, gens + [x]))
            if size > best_size:
                best, best_size = x, size
        gens.append(best)
        current = set(subgroup_closure(G, gens))
    return tuple(gens)


# -- subgroups -------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup recorded as a sorted tuple of parent element indices."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    @staticmethod
    def create(parent: FiniteGroup, elements: Iterable[int]) -> "Subgroup":
        elems = tuple(sorted(set(elements)))
        if not elems or elems[0] != 0:
            raise NotASubgroup("subgroup must contain the identity")
        eset = set(elems)
        for a in elems:
            if parent.inv(a) not in eset:
                raise NotASubgroup(f"not closed under inversion at {a}")
            for b in elems:
                if parent.table[a][b] not in eset:
                    raise NotASubgroup(f"not closed under multiplication at ({a},{b})")
        if parent.order % len(elems) != 0:
            raise NotASubgroup("order does not divide parent order")
        return Subgroup(parent, elems)

    @staticmethod
    def generated(parent: FiniteGroup, gens: Iterable[int]) -> "Subgroup":
        return Subgroup(parent, subgroup_closure(parent, gens))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._element_set

    @cached_property
    def _element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_normal(self) -> bool:
        G = self.parent
        t = G.np_table
        elems = np.asarray(self.elements, dtype=np.int64)
        inv = np.asarray(G.inverses, dtype=np.int64)
        conj = t[t[:, elems], inv[:, None]]  # conj[g, i] = g * elems[i] * g^-1
        mask = np.zeros(G.order, dtype=bool)
        mask[elems] = True
        return bool(mask[conj].all())

    def as_group(self) -> tuple[FiniteGroup, "GroupHom"]:
        """Relabelled copy on 0..k-1 plus the inclusion back into the parent."""
        local = {e: i for i, e in enumerate(self.elements)}
        table = tuple(
            tuple(local[self.parent.table[a][b]] for b in self.elements) for a in self.elements
        )
        H = FiniteGroup(table, name=None)
        incl = GroupHom(H, self.parent, self.elements)
        return H, incl


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by closing cyclic subgroups under joins."""
    seen: set[tuple[int, ...]] = set()
    layer: list[tuple[int, ...]] = [(0,)]
    seen.add((0,))
    for x in range(1, G.order):
        c = subgroup_closure(G, [x])
        if c not in seen:
            seen.add(c)
            layer.append(c)
    frontier = list(seen)
    while frontier:
        new: list[tuple[int, ...]] = []
        for elems in frontier:
            if len(elems) == G.order:
                continue
            for x in range(1, G.order):
                if x in elems:
                    continue
                bigger = subgroup_closure(G, list(elems) + [x])
                if bigger not in seen:
                    seen.add(bigger)
                    new.append(bigger)
        frontier = new
    return [Subgroup(G, elems) for elems in sorted(seen, key=lambda e: (len(e), e))]


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [S for S in all_subgroups(G) if S.is_normal()]


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class GroupHom:
    """A total map between groups, recorded element-by-element."""

    domain: FiniteGroup
    codomain: FiniteGroup
    image: tuple[int, ...]

    @staticmethod
    def create(domain: FiniteGroup, codomain: FiniteGroup, image: Sequence[int]) -> "GroupHom":
        img = tuple(int(v) for v in image)
        if len(img) != domain.order or img[0] != 0:
            raise TableInvalid("homomorphism must send identity to identity")
        for i in range(domain.order):
            for j in range(domain.order):
                if img[domain.table[i][j]] != codomain.table[img[i]][img[j]]:
                    raise TableInvalid("map is not a homomorphism", (i, j))
        return GroupHom(domain, codomain, img)

    @staticmethod
    def identity(G: FiniteGroup) -> "GroupHom":
        return GroupHom(G, G, tuple(range(G.order)))

    @staticmethod
    def zero(domain: FiniteGroup, codomain: FiniteGroup) -> "GroupHom":
        return GroupHom(domain, codomain, (0,) * domain.order)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.codomain != self.domain:
            raise CodomainMismatch("homomorphisms do not compose")
        return GroupHom(other.domain, self.codomain, tuple(self.image[v] for v in other.image))

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.image)) == self.domain.order

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.codomain.order

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.domain.order == self.codomain.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, tuple(i for i, v in enumerate(self.image) if v == 0))

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.codomain, tuple(sorted(set(self.image))))

    def inverse(self) -> "GroupHom":
        if not self.is_bijective:
            raise TableInvalid("not bijective")
        back = [0] * self.codomain.order
        for i, v in enumerate(self.image):
            back[v] = i
        return GroupHom(self.codomain, self.domain, tuple(back))


# -- generic backtracking hom search ----------------------------------------
#
# Searches run against a minimal "group ops" interface so that codomains can
# be automorphism groups whose Cayley table would be too large to build:
# required attributes: order, mul(i, j), element_order(i).


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetExceeded("hom search node budget exhausted")


def _level_schedules(G: FiniteGroup, gens: Sequence[int]):
    """Per-prefix multiplication schedules for the backtracking hom search.

    schedule[k] covers the subgroup generated by gens[:k+1]: a list of
    (parent, gen_pos, product, is_new) with parents appearing before any
    product naming them, so image values can be propagated in one pass.
    At full depth the schedule checks f(x*g)=f(x)*f(g) for every x in G and
    every generator g, which forces f to be a homomorphism.
    """
    schedules = []
    for k in range(1, len(gens) + 1):
        active = gens[:k]
        sched = []
        known = {0}
        queue = [0]
        while queue:
            x = queue.pop(0)
            for pos in range(k):
                y = G.table[x][active[pos]]
                if y in known:
                    sched.append((x, pos, y, False))
                else:
                    known.add(y)
                    sched.append((x, pos, y, True))
                    queue.append(y)
        schedules.append(sched)
    return schedules


def iter_hom_images(
    G: FiniteGroup,
    cod,
    gens: Sequence[int],
    candidates: Sequence[Sequence[int]],
    budget: Optional[_Budget] = None,
    injective: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Yield the full image array of every hom G -> cod with gens[i] in candidates[i].

    Output order is lexicographic on the generator image tuple (candidate
    lists are iterated as given; pass them sorted for canonical order).
    `cod` needs only the group-ops interface.  With `injective=True`,
    branches producing repeated images are pruned.
    """
    if budget is None:
        budget = _Budget(DEFAULT_SEARCH_BUDGET)
    n = G.order
    if n == 1:
        yield (0,)
        return
    schedules = _level_schedules(G, gens)
    cod_mul = cod.mul
    k = len(gens)

    def attempt(depth: int, assigned: Sequence[int]) -> Optional[list[int]]:
        budget.spend()
        img = [-1] * n
        img[0] = 0
        used = {0} if injective else None
        for parent, pos, prod, is_new in schedules[depth]:
            v = cod_mul(img[parent], assigned[pos])
            if is_new:
                if injective:
                    if v in used:
                        return None
                    used.add(v)
                img[prod] = v
            elif img[prod] != v:
                return None
        return img

    def rec(depth: int, assigned: list[int]) -> Iterator[tuple[int, ...]]:
        for c in candidates[depth]:
            img = attempt(depth, assigned + [c])
            if img is None:
                continue
            if depth + 1 == k:
                yield tuple(img)
            else:
                yield from rec(depth + 1, assigned + [c])

    yield from rec(0, [])


def _divisor_candidates(cod, gen_order: int) -> list[int]:
    return [h for h in range(cod.order) if gen_order % cod.element_order(h) == 0]


def _exact_candidates(cod, gen_order: int) -> list[int]:
    return [h for h in range(cod.order) if cod.element_order(h) == gen_order]


def iter_homs(
    G: FiniteGroup,
    H: FiniteGroup,
    budget: Optional[int] = None,
) -> Iterator[GroupHom]:
    """Lazily yield all homomorphisms G -> H in canonical (lex) order."""
    if G.order == 1:
        yield GroupHom(G, H, (0,))
        return
    gens = G.generators
    cands = [_divisor_candidates(H, G.element_order(g)) for g in gens]
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    for img in iter_hom_images(G, H, gens, cands, b):
        yield GroupHom(G, H, img)


def enumerate_homs(G: FiniteGroup, H: FiniteGroup, budget: Optional[int] = None) -> list[GroupHom]:
    """Complete list of homomorphisms G -> H, deterministic order.

    Backtracks on images of a greedy generating set, pruning by element-order
    divisibility and partial-closure consistency.
    """
    if G.order == 1:
        return [GroupHom(G, H, (0,))]
    return list(iter_homs(G, H, budget))


def find_constrained_hom(
    G: FiniteGroup,
    H,
    gens: Sequence[int],
    candidates: Sequence[Sequence[int]],
    budget: Optional[_Budget] = None,
    limit: int = 1,
) -> list[tuple[int, ...]]:
    """Up to `limit` hom image arrays with per-generator candidate lists."""
    out = []
    for img in iter_hom_images(G, H, gens, candidates, budget):
        out.append(img)
        if len(out) >= limit:
            break
    return out


def is_isomorphic(
    G: FiniteGroup, H: FiniteGroup, budget: Optional[int] = None
) -> Optional[GroupHom]:
    """Some isomorphism G -> H, or None (a verified-none verdict).

    Backtracking with order-profile pruning; candidates for each generator
    are restricted to elements of the exact same order.
    """
    if G.order != H.order or G.order_profile != H.order_profile:
        return None
    if G.is_abelian != H.is_abelian:
        return None
    if G.order == 1:
        return GroupHom(G, H, (0,))
    gens = G.generators
    cands = [_exact_candidates(H, G.element_order(g)) for g in gens]
    b = _Budget(budget if budget is not None else DEFAULT_SEARCH_BUDGET)
    for img in iter_hom_images(G, H, gens, cands, b, injective=True):
        return GroupHom(G, H, img)
    return None


# -- constructions -----------------------------------------------------------


def load_group(source: dict, cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
    """Build a validated group from the JSON input schema.

    Accepts {"cayley": [[...]]} or
    {"permutations": {"degree": n, "generators": [[...], ...]}},
    each with an optional "name".  Element indexing is canonicalized so the
    identity sits at index 0.
    """
    name = source.get("name")
    if "cayley" in source:
        table = [list(row) for row in source["cayley"]]
        n = len(table)
        if n > cap:
            raise SizeCap(f"group order {n} exceeds cap {cap}")
        ident = None
        for e in range(n):
            try:
                if all(table[e][j] == j for j in range(n)) and all(
                    table[i][e] == i for i in range(n)
                ):
                    ident = e
                    break
            except (IndexError, TypeError):
                raise TableInvalid("table is not square", (e,))
        if ident is None:
            raise TableInvalid("no identity element")
        if ident != 0:
            perm = list(range(n))
            perm[0], perm[ident] = ident, 0  # relabel: swap 0 <-> identity
            table = [[perm.index(table[perm[i]][perm[j]]) for j in range(n)] for i in range(n)]
        return FiniteGroup.from_table(table, name, validate=True)
    if "permutations" in source:
        spec = source["permutations"]
        return group_from_permutations(spec["degree"], spec["generators"], name=name, cap=cap)
    raise TableInvalid("source must contain 'cayley' or 'permutations'")


def group_from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    name: Optional[str] = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> FiniteGroup:
    """Closure of permutation generators under composition.

    Elements are indexed in discovery order with the identity first.
    """
    ident = tuple(range(degree))
    gens = []
    for g in generators:
        p = tuple(int(v) for v in g)
        if sorted(p) != list(range(degree)):
            raise TableInvalid("generator is not a permutation", tuple(p))
        gens.append(p)
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = tuple(x[g[i]] for i in range(degree))  # x after g
            if y not in index:
                if len(elems) >= cap:
                    raise ClosureTooLarge(f"closure exceeds element cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)
    table = tuple(
        tuple(index[tuple(a[b[i]] for i in range(degree))] for b in elems) for a in elems
    )
    return FiniteGroup(table, name)


def direct_product(
    G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ELEMENT_CAP, name: Optional[str] = None
):
    """G x H with pairs indexed lexicographically.

    Returns (P, (proj1, proj2), (inj1, inj2)).
    """
    n, m = G.order, H.order
    if n * m > cap:
        raise SizeCap(f"product order {n * m} exceeds cap {cap}")
    gt = np.asarray(G.table, dtype=np.int64)
    ht = np.asarray(H.table, dtype=np.int64)
    t = np.kron(gt, np.ones((m, m), dtype=np.int64)) * m + np.tile(ht, (n, n))
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    P = FiniteGroup(tuple(tuple(int(v) for v in row) for row in t), name)
    p1 = GroupHom(P, G, tuple(i // m for i in range(n * m)))
    p2 = GroupHom(P, H, tuple(i % m for i in range(n * m)))
    i1 = GroupHom(G, P, tuple(g * m for g in range(n)))
    i2 = GroupHom(H, P, tuple(h for h in range(m)))
    return P, (p1, p2), (i1, i2)


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Coset group G/N with the canonical surjection; requires N normal."""
    if N.parent != G:
        raise NotASubgroup("subgroup belongs to a different parent")
    if not N.is_normal():
        raise NotNormal("subgroup is not normal")
    rep = [-1] * G.order  # minimal element of each coset
    cosets: list[int] = []
    coset_of = [-1] * G.order
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        members = sorted(G.table[x][s] for s in N.elements)
        idx = len(cosets)
        cosets.append(members[0])
        for y in members:
            coset_of[y] = idx
    # canonical order: by minimal coset element; identity coset is first already
    order_keys = sorted(range(len(cosets)), key=lambda c: cosets[c])
    relabel = {old: new for new, old in enumerate(order_keys)}
    reps = [cosets[old] for old in order_keys]
    k = len(reps)
    table = tuple(
        tuple(relabel[coset_of[G.table[reps[a]][reps[b]]]] for b in range(k)) for a in range(k)
    )
    Q = FiniteGroup(table, name=f"{G.name}/N" if G.name else None)
    proj = GroupHom(G, Q, tuple(relabel[coset_of[x]] for x in range(G.order)))
    return Q, proj


def brute_force_homs(G: FiniteGroup, H: FiniteGroup) -> set[tuple[int, ...]]:
    """Independent oracle: filter every |H|^|gens| generator assignment.

    Only for tiny inputs; used by tests to validate enumerate_homs.
    """
    gens = G.generators
    out = set()
    for assignment in itertools.product(range(H.order), repeat=len(gens)):
        img = _extend_assignment(G, H, gens, assignment)
        if img is not None:
            out.add(img)
    return out


def _extend_assignment(G, H, gens, assignment):
    img = [-1] * G.order
    img[0] = 0
    queue = [0]
    seen = {0}
    while queue:
        x = queue.pop(0)
        for pos, g in enumerate(gens):
            y = G.table[x][g]
            v = H.table[img[x]][assignment[pos]]
            if y in seen:
                if img[y] != v:
                    return None
            else:
                seen.add(y)
                img[y] = v
                queue.append(y)
    return tuple(img)
