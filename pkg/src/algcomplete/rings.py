"""Finite (not necessarily unital) rings and their completeness verdicts.

For rings, every completeness notion collapses to the existence of a
multiplicative identity: the unitalization embedding R -> Z_m |x R is
normal (an ideal) and splits as a ring map exactly when R is unital.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import TableInvalid
from .groups import FiniteGroup, validate_table


@dataclass(frozen=True)
class FiniteRing:
    """Additive Cayley table (abelian group, zero at index 0) plus multiplication."""

    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    name: Optional[str] = None

    @staticmethod
    def create(add_table, mul_table, name: Optional[str] = None) -> "FiniteRing":
        at = tuple(tuple(int(v) for v in row) for row in add_table)
        mt = tuple(tuple(int(v) for v in row) for row in mul_table)
        validate_table(at)
        n = len(at)
        if len(mt) != n or any(len(r) != n for r in mt):
            raise TableInvalid("multiplication table shape mismatch")
        import numpy as np

        A = np.asarray(at, dtype=np.int64)
        M = np.asarray(mt, dtype=np.int64)
        if not np.array_equal(A, A.T):
            raise TableInvalid("addition is not commutative")
        if M.min() < 0 or M.max() >= n:
            raise TableInvalid("multiplication entry out of range")
        if not np.array_equal(M[M, :], M[:, M]):
            bad = np.argwhere(M[M, :] != M[:, M])[0]
            raise TableInvalid("multiplication not associative", tuple(int(v) for v in bad))
        # left: i(j+k) = ij + ik; right: (i+j)k = ik + jk
        if not np.array_equal(M[:, A], A[M[:, :, None], M[:, None, :]]):
            raise TableInvalid("left distributivity fails")
        rhs = A[M[:, None, :], M[None, :, :]]  # rhs[i,j,k] = ik + jk
        lhs = M[A, :]  # lhs[i,j,k] = (i+j)k
        if not np.array_equal(lhs, rhs):
            raise TableInvalid("right distributivity fails")
        return FiniteRing(at, mt, name)

    @property
    def order(self) -> int:
        return len(self.add_table)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    @cached_property
    def additive_group(self) -> FiniteGroup:
        return FiniteGroup(self.add_table, f"({self.name},+)" if self.name else None)

    @cached_property
    def additive_exponent(self) -> int:
        from math import lcm

        g = self.additive_group
        return lcm(*[g.element_order(x) for x in range(self.order)])

    def smul(self, k: int, a: int) -> int:
        """Integer scalar multiple k*a in the additive group."""
        if a == 0:
            return 0
        out = 0
        for _ in range(k % self.additive_group.element_order(a)):
            out = self.add(out, a)
        return out

    @cached_property
    def unit(self) -> Optional[int]:
        """The two-sided multiplicative identity, if one exists."""
        for e in range(self.order):
            if all(self.mul(e, x) == x and self.mul(x, e) == x for x in range(self.order)):
                return e
        return None


def ring_zn(n: int) -> FiniteRing:
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return FiniteRing.create(add, mul, f"Z/{n}")


def zero_ring(n: int) -> FiniteRing:
    """Additive Z_n with xy = 0."""
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return FiniteRing.create(add, mul, f"zero({n})")


def subring(R: FiniteRing, elements) -> FiniteRing:
    """The ring on a subset closed under + and *, relabeled with 0 first."""
    elems = sorted(set(elements))
    assert elems[0] == 0
    local = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            if R.add(a, b) not in local or R.mul(a, b) not in local:
                raise TableInvalid("subset is not closed", (a, b))
    add = tuple(tuple(local[R.add(a, b)] for b in elems) for a in elems)
    mul = tuple(tuple(local[R.mul(a, b)] for b in elems) for a in elems)
    return FiniteRing.create(add, mul)


@dataclass(frozen=True)
class Unitalization:
    """U = Z_m x R with (a,r)(b,s) = (ab, a.s + b.r + rs); kernel inclusion r -> (0,r)."""

    R: FiniteRing
    m: int
    U: FiniteRing

    def encode(self, a: int, r: int) -> int:
        return a * self.R.order + r

    def kernel_inclusion(self, r: int) -> int:
        return r


def unitalization(R: FiniteRing) -> Unitalization:
    m = R.additive_exponent
    n = R.order
    size = m * n

    def add(x, y):
        a, r = divmod(x, n)
        b, s = divmod(y, n)
        return ((a + b) % m) * n + R.add(r, s)

    def mul(x, y):
        a, r = divmod(x, n)
        b, s = divmod(y, n)
        val = R.add(R.add(R.smul(a, s), R.smul(b, r)), R.mul(r, s))
        return ((a * b) % m) * n + val

    at = tuple(tuple(add(x, y) for y in range(size)) for x in range(size))
    mt = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    name = f"Z{m}|x{R.name}" if R.name else None
    return Unitalization(R, m, FiniteRing.create(at, mt, name))


def _ring_retractions(u: Unitalization) -> list[tuple[int, ...]]:
    """All ring maps l: U -> R with l((0,r)) = r, by exhausting l((1,0)).

    Any additive retraction is determined by e = l((1,0)): additivity gives
    l((a,r)) = a.e + r, and the multiplicative law then holds iff e is a
    two-sided identity of R.  The search exhausts every e in R and verifies
    multiplicativity on all pairs, so the list is complete.
    """
    R, m, U = u.R, u.m, u.U
    n = R.order
    out = []
    for e in range(n):
        img = tuple(R.add(R.smul(a, e), r) for a in range(m) for r in range(n))
        ok = all(
            img[U.mul(x, y)] == R.mul(img[x], img[y])
            for x in range(U.order)
            for y in range(U.order)
        )
        if ok and all(
            img[U.add(x, y)] == R.add(img[x], img[y])
            for x in range(U.order)
            for y in range(U.order)
        ):
            out.append(img)
    return out


@dataclass(frozen=True)
class RingReport:
    name: str
    order: int
    has_unit: bool
    unit: Optional[int]
    proto_complete: bool
    complete: bool
    strong_complete: bool
    unitalization_splits: bool
    unitalization_order: int


def ring_classify(R: FiniteRing) -> RingReport:
    """Unitality by exhaustive search, cross-checked against the unitalization.

    All completeness flags equal has_unit; the kernel inclusion into the
    unitalization is the canonical normal (ideal) embedding and must split
    as a ring map exactly when a unit exists.
    """
    has_unit = R.unit is not None
    u = unitalization(R)
    retractions = _ring_retractions(u)
    splits = bool(retractions)
    assert splits == has_unit, "unitalization splitting must match unitality"
    if has_unit:
        # the retraction family is exactly {a.e + r} for two-sided units e;
        # units are unique, so the retraction is too
        assert len(retractions) == 1
    return RingReport(
        name=R.name or f"ring-of-order-{R.order}",
        order=R.order,
        has_unit=has_unit,
        unit=R.unit,
        proto_complete=has_unit,
        complete=has_unit,
        strong_complete=has_unit,
        unitalization_splits=splits,
        unitalization_order=u.U.order,
    )
