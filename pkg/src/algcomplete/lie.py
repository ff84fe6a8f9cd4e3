"""Lie algebras over prime fields: derivations, ad, completeness verdicts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import SearchBudgetExceeded, TableInvalid

# enumeration cap for bracket-respecting sections: p^(center_dim * der_dim)
SECTION_EXPONENT_CAP = 6


# -- F_p linear algebra --------------------------------------------------------


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced echelon form mod p and the pivot column list."""
    m = mat.copy() % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot = next((i for i in range(r, rows) if m[i, c] % p != 0), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and m[i, c] % p != 0:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of the kernel, as columns; shape (cols, nullity)."""
    rows, cols = mat.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = _rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        basis[c, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, c]) % p
    return basis


def solve_linear(mat: np.ndarray, rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution of mat @ x = rhs mod p, or None."""
    rows, cols = mat.shape
    aug = np.concatenate([mat % p, rhs.reshape(rows, 1) % p], axis=1)
    r, pivots = _rref(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


def rank(mat: np.ndarray, p: int) -> int:
    if 0 in mat.shape:
        return 0
    return len(_rref(mat, p)[1])


# -- the structures ------------------------------------------------------------


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j][k] over F_p: [e_i, e_j] = sum_k c[i][j][k] e_k."""

    p: int
    dim: int
    sc: tuple
    name: Optional[str] = None

    @staticmethod
    def create(p: int, sc, name: Optional[str] = None) -> "LieAlgebra":
        c = np.asarray(sc, dtype=np.int64) % p
        d = c.shape[0] if c.ndim == 3 else 0
        if d and c.shape != (d, d, d):
            raise TableInvalid("structure constants must be a d*d*d cube")
        if d:
            if not np.array_equal(c, (-c.transpose(1, 0, 2)) % p):
                raise TableInvalid("bracket is not antisymmetric")
            if np.any(c[np.arange(d), np.arange(d)] % p):
                raise TableInvalid("[x,x] must vanish")
            # Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
            t = np.einsum("ijl,lkm->ijkm", c, c)
            jac = (t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)) % p
            if np.any(jac):
                bad = np.argwhere(jac)[0]
                raise TableInvalid("Jacobi identity fails", tuple(int(v) for v in bad))
        cube = tuple(tuple(tuple(int(v) for v in row) for row in plane) for plane in c)
        return LieAlgebra(p, d, cube, name)

    @cached_property
    def _c(self) -> np.ndarray:
        return np.asarray(self.sc, dtype=np.int64).reshape(self.dim, self.dim, self.dim)

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x % self.p, y % self.p, self._c) % self.p

    def ad_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of [x, -] acting on coordinate columns: M[k][j] = sum_i x_i c[i][j][k]."""
        return np.einsum("i,ijk->kj", x % self.p, self._c) % self.p


def abelian_lie(dim: int, p: int) -> LieAlgebra:
    return LieAlgebra.create(p, np.zeros((dim, dim, dim)), f"abelian{dim}(F{p})")


def nonabelian2(p: int) -> LieAlgebra:
    """The 2-dim algebra with [e1, e2] = e2."""
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 1, 1] = 1
    c[1, 0, 1] = p - 1
    return LieAlgebra.create(p, c, f"aff2(F{p})")


def sl2(p: int) -> LieAlgebra:
    """Basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 1, 2], c[1, 0, 2] = 1, p - 1
    c[2, 0, 0], c[0, 2, 0] = 2 % p, (p - 2) % p
    c[2, 1, 1], c[1, 2, 1] = (p - 2) % p, 2 % p
    return LieAlgebra.create(p, c, f"sl2(F{p})")


@dataclass(frozen=True)
class DerivationData:
    """Der(L) with a chosen basis, its bracket, and the ad map into it."""

    L: LieAlgebra
    basis: tuple  # tuple of d*d int matrices (as nested tuples)
    der: LieAlgebra  # Der(L) in the chosen basis
    ad_coords: np.ndarray  # shape (der.dim, L.dim): column i = coords of ad(e_i)


def lie_derivations(L: LieAlgebra) -> DerivationData:
    """Solve D[x,y] = [Dx,y] + [x,Dy] as a linear system in the d^2 entries of D.

    Unknowns are D[r][s] (row-major); one equation per (i, j, k): the
    k-coordinate of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] vanishes.
    """
    p, d = L.p, L.dim
    if d == 0:
        der = LieAlgebra.create(p, np.zeros((0, 0, 0)), f"Der({L.name})" if L.name else None)
        return DerivationData(L, (), der, np.zeros((0, 0), dtype=np.int64))
    c = L._c
    # coeff[i,j,k, r,s] of unknown D[r,s] in equation (i,j,k)
    coeff = np.zeros((d, d, d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for s in range(d):
                    coeff[i, j, k, k, s] += c[i, j, s]  # D applied to [ei,ej]
                coeff[i, j, k, :, i] -= c[:, j, k]  # -[De_i, e_j]
                coeff[i, j, k, :, j] -= c[i, :, k]  # -[e_i, De_j]
    system = coeff.reshape(d * d * d, d * d) % p
    ns = nullspace(system, p)  # (d*d, m)
    m = ns.shape[1]
    mats = [ns[:, t].reshape(d, d) % p for t in range(m)]
    # express [Di, Dj] = DiDj - DjDi in the basis; coordinates are unique
    flat = ns % p  # columns are the basis, already independent
    sc = np.zeros((m, m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            comm = (mats[i] @ mats[j] - mats[j] @ mats[i]) % p
            coords = solve_linear(flat, comm.reshape(d * d), p)
            assert coords is not None, "Der must be closed under commutators"
            sc[i, j] = coords
            sc[j, i] = (-coords) % p
    der = LieAlgebra.create(p, sc, f"Der({L.name})" if L.name else None)
    ad_coords = np.zeros((m, d), dtype=np.int64)
    for i in range(d):
        adm = L.ad_matrix(np.eye(d, dtype=np.int64)[i])
        coords = solve_linear(flat, adm.reshape(d * d), p)
        assert coords is not None, "inner derivations must lie in Der"
        ad_coords[:, i] = coords
    return DerivationData(L, tuple(tuple(map(tuple, mm)) for mm in mats), der, ad_coords)


@dataclass(frozen=True)
class LieReport:
    name: str
    p: int
    dim: int
    center_dim: int
    der_dim: int
    is_perfect: bool
    proto_complete: bool
    strong_complete: bool
    section: Optional[tuple] = None


def _bracket_respecting_sections(
    L: LieAlgebra, data: DerivationData, limit: int = 1
) -> list[np.ndarray]:
    """Linear sections s of ad: L -> Der with s a Lie map, as (d, m) matrices.

    The affine family of linear sections is S0 + Z @ C over all C; each
    member is tested against every basis bracket of Der.  Enumeration size
    p^(z*m) is capped; exceeding the cap raises instead of guessing.
    """
    p, d = L.p, L.dim
    A = data.ad_coords  # (m, d)
    m = data.der.dim
    if m == 0:
        return [np.zeros((d, 0), dtype=np.int64)]
    cols = []
    for j in range(m):
        x = solve_linear(A, np.eye(m, dtype=np.int64)[j], p)
        if x is None:
            return []  # ad not surjective: no section at all
        cols.append(x)
    S0 = np.stack(cols, axis=1) % p  # (d, m)
    Z = nullspace(A, p)  # (d, z) = center
    z = Z.shape[1]
    if z * m > SECTION_EXPONENT_CAP:
        raise SearchBudgetExceeded(f"section family of size {p}^{z * m}")
    dsc = data.der._c
    out = []
    for entries in itertools.product(range(p), repeat=z * m):
        C = np.asarray(entries, dtype=np.int64).reshape(z, m)
        S = (S0 + Z @ C) % p
        ok = True
        for i in range(m):
            for j in range(i + 1, m):
                want = (S @ dsc[i, j]) % p
                got = L.bracket(S[:, i], S[:, j])
                if not np.array_equal(want, got):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(S)
            if len(out) >= limit:
                break
    return out


def lie_classify(L: LieAlgebra, check_derivation_algebra: bool = True) -> LieReport:
    """Completeness verdicts with ad in the role of the conjugation morphism.

    strong-complete iff ad: L -> Der(L) is bijective; proto-complete iff ad
    admits a bracket-respecting linear section.  For perfect centerless L
    the derivation algebra itself must come out strong-complete, which is
    asserted here by recursing once.
    """
    p, d = L.p, L.dim
    data = lie_derivations(L)
    m = data.der.dim
    A = data.ad_coords
    center_dim = d - rank(A, p) if d else 0
    # cross-check the center against the brute-force definition of kernel(ad)
    stacked = (
        np.concatenate([L.ad_matrix(np.eye(d, dtype=np.int64)[i]).reshape(-1, 1) for i in range(d)], axis=1)
        if d
        else np.zeros((0, 0), dtype=np.int64)
    )
    assert center_dim == (d - rank(stacked, p) if d else 0)
    if d:
        brackets = L._c.reshape(d * d, d).T  # columns span [L, L]
        is_perfect = rank(brackets, p) == d
    else:
        is_perfect = True
    strong = center_dim == 0 and m == d
    sections = _bracket_respecting_sections(L, data, limit=1)
    proto = bool(sections)
    if strong:
        assert proto, "a bijective ad admits its inverse as a section"
    if is_perfect and center_dim == 0 and check_derivation_algebra:
        der_rep = lie_classify(data.der, check_derivation_algebra=False)
        assert der_rep.strong_complete, (
            "derivation algebra of a perfect centerless algebra must be strong-complete"
        )
    section = None
    if sections:
        section = tuple(tuple(int(v) for v in row) for row in sections[0])
    return LieReport(
        name=L.name or f"lie-dim-{d}-F{p}",
        p=p,
        dim=d,
        center_dim=center_dim,
        der_dim=m,
        is_perfect=is_perfect,
        proto_complete=proto,
        strong_complete=strong,
        section=section,
    )
