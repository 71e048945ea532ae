"""Linear subspaces of n-qubit operator space in Pauli coordinates.

Every operator E on 2^n dimensions expands uniquely as E = sum_sigma e_sigma
* sigma over the 4^n phase-0 Pauli products, taken in the fixed enumeration
order of enumerate_paulis(n, n).  The coefficient vector e is the coordinate
representation used throughout; since tr(sigma tau) = 2^n * delta, the plain
complex dot product on coordinates agrees with the Hilbert-Schmidt inner
product up to the constant 2^n, so orthonormal coordinate bases describe
operator subspaces faithfully.

A subspace keeps an orthonormal basis of coordinate vectors, and caches an
orthonormal basis of its orthogonal complement.  Constraint systems in this
module have few rows and huge nullspaces, so the complement (the conjugated
row space) is the cheap representation; the spanning basis is completed from
it on first use.  Unitary maps of operator space preserve both parts.

Numerical conventions: ranks are read from singular values with a relative
threshold of RANK_RTOL times the largest one, and membership or containment
residuals are compared against 1e-8.  All bundled constructions involve exact
dyadic amplitudes, which leaves several orders of magnitude of margin.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
import scipy.sparse

from .pauli import PauliOperator, enumerate_paulis, _index_aligned_masks

RANK_RTOL = 1e-8
MEMBERSHIP_TOL = 1e-8
SUBSPACE_TOL = 1e-8


@lru_cache(maxsize=None)
def pauli_order(n: int) -> tuple[PauliOperator, ...]:
    """The fixed coordinate ordering of all 4^n phase-0 Pauli operators."""
    return tuple(enumerate_paulis(n, n))


@lru_cache(maxsize=None)
def _mask_index(n: int) -> dict[tuple[int, int], int]:
    return {(p.x_mask, p.z_mask): i for i, p in enumerate(pauli_order(n))}


def pauli_index(p: PauliOperator) -> int:
    """Position of p's mask pair in the coordinate ordering."""
    return _mask_index(p.n)[(p.x_mask, p.z_mask)]


def pauli_coords(p: PauliOperator) -> np.ndarray:
    """Coordinate vector of p: the single entry i**phase at its index."""
    v = np.zeros(4**p.n, dtype=complex)
    v[pauli_index(p)] = 1j**p.phase
    return v


@lru_cache(maxsize=None)
def _support_masks(n: int) -> np.ndarray:
    return np.array([p.x_mask | p.z_mask for p in pauli_order(n)], dtype=np.int64)


def operator_weight(coords: np.ndarray, n: int, tol: float = 1e-9) -> int:
    """Size of the union of supports of the nonzero Pauli components."""
    live = np.abs(coords) > tol
    joined = np.bitwise_or.reduce(_support_masks(n)[live]) if live.any() else 0
    return int(joined).bit_count()


@lru_cache(maxsize=None)
def _flattened_pauli_basis(n: int) -> scipy.sparse.csr_matrix:
    """Sparse (4^n, 4^n) matrix whose column p is the row-major flattening
    of the p-th Pauli.  Each column has exactly 2^n nonzero entries."""
    dim = 1 << n
    idx = np.arange(dim)
    cols, rows, data = [], [], []
    for p, op in enumerate(pauli_order(n)):
        rx, rz = _index_aligned_masks(op)
        lam = (op.x_mask & op.z_mask).bit_count() % 4
        phases = (1j**lam) * (1 - 2 * (np.bitwise_count(idx & rz) & 1).astype(np.int64))
        rows.append((idx ^ rx) * dim + idx)
        cols.append(np.full(dim, p))
        data.append(phases.astype(complex))
    return scipy.sparse.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(4**n, 4**n),
    )


def coords_to_matrices(coords: np.ndarray, n: int) -> np.ndarray:
    """Coordinate vectors (columns) to dense operators, shape (2^n, 2^n, k)."""
    v = np.atleast_2d(coords.T).T  # promote a single vector to one column
    flat = _flattened_pauli_basis(n) @ v
    return flat.reshape(1 << n, 1 << n, v.shape[1])


def matrices_to_coords(mats: np.ndarray, n: int) -> np.ndarray:
    """Inverse of coords_to_matrices; accepts (2^n, 2^n) or (2^n, 2^n, k)."""
    single = mats.ndim == 2
    if single:
        mats = mats[:, :, None]
    flat = mats.reshape(4**n, mats.shape[2])
    out = (_flattened_pauli_basis(n).conj().T @ flat) / (1 << n)
    return out[:, 0] if single else out


def coords_to_matrix(coords: np.ndarray, n: int) -> np.ndarray:
    return coords_to_matrices(coords, n)[:, :, 0]


def _as_columns(arr: np.ndarray, dim: int) -> np.ndarray:
    a = np.asarray(arr, dtype=complex)
    if a.ndim == 1:
        a = a[:, None]
    if a.shape[0] != dim:
        raise ValueError(f"expected vectors of length {dim}, got {a.shape[0]}")
    return a


def _complete_orthonormal(part: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of the given columns."""
    dim, k = part.shape
    if k == 0:
        return np.eye(dim, dtype=complex)
    q = np.linalg.qr(part, mode="complete")[0]
    return q[:, k:]


class OperatorSubspace:
    """An operator subspace, held as orthonormal coordinate-vector bases.

    Exactly one of basis/complement is required; the other is derived lazily.
    Both arrays have shape (4^n, k) with orthonormal columns.
    """

    def __init__(self, n: int, basis: np.ndarray | None = None,
                 complement: np.ndarray | None = None):
        if basis is None and complement is None:
            raise ValueError("provide a basis or a complement")
        self.n = n
        self.total_dim = 4**n
        self._basis = None if basis is None else _as_columns(basis, self.total_dim)
        self._complement = (
            None if complement is None else _as_columns(complement, self.total_dim)
        )
        if self._basis is not None and self._complement is not None:
            if self._basis.shape[1] + self._complement.shape[1] != self.total_dim:
                raise ValueError("basis and complement dimensions do not add up")

    @property
    def dim(self) -> int:
        if self._basis is not None:
            return self._basis.shape[1]
        return self.total_dim - self._complement.shape[1]

    @property
    def basis(self) -> np.ndarray:
        if self._basis is None:
            self._basis = _complete_orthonormal(self._complement)
        return self._basis

    @property
    def complement(self) -> np.ndarray:
        if self._complement is None:
            self._complement = _complete_orthonormal(self._basis)
        return self._complement

    @classmethod
    def full(cls, n: int) -> "OperatorSubspace":
        return cls(n, complement=np.zeros((4**n, 0), dtype=complex))

    @classmethod
    def from_constraints(cls, n: int, rows: np.ndarray,
                         rtol: float = RANK_RTOL) -> "OperatorSubspace":
        """Nullspace {v : rows @ v = 0} of a (m, 4^n) constraint system.

        The conjugated row space is the complement of the nullspace, so a
        thin SVD of the rows is all that is needed up front.
        """
        rows = np.asarray(rows, dtype=complex)
        if rows.ndim == 1:
            rows = rows[None, :]
        if rows.shape[0] == 0:
            return cls.full(n)
        if rows.shape[1] != 4**n:
            raise ValueError(f"constraint rows must have 4^{n} columns")
        _, s, vh = np.linalg.svd(rows, full_matrices=False)
        rank = 0 if s.size == 0 else int(np.sum(s > rtol * s[0]))
        return cls(n, complement=vh[:rank].conj().T)

    @classmethod
    def from_span(cls, n: int, vectors: np.ndarray,
                  rtol: float = RANK_RTOL) -> "OperatorSubspace":
        """Subspace spanned by the given (not necessarily orthonormal) columns."""
        cols = _as_columns(vectors, 4**n)
        if cols.shape[1] == 0:
            return cls(n, basis=cols)
        u, s, _ = np.linalg.svd(cols, full_matrices=False)
        rank = 0 if s.size == 0 else int(np.sum(s > rtol * s[0]))
        return cls(n, basis=u[:, :rank])

    def member_residual(self, coords: np.ndarray) -> float:
        """Relative norm of the component of coords outside the subspace."""
        v = np.asarray(coords, dtype=complex)
        nrm = np.linalg.norm(v)
        if nrm == 0:
            return 0.0
        if self._complement is not None:
            return float(np.linalg.norm(self._complement.conj().T @ v) / nrm)
        b = self.basis
        return float(np.linalg.norm(v - b @ (b.conj().T @ v)) / nrm)

    def contains_operator(self, coords: np.ndarray,
                          tol: float = MEMBERSHIP_TOL) -> bool:
        return self.member_residual(coords) < tol

    def validate(self, tol: float = 1e-9) -> None:
        """Check orthonormality of whatever is materialized; for tests."""
        for part in (self._basis, self._complement):
            if part is not None and part.shape[1] > 0:
                gram = part.conj().T @ part
                if np.max(np.abs(gram - np.eye(part.shape[1]))) > tol:
                    raise ValueError("stored basis is not orthonormal")

    def __repr__(self) -> str:
        return f"OperatorSubspace(n={self.n}, dim={self.dim})"


def map_subspace(s: OperatorSubspace,
                 f: Callable[[np.ndarray], np.ndarray]) -> OperatorSubspace:
    """Image of s under a coordinate map that is unitary on operator space.

    Such a map sends orthonormal bases to orthonormal bases and preserves
    complements, so whichever parts are already materialized map directly.
    """
    basis = f(s._basis) if s._basis is not None else None
    comp = f(s._complement) if s._complement is not None else None
    return OperatorSubspace(s.n, basis=basis, complement=comp)


def intersect(subspaces: Sequence[OperatorSubspace]) -> OperatorSubspace:
    """Common subspace of all inputs.

    A vector lies in every subspace exactly when it is orthogonal to every
    complement, so the intersection is the nullspace of the stacked
    complement constraints.
    """
    if len(subspaces) == 0:
        raise ValueError("need at least one subspace")
    n = subspaces[0].n
    if any(s.n != n for s in subspaces):
        raise ValueError("subspaces live on different qubit counts")
    rows = np.vstack([s.complement.conj().T for s in subspaces])
    if rows.shape[0] == 0:
        return OperatorSubspace.full(n)
    return OperatorSubspace.from_constraints(n, rows)


def _largest_singular_value(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    return float(np.linalg.svd(m, compute_uv=False)[0])


def containment_residual(inner: OperatorSubspace, outer: OperatorSubspace) -> float:
    """Sine of the largest principal angle obstructing inner <= outer.

    Zero (up to roundoff) exactly when every inner vector lies in outer.
    Computed from complements when both are cached, since inner <= outer is
    equivalent to complement(outer) <= complement(inner).
    """
    if inner.n != outer.n:
        raise ValueError("subspaces live on different qubit counts")
    if inner.dim == 0 or outer.dim == outer.total_dim:
        return 0.0
    if inner._complement is not None and outer._complement is not None:
        ci, co = inner._complement, outer._complement
        return _largest_singular_value(co - ci @ (ci.conj().T @ co))
    return _largest_singular_value(outer.complement.conj().T @ inner.basis)


def equality_residual(a: OperatorSubspace, b: OperatorSubspace) -> float:
    """Max of the two containment residuals; near zero iff the spaces agree."""
    return max(containment_residual(a, b), containment_residual(b, a))
