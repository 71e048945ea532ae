"""Erasure-correctability conditions and the spaces of operators they carve out.

An operator E is an erasure-space member of a code when every off-diagonal
code matrix element <c_i|E|c_j> vanishes and all diagonal elements agree; it
is a pure-space member when <c_i|E|c_j> equals (tr E / 2^n) * delta_ij, the
unique linear strengthening that forces the common diagonal value to be the
identity component of E.  Both condition families are linear in E, so each
space is the nullspace of a small constraint system over Pauli coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import QuantumCode, basis_matrix
from .operator_space import OperatorSubspace, coords_to_matrix, pauli_order
from .pauli import PauliOperator, apply_to_amplitudes, pauli_to_string, weight

MATRIX_ELEMENT_TOL = 1e-9


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of a single membership test.

    witness is (i, j, deviation) for the first violated matrix-element
    condition in row-major order, where deviation is the offending matrix
    element minus its required value; alpha is the common diagonal value and
    is only set for members.
    """

    member: bool
    alpha: complex | None = None
    witness: tuple[int, int, complex] | None = None


def _gram_matrix(code: QuantumCode, op) -> np.ndarray:
    """All K x K code matrix elements of op.

    op may be a PauliOperator, a dense (2^n, 2^n) array, or a coordinate
    vector of length 4^n.
    """
    mat = basis_matrix(code)
    if isinstance(op, PauliOperator):
        if op.n != code.n:
            raise ValueError(f"qubit count mismatch: {op.n} != {code.n}")
        return mat.conj().T @ apply_to_amplitudes(op, mat)
    dense = np.asarray(op, dtype=complex)
    if dense.ndim == 1:
        if dense.shape[0] != 4**code.n:
            raise ValueError(f"coordinate vector has length {dense.shape[0]}, expected {4**code.n}")
        dense = coords_to_matrix(dense, code.n)
    if dense.shape != (1 << code.n, 1 << code.n):
        raise ValueError(f"operator shape {dense.shape} does not fit n={code.n}")
    return mat.conj().T @ dense @ mat


def _trace_over_dim(code: QuantumCode, op) -> complex:
    if isinstance(op, PauliOperator):
        return 1j**op.phase if op.x_mask == 0 and op.z_mask == 0 else 0.0
    arr = np.asarray(op, dtype=complex)
    if arr.ndim == 1:
        return complex(arr[0])  # identity is coordinate 0
    return complex(np.trace(arr)) / (1 << code.n)


def check_erasure(code: QuantumCode, op,
                  tol: float = MATRIX_ELEMENT_TOL) -> MembershipReport:
    """Test the matching-diagonal conditions for a single operator."""
    gram = _gram_matrix(code, op)
    for i in range(code.k):
        for j in range(code.k):
            if i == j:
                if i > 0 and abs(gram[i, i] - gram[0, 0]) >= tol:
                    return MembershipReport(False, witness=(i, i, complex(gram[i, i] - gram[0, 0])))
            elif abs(gram[i, j]) >= tol:
                return MembershipReport(False, witness=(i, j, complex(gram[i, j])))
    return MembershipReport(True, alpha=complex(np.mean(np.diag(gram))))


def check_pure(code: QuantumCode, op,
               tol: float = MATRIX_ELEMENT_TOL) -> MembershipReport:
    """Test the stronger scaled-identity condition for a single operator."""
    gram = _gram_matrix(code, op)
    alpha = _trace_over_dim(code, op)
    for i in range(code.k):
        for j in range(code.k):
            required = alpha if i == j else 0.0
            if abs(gram[i, j] - required) >= tol:
                return MembershipReport(False, witness=(i, j, complex(gram[i, j] - required)))
    return MembershipReport(True, alpha=complex(alpha))


def _pauli_gram_tensor(code: QuantumCode) -> np.ndarray:
    """<c_i|sigma|c_j> for every Pauli in coordinate order: shape (4^n, K, K)."""
    mat = basis_matrix(code)
    order = pauli_order(code.n)
    out = np.empty((len(order), code.k, code.k), dtype=complex)
    for idx, op in enumerate(order):
        out[idx] = mat.conj().T @ apply_to_amplitudes(op, mat)
    return out


def erasure_space(code: QuantumCode) -> OperatorSubspace:
    """The space of all operators passing check_erasure, as a subspace.

    One constraint row per ordered off-diagonal pair (lexicographic), then
    one row per diagonal difference against the first basis ket.
    """
    grams = _pauli_gram_tensor(code)
    rows = []
    for i in range(code.k):
        for j in range(code.k):
            if i != j:
                rows.append(grams[:, i, j])
    for i in range(1, code.k):
        rows.append(grams[:, i, i] - grams[:, 0, 0])
    if not rows:
        return OperatorSubspace.full(code.n)
    return OperatorSubspace.from_constraints(code.n, np.array(rows))


def pure_erasure_space(code: QuantumCode) -> OperatorSubspace:
    """The space of all operators passing check_pure; contained in erasure_space.

    Rows cover all K^2 pairs; the diagonal rows subtract the identity
    coordinate so that, for example, the identity operator always passes.
    """
    grams = _pauli_gram_tensor(code)
    rows = np.empty((code.k**2, grams.shape[0]), dtype=complex)
    pos = 0
    for i in range(code.k):
        for j in range(code.k):
            row = grams[:, i, j].copy()
            if i == j:
                row[0] -= 1.0  # tr(sigma)/2^n is 1 at the identity, 0 elsewhere
            rows[pos] = row
            pos += 1
    return OperatorSubspace.from_constraints(code.n, rows)


def annihilating_space(code: QuantumCode) -> OperatorSubspace:
    """Operators whose code matrix elements all vanish: P E P = 0.

    This is the pure erasure space with the identity direction swapped out
    for a trace-carrying one: the pure space is the span of the identity
    plus the traceless part of this space.  It is the exact one-sided factor
    for union erasure spaces, because the mixed-component conditions of a
    union force every matrix element of E*U (and of U-adjoint*E) to zero,
    diagonals included.
    """
    grams = _pauli_gram_tensor(code)
    rows = grams.reshape(grams.shape[0], code.k**2).T
    return OperatorSubspace.from_constraints(code.n, rows)


@dataclass(frozen=True)
class WeightClassification:
    """Membership tally for all Paulis of one weight."""

    weight: int
    members: int
    non_members: int
    violators: tuple[str, ...]
    witnesses: tuple[tuple[int, int, complex], ...]


def classify_paulis(code: QuantumCode, max_weight: int | None = None,
                    pure: bool = False) -> list[WeightClassification]:
    """Tally membership of every phase-0 Pauli up to max_weight, by weight."""
    if max_weight is None:
        max_weight = code.n
    if not 0 <= max_weight <= code.n:
        raise ValueError(f"max_weight must be in [0, {code.n}], got {max_weight}")
    checker = check_pure if pure else check_erasure
    buckets: dict[int, list] = {w: [] for w in range(max_weight + 1)}
    counts = {w: 0 for w in range(max_weight + 1)}
    for op in pauli_order(code.n):
        w = weight(op)
        if w > max_weight:
            continue
        counts[w] += 1
        report = checker(code, op)
        if not report.member:
            buckets[w].append((pauli_to_string(op), report.witness))
    out = []
    for w in range(max_weight + 1):
        viols = buckets[w]
        out.append(WeightClassification(
            weight=w,
            members=counts[w] - len(viols),
            non_members=len(viols),
            violators=tuple(label for label, _ in viols),
            witnesses=tuple(wit for _, wit in viols),
        ))
    return out


def _distance_scan(code: QuantumCode, checker) -> int:
    for op in pauli_order(code.n):  # ascending weight
        if not checker(code, op).member:
            return weight(op)
    return code.n + 1


def minimum_distance(code: QuantumCode) -> int:
    """Smallest weight of a Pauli failing check_erasure; n+1 when none does.

    Scanning Paulis suffices: an operator supported on t qubits expands over
    Paulis of weight at most t, and membership is linear.  A value of n+1
    means every operator passes (the degenerate case, e.g. any K=1 code).
    """
    return _distance_scan(code, check_erasure)


def pure_distance(code: QuantumCode) -> int:
    """Smallest weight of a Pauli failing check_pure; n+1 when none does."""
    return _distance_scan(code, check_pure)


def is_degenerate_distance(code: QuantumCode, distance: int) -> bool:
    """True when a scan found no violator at all."""
    return distance == code.n + 1


def hermitian_basis(s: OperatorSubspace, tol: float = 1e-9) -> list[np.ndarray]:
    """A spanning set of s made of Hermitian and anti-Hermitian operators.

    Conjugating coordinates realizes the adjoint (the basis Paulis are
    Hermitian), so s must be closed under conjugation; each returned vector
    is v + conj(v) or v - conj(v) for a basis vector v, i.e. has all-real or
    all-imaginary coordinates.  The set has exactly dim(s) elements.
    """
    b = s.basis
    for col in range(b.shape[1]):
        if s.member_residual(np.conj(b[:, col])) > tol:
            raise ValueError("subspace is not closed under the adjoint")
    selected: list[np.ndarray] = []
    ortho = np.zeros((s.total_dim, s.dim), dtype=complex)
    taken = 0
    for col in range(b.shape[1]):
        v = b[:, col]
        for cand in (v + np.conj(v), v - np.conj(v)):
            nrm = np.linalg.norm(cand)
            if nrm < 1e-12:
                continue
            q = ortho[:, :taken]
            resid = cand - q @ (q.conj().T @ cand)
            rnrm = np.linalg.norm(resid)
            if rnrm > 1e-8 * nrm:
                selected.append(cand)
                ortho[:, taken] = resid / rnrm
                taken += 1
    if len(selected) != s.dim:
        raise RuntimeError(
            f"symmetrization selected {len(selected)} elements for a dim-{s.dim} space"
        )
    return selected
