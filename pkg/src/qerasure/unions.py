"""Union codes and the intersection route to their erasure spaces.

The union of mutually orthogonal codes of equal length is the code spanned by
the concatenated bases.  For a two-component union C (+) UC built from a
unitary image, the membership conditions split by component block, so the
erasure space equals an intersection of five spaces derived from C alone: its
erasure space, the conjugate of that under U, right and left one-sided
multiples of the zero-block space (operators annihilated by the code
projector on both sides), and the space of operators whose expectation in the
first basis ket is unchanged by conjugation.  The union's pure space is the
analogous four-way intersection.  Both pipelines are cross-checked here
against the direct computation over the concatenated basis, which never
special-cases mixed component pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import QuantumCode, basis_matrix, transform_code
from .erasure import annihilating_space, erasure_space, pure_erasure_space
from .operator_space import (
    OperatorSubspace,
    SUBSPACE_TOL,
    coords_to_matrices,
    equality_residual,
    intersect,
    map_subspace,
    matrices_to_coords,
    pauli_index,
    pauli_order,
)
from .pauli import apply_to_amplitudes
from .states import CodeTransform, Ket, UnitaryAction

CROSS_ORTHOGONALITY_TOL = 1e-9


class OrthogonalityError(ValueError):
    """Two code components overlap beyond tolerance."""


@dataclass(frozen=True)
class UnionBuildReport:
    component_labels: tuple[str, ...]
    max_cross_inner: float
    k: int
    n: int


def union_code(codes: Sequence[QuantumCode],
               label: str | None = None) -> tuple[QuantumCode, UnionBuildReport]:
    """Concatenate mutually orthogonal codes into one code.

    Implemented as an iterated binary union: each component is checked
    against everything accumulated so far, so every cross-component pair is
    covered.  K adds up exactly.
    """
    if len(codes) < 2:
        raise ValueError("a union needs at least two codes")
    n = codes[0].n
    if any(c.n != n for c in codes):
        raise ValueError("codes have different lengths")
    kets = list(codes[0].basis)
    max_cross = 0.0
    for comp_idx, comp in enumerate(codes[1:], start=1):
        acc = np.column_stack([k.amplitudes for k in kets])
        overlaps = np.abs(acc.conj().T @ basis_matrix(comp))
        worst = float(np.max(overlaps))
        if worst >= CROSS_ORTHOGONALITY_TOL:
            i, j = np.unravel_index(int(np.argmax(overlaps)), overlaps.shape)
            raise OrthogonalityError(
                f"component {comp_idx} ({comp.label!r}) overlaps earlier basis: "
                f"|<b_{i}|c_{j}>| = {worst:.3e}"
            )
        max_cross = max(max_cross, worst)
        kets.extend(comp.basis)
    if label is None:
        label = "+".join(c.label or f"code{i}" for i, c in enumerate(codes))
    code = QuantumCode(n=n, k=len(kets), basis=tuple(kets), label=label)
    report = UnionBuildReport(
        component_labels=tuple(c.label for c in codes),
        max_cross_inner=max_cross,
        k=code.k,
        n=n,
    )
    return code, report


def _as_action(n: int, u) -> UnitaryAction:
    if isinstance(u, UnitaryAction):
        return u
    if isinstance(u, CodeTransform):
        return UnitaryAction.from_transform(u)
    return UnitaryAction.from_matrix(n, np.asarray(u, dtype=complex))


def _conjugation_permutation(u: UnitaryAction) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate permutation and signs realizing E -> U E U-adjoint.

    Only valid for Pauli-type transforms, where conjugation maps each basis
    Pauli to plus or minus another one of the same weight.
    """
    order = pauli_order(u.n)
    dest = np.empty(len(order), dtype=np.int64)
    coeff = np.empty(len(order), dtype=complex)
    for idx, op in enumerate(order):
        image = u.conjugate_pauli(op)
        dest[idx] = pauli_index(image)
        coeff[idx] = 1j**image.phase
    return dest, coeff


def _dense_map(n: int, left_mat: np.ndarray | None = None,
               right_mat: np.ndarray | None = None):
    def apply(cols: np.ndarray) -> np.ndarray:
        stack = coords_to_matrices(cols, n)
        if left_mat is not None:
            stack = np.einsum("ab,bck->ack", left_mat, stack)
        if right_mat is not None:
            stack = np.einsum("abk,bc->ack", stack, right_mat)
        return matrices_to_coords(stack, n)

    return apply


def conjugate_subspace(s: OperatorSubspace, u) -> OperatorSubspace:
    """Image of s under E -> U E U-adjoint; dimension is preserved.

    Pauli-type transforms act symbolically as a signed permutation of the
    coordinates; anything else goes through dense matrices.
    """
    action = _as_action(s.n, u)
    if action.is_pauli_type:
        dest, coeff = _conjugation_permutation(action)

        def apply(cols: np.ndarray) -> np.ndarray:
            out = np.empty_like(cols)
            out[dest] = coeff[:, None] * cols
            return out

        return map_subspace(s, apply)
    mat = action.matrix
    return map_subspace(s, _dense_map(s.n, left_mat=mat, right_mat=mat.conj().T))


def left_multiply_subspace(s: OperatorSubspace, u) -> OperatorSubspace:
    """Image of s under E -> U E."""
    return map_subspace(s, _dense_map(s.n, left_mat=_as_action(s.n, u).matrix))


def right_multiply_subspace(s: OperatorSubspace, u) -> OperatorSubspace:
    """Image of s under E -> E U (pass the adjoint action for E -> E U-adjoint)."""
    return map_subspace(s, _dense_map(s.n, right_mat=_as_action(s.n, u).matrix))


def _diagonal_expectations(ket: Ket) -> np.ndarray:
    """<ket|sigma|ket> for every Pauli in coordinate order."""
    order = pauli_order(ket.n)
    out = np.empty(len(order), dtype=complex)
    for idx, op in enumerate(order):
        out[idx] = np.vdot(ket.amplitudes, apply_to_amplitudes(op, ket.amplitudes))
    return out


def equal_expectation_space(code: QuantumCode, u,
                            anchor: int = 0) -> OperatorSubspace:
    """Operators whose expectation in basis ket `anchor` is conjugation-invariant.

    The single constraint <a|E|a> = <Ua|E|Ua> cuts the space down by at most
    one dimension.
    """
    if code.k < 1:
        raise ValueError("code has no basis kets")
    action = _as_action(code.n, u)
    ket = code.basis[anchor]
    row = _diagonal_expectations(ket) - _diagonal_expectations(action.apply(ket))
    return OperatorSubspace.from_constraints(code.n, row)


def _require_orthogonal_image(code: QuantumCode, action: UnitaryAction) -> QuantumCode:
    image = transform_code(code, action, label=f"U({code.label})")
    overlaps = np.abs(basis_matrix(code).conj().T @ basis_matrix(image))
    worst = float(np.max(overlaps))
    if worst >= CROSS_ORTHOGONALITY_TOL:
        raise OrthogonalityError(
            f"code and its unitary image overlap: max |<c_i|U|c_j>| = {worst:.3e}"
        )
    return image


def union_erasure_space_via_intersection(
    code: QuantumCode, u, *, check_anchor_independence: bool = False
) -> OperatorSubspace:
    """Erasure space of the union of a code with its orthogonal unitary image,
    computed as a five-way intersection instead of from the concatenated basis.

    The two within-component condition blocks contribute the erasure space of
    the code and its conjugate; the mixed blocks demand that every matrix
    element of E*U and of U-adjoint*E vanish, diagonals included, which is the
    annihilating space multiplied from the appropriate side (the pure space
    would wrongly re-admit scalar multiples of U, e.g. the pairing transform
    itself); the final factor equates the two components' diagonal values.
    """
    action = _as_action(code.n, u)
    _require_orthogonal_image(code, action)
    es = erasure_space(code)
    zs = annihilating_space(code)
    pieces = [
        es,
        conjugate_subspace(es, action),
        right_multiply_subspace(zs, action.adjoint()),
        left_multiply_subspace(zs, action),
        equal_expectation_space(code, action),
    ]
    result = intersect(pieces)
    if check_anchor_independence:
        # The expectation constraint nominally uses the first basis ket; any
        # other choice must give the same intersection.
        for anchor in range(1, code.k):
            pieces[-1] = equal_expectation_space(code, action, anchor=anchor)
            alt = intersect(pieces)
            if alt.dim != result.dim or equality_residual(alt, result) > SUBSPACE_TOL:
                raise RuntimeError(f"anchor {anchor} changed the intersection")
    return result


def union_pure_space_via_intersection(code: QuantumCode, u) -> OperatorSubspace:
    """Pure erasure space of the union, intersected from one component's data.

    Within-component blocks give the pure space and its conjugate; the mixed
    blocks again give one-sided images of the annihilating space.
    """
    action = _as_action(code.n, u)
    _require_orthogonal_image(code, action)
    ps = pure_erasure_space(code)
    zs = annihilating_space(code)
    return intersect([
        ps,
        conjugate_subspace(ps, action),
        right_multiply_subspace(zs, action.adjoint()),
        left_multiply_subspace(zs, action),
    ])


def cross_check_intersection_formulas(code: QuantumCode, u,
                                      tol: float = SUBSPACE_TOL) -> dict:
    """Run both intersection pipelines and compare against direct computation.

    Returns a report with, per formula, the pipeline dimension, the direct
    dimension, the equality residual (sine of the largest principal angle)
    and whether they match within tol.
    """
    action = _as_action(code.n, u)
    image = _require_orthogonal_image(code, action)
    union, _ = union_code([code, image])
    report = {}
    for key, pipeline, direct in (
        ("theorem4", union_erasure_space_via_intersection(code, action),
         erasure_space(union)),
        ("theorem5", union_pure_space_via_intersection(code, action),
         pure_erasure_space(union)),
    ):
        residual = equality_residual(pipeline, direct)
        report[key] = {
            "dim": pipeline.dim,
            "direct_dim": direct.dim,
            "residual": residual,
            "matches_direct": pipeline.dim == direct.dim and residual < tol,
        }
    return report
