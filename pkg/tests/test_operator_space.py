import numpy as np
import pytest
import scipy.linalg

from qerasure import (
    OperatorSubspace,
    containment_residual,
    coords_to_matrix,
    coords_to_matrices,
    enumerate_paulis,
    equality_residual,
    intersect,
    matrices_to_coords,
    operator_weight,
    pauli_coords,
    pauli_from_string,
    pauli_index,
    pauli_order,
    pauli_to_string,
    to_matrix,
)
from qerasure.operator_space import map_subspace

from _oracle import dense_pauli, sorted_paulis


def span_of(labels, n):
    vecs = np.column_stack([pauli_coords(pauli_from_string(s)) for s in labels])
    return OperatorSubspace.from_span(n, vecs)


def test_pauli_order_matches_oracle():
    for n in (1, 2, 3):
        assert [pauli_to_string(p) for p in pauli_order(n)] == sorted_paulis(n)
        assert all(pauli_index(p) == i for i, p in enumerate(pauli_order(n)))


def test_coords_dense_round_trip_all_paulis():
    for n in (1, 2, 3):
        for p in enumerate_paulis(n, n):
            dm = to_matrix(p)
            assert np.allclose(coords_to_matrix(pauli_coords(p), n), dm, atol=1e-12)
            assert np.allclose(matrices_to_coords(dm, n), pauli_coords(p), atol=1e-12)


def test_coords_dense_round_trip_random(rng):
    n = 3
    v = rng.standard_normal(4**n) + 1j * rng.standard_normal(4**n)
    assert np.allclose(matrices_to_coords(coords_to_matrix(v, n), n), v, atol=1e-10)
    # oracle route: expand the vector as an explicit Pauli sum
    dense = sum(c * dense_pauli(s) for c, s in zip(v, sorted_paulis(n)))
    assert np.allclose(coords_to_matrix(v, n), dense, atol=1e-10)


def test_coords_batch_shape(rng):
    cols = rng.standard_normal((16, 3)) + 1j * rng.standard_normal((16, 3))
    stack = coords_to_matrices(cols, 2)
    assert stack.shape == (4, 4, 3)
    assert np.allclose(matrices_to_coords(stack, 2), cols, atol=1e-10)


def test_from_constraints_nullspace(rng):
    n = 2
    rows = rng.standard_normal((5, 16)) + 1j * rng.standard_normal((5, 16))
    s = OperatorSubspace.from_constraints(n, rows)
    assert s.dim == 16 - np.linalg.matrix_rank(rows)
    assert np.max(np.abs(rows @ s.basis)) < 1e-9
    s.validate()
    # complement and basis together form a unitary
    q = np.hstack([s.basis, s.complement])
    assert np.allclose(q.conj().T @ q, np.eye(16), atol=1e-9)


def test_from_constraints_handles_dependent_rows(rng):
    n = 2
    row = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    s = OperatorSubspace.from_constraints(n, np.vstack([row, 2 * row, 1j * row]))
    assert s.dim == 15


def test_full_space():
    s = OperatorSubspace.full(2)
    assert s.dim == 16
    assert s.member_residual(pauli_coords(pauli_from_string("XY"))) == 0.0


def test_empty_constraints_give_full_space():
    s = OperatorSubspace.from_constraints(2, np.zeros((0, 16)))
    assert s.dim == 16


def test_from_span_drops_dependent_columns(rng):
    v = pauli_coords(pauli_from_string("XI"))
    s = OperatorSubspace.from_span(2, np.column_stack([v, 3 * v]))
    assert s.dim == 1


def test_intersect_hand_example():
    a = span_of(["XI", "ZI"], 2)
    b = span_of(["XI", "YI"], 2)
    meet = intersect([a, b])
    assert meet.dim == 1
    assert meet.member_residual(pauli_coords(pauli_from_string("XI"))) < 1e-12


def test_intersect_with_full_and_self(rng):
    s = span_of(["XZ", "YI", "IZ"], 2)
    assert equality_residual(intersect([s, OperatorSubspace.full(2)]), s) < 1e-12
    assert equality_residual(intersect([s, s]), s) < 1e-12


def test_intersect_membership_probes(rng):
    n = 2
    spaces = [
        OperatorSubspace.from_constraints(
            n, rng.standard_normal((3, 16)) + 1j * rng.standard_normal((3, 16)))
        for _ in range(3)
    ]
    meet = intersect(spaces)
    for _ in range(20):
        coeff = rng.standard_normal(meet.dim) + 1j * rng.standard_normal(meet.dim)
        probe = meet.basis @ coeff
        assert all(s.member_residual(probe) < 1e-9 for s in spaces)


def test_containment_residual_against_scipy(rng):
    n = 2
    big = OperatorSubspace.from_span(
        n, rng.standard_normal((16, 9)) + 1j * rng.standard_normal((16, 9)))
    small = OperatorSubspace.from_span(n, big.basis[:, :4])
    assert containment_residual(small, big) < 1e-10
    other = OperatorSubspace.from_span(
        n, rng.standard_normal((16, 5)) + 1j * rng.standard_normal((16, 5)))
    angles = scipy.linalg.subspace_angles(other.basis, big.basis)
    assert abs(containment_residual(other, big) - np.sin(np.max(angles))) < 1e-9


def test_containment_complement_route_agrees(rng):
    n = 2
    rows_a = rng.standard_normal((4, 16)) + 1j * rng.standard_normal((4, 16))
    rows_b = rng.standard_normal((2, 16)) + 1j * rng.standard_normal((2, 16))
    a = OperatorSubspace.from_constraints(n, np.vstack([rows_a, rows_b]))
    b = OperatorSubspace.from_constraints(n, rows_b)
    # both complements cached: fast route
    assert containment_residual(a, b) < 1e-9
    # force the basis route and compare on a non-contained pair
    c = OperatorSubspace.from_constraints(n, rows_a)
    fast = containment_residual(c, b)
    via_basis = containment_residual(
        OperatorSubspace(n, basis=c.basis), OperatorSubspace(n, basis=b.basis))
    assert abs(fast - via_basis) < 1e-9


def test_member_residual_routes_agree(rng):
    n = 2
    rows = rng.standard_normal((6, 16)) + 1j * rng.standard_normal((6, 16))
    s = OperatorSubspace.from_constraints(n, rows)
    by_complement = OperatorSubspace(n, complement=s.complement)
    by_basis = OperatorSubspace(n, basis=s.basis)
    for _ in range(10):
        v = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        assert abs(by_complement.member_residual(v) - by_basis.member_residual(v)) < 1e-10


def test_map_subspace_preserves_structure(rng):
    n = 2
    s = OperatorSubspace.from_constraints(
        n, rng.standard_normal((3, 16)) + 1j * rng.standard_normal((3, 16)))
    _ = s.basis  # materialize both parts
    phase = np.exp(2j * np.pi * rng.standard_normal())

    def f(cols):
        return phase * cols

    out = map_subspace(s, f)
    out.validate()
    assert out.dim == s.dim
    assert equality_residual(out, s) < 1e-9


def test_operator_weight():
    assert operator_weight(pauli_coords(pauli_from_string("IZIXX")), 5) == 3
    v = pauli_coords(pauli_from_string("XIII")) + 0.5 * pauli_coords(pauli_from_string("IIIZ"))
    assert operator_weight(v, 4) == 2
    assert operator_weight(np.zeros(16), 2) == 0


def test_subspace_requires_some_part():
    with pytest.raises(ValueError):
        OperatorSubspace(2)
