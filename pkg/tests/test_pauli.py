import numpy as np
import pytest

from qerasure import (
    PauliOperator,
    Ket,
    dagger,
    enumerate_paulis,
    matrix_element,
    multiply,
    pauli_from_letters,
    pauli_from_string,
    pauli_to_string,
    to_matrix,
    weight,
)

from _oracle import dense_pauli, ket_from_terms, sorted_paulis


def test_letter_mask_encoding():
    p = pauli_from_letters(list("IIXXX"))
    assert (p.x_mask, p.z_mask, p.phase) == (0b11100, 0, 0)
    p = pauli_from_letters(list("IIIII"))
    assert (p.x_mask, p.z_mask) == (0, 0)
    assert weight(p) == 0
    assert weight(pauli_from_letters(list("IIYZY"))) == 3


def test_letter_round_trip():
    for label in ("IIYZY", "XZIII", "IZIXX", "I", "YYYY"):
        p = pauli_from_string(label)
        assert pauli_to_string(p) == label
        assert "".join(le.name for le in p.letters()) == label


def test_phase_prefix_round_trip():
    for prefix, k in (("", 0), ("i", 1), ("-", 2), ("-i", 3)):
        p = pauli_from_string(prefix + "XZ")
        assert p.phase == k
        assert pauli_to_string(p) == prefix + "XZ"


def test_parser_rejects_garbage():
    with pytest.raises(ValueError):
        pauli_from_string("XQ")
    with pytest.raises(ValueError):
        pauli_from_string("")
    with pytest.raises(ValueError):
        pauli_from_letters([])


def test_weight_examples():
    assert weight(pauli_from_string("IZIXX")) == 3
    assert weight(pauli_from_string("XZIII")) == 2


def test_multiply_basic():
    x = pauli_from_string("X")
    z = pauli_from_string("Z")
    assert multiply(x, x) == pauli_from_string("I")
    xz = multiply(x, z)
    assert (xz.x_mask, xz.z_mask, xz.phase) == (1, 1, 3)  # -iY
    p = pauli_from_string("IZIXX")
    assert multiply(p, pauli_from_string("IIIII")) == p


def test_multiply_matches_dense_exhaustive_n2():
    ops = enumerate_paulis(2, 2)
    for p in ops:
        for q in ops:
            lhs = to_matrix(multiply(p, q))
            rhs = to_matrix(p) @ to_matrix(q)
            assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_multiply_matches_dense_random_n3(rng):
    ops = enumerate_paulis(3, 3)
    for _ in range(200):
        p, q = rng.choice(len(ops), size=2)
        p, q = ops[p], ops[q]
        assert np.allclose(to_matrix(multiply(p, q)), to_matrix(p) @ to_matrix(q),
                           atol=1e-12)


def test_multiply_rejects_mismatched_n():
    with pytest.raises(ValueError):
        multiply(pauli_from_string("XX"), pauli_from_string("X"))


def test_weight_subadditive(rng):
    ops = enumerate_paulis(4, 4)
    for _ in range(300):
        i, j = rng.choice(len(ops), size=2)
        p, q = ops[i], ops[j]
        assert weight(multiply(p, q)) <= weight(p) + weight(q)


def test_dagger():
    p = pauli_from_string("XZY")
    assert dagger(p) == p  # phase-0 operators are Hermitian
    ip = PauliOperator(3, p.x_mask, p.z_mask, 1)
    assert dagger(ip).phase == 3
    assert np.allclose(to_matrix(dagger(ip)), to_matrix(ip).conj().T)


def test_dagger_involution(rng):
    ops = enumerate_paulis(3, 3)
    for _ in range(100):
        idx = rng.integers(len(ops))
        p = PauliOperator(3, ops[idx].x_mask, ops[idx].z_mask, int(rng.integers(4)))
        assert dagger(dagger(p)) == p


def test_dense_realization_unitary_hermitian():
    for p in enumerate_paulis(2, 2):
        m = to_matrix(p)
        assert np.allclose(m @ m.conj().T, np.eye(4), atol=1e-12)
        assert np.allclose(m, m.conj().T, atol=1e-12)


def test_enumeration_counts():
    assert len(enumerate_paulis(5, 1)) == 16
    assert len(enumerate_paulis(5, 5)) == 1024
    exactly2 = [p for p in enumerate_paulis(4, 2) if weight(p) == 2]
    assert len(exactly2) == 54


def test_enumeration_distinct_and_ordered():
    ops = enumerate_paulis(3, 3)
    assert len({(p.x_mask, p.z_mask) for p in ops}) == 64
    keys = [(weight(p), p.x_mask, p.z_mask) for p in ops]
    assert keys == sorted(keys)


def test_enumeration_matches_oracle_order():
    ops = enumerate_paulis(3, 3)
    assert [pauli_to_string(p) for p in ops] == sorted_paulis(3)


def test_enumeration_rejects_bad_weight():
    with pytest.raises(ValueError):
        enumerate_paulis(3, 4)
    with pytest.raises(ValueError):
        enumerate_paulis(3, -1)


def test_matrix_element_trivial():
    c = Ket(5, ket_from_terms(5, [(1, "00000"), (1, "11111")]))
    ident = pauli_from_string("IIIII")
    assert abs(matrix_element(c, ident, c) - 1.0) < 1e-12
    zz = Ket(2, ket_from_terms(2, [(1, "00")]))
    assert abs(matrix_element(zz, pauli_from_string("XI"), zz)) < 1e-12


def test_matrix_element_matches_dense(rng):
    for _ in range(100):
        n = int(rng.integers(1, 4))
        bra = Ket(n, rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n))
        ket = Ket(n, rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n))
        ops = enumerate_paulis(n, n)
        p = ops[int(rng.integers(len(ops)))]
        expect = bra.amplitudes.conj() @ to_matrix(p) @ ket.amplitudes
        assert abs(matrix_element(bra, p, ket) - expect) < 1e-12


def test_matrix_element_all_paulis_small_n(rng):
    for n in (1, 2, 3):
        bra = Ket(n, rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n))
        ket = Ket(n, rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n))
        for p in enumerate_paulis(n, n):
            dense = dense_pauli(pauli_to_string(p))
            expect = bra.amplitudes.conj() @ dense @ ket.amplitudes
            assert abs(matrix_element(bra, p, ket) - expect) < 1e-12


def test_matrix_element_dimension_mismatch():
    c2 = Ket(2, ket_from_terms(2, [(1, "00")]))
    with pytest.raises(ValueError):
        matrix_element(c2, pauli_from_string("XXX"), c2)


def test_mask_validation():
    with pytest.raises(ValueError):
        PauliOperator(2, 0b100, 0)
    assert PauliOperator(2, 0, 0, 7).phase == 3
