import numpy as np
import pytest

from qerasure import Ket, QuantumCode


def random_unitary(rng, dim):
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return np.linalg.qr(m)[0]


def random_code(rng, n, k, label="random"):
    """Random orthonormal K-frame on n qubits."""
    frame = random_unitary(rng, 1 << n)[:, :k]
    kets = tuple(Ket(n, frame[:, i]) for i in range(k))
    return QuantumCode(n=n, k=k, basis=kets, label=label)


def random_orthogonal_pair(rng, n, k1, k2):
    """Two mutually orthogonal random codes drawn from one frame."""
    frame = random_unitary(rng, 1 << n)[:, : k1 + k2]
    first = QuantumCode(n=n, k=k1, basis=tuple(Ket(n, frame[:, i]) for i in range(k1)),
                        label="rand-a")
    second = QuantumCode(n=n, k=k2,
                         basis=tuple(Ket(n, frame[:, k1 + i]) for i in range(k2)),
                         label="rand-b")
    return first, second


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
