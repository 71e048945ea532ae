"""N-qubit Pauli operators in a two-mask-plus-phase encoding.

An operator is stored as a pair of n-bit masks plus a phase exponent.  Bit j
of a mask refers to qubit j, qubit 0 is the leftmost tensor factor, and the
dense realization is

    i**phase * W(x_0, z_0) (x) W(x_1, z_1) (x) ... (x) W(x_{n-1}, z_{n-1})

where the single-qubit factor W is read off the mask bits as

    W(0, 0) = I,   W(1, 0) = X,   W(0, 1) = Z,   W(1, 1) = Y = [[0, -i], [i, 0]].

A phase exponent of 0 therefore always denotes a plain tensor product of
identity and Pauli factors, which is Hermitian and unitary.  Products track
the accumulated power of i, so the encoding is closed under multiplication.

Basis states are indexed with qubit 0 as the most significant bit: mask bit j
acts on index bit (n - 1 - j) of an amplitude vector.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING, Sequence

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .states import Ket

PHASE_LABELS = ("", "i", "-", "-i")


class PauliLetter(enum.Enum):
    """Single-qubit factor names, with their conventional matrix realization."""

    I = (0, 0)
    X = (1, 0)
    Y = (1, 1)
    Z = (0, 1)

    @property
    def x_bit(self) -> int:
        return self.value[0]

    @property
    def z_bit(self) -> int:
        return self.value[1]

    @property
    def matrix(self) -> np.ndarray:
        return _LETTER_MATRICES[self.name]


_LETTER_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliOperator:
    """A tensor product of I/X/Y/Z factors times a global power of i."""

    n: int
    x_mask: int
    z_mask: int
    phase: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("qubit count must be positive")
        limit = 1 << self.n
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ValueError(f"mask has bits outside {self.n} qubits")
        object.__setattr__(self, "phase", self.phase % 4)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return pauli_to_string(self)

    def letters(self) -> tuple[PauliLetter, ...]:
        out = []
        for j in range(self.n):
            bits = ((self.x_mask >> j) & 1, (self.z_mask >> j) & 1)
            out.append(PauliLetter(bits))
        return tuple(out)


def pauli_from_letters(letters: Sequence[PauliLetter | str]) -> PauliOperator:
    """Build a phase-0 operator from a sequence of letters (qubit 0 first)."""
    if len(letters) == 0:
        raise ValueError("need at least one letter")
    x = z = 0
    for j, letter in enumerate(letters):
        if isinstance(letter, str):
            letter = PauliLetter[letter]
        x |= letter.x_bit << j
        z |= letter.z_bit << j
    return PauliOperator(len(letters), x, z)


def pauli_from_string(text: str) -> PauliOperator:
    """Parse a label such as "IIYZY", "iXZ" or "-iY" back into an operator."""
    phase = 0
    for k, prefix in ((3, "-i"), (1, "i"), (2, "-")):
        if text.startswith(prefix):
            phase, text = k, text[len(prefix):]
            break
    if not text or any(ch not in "IXYZ" for ch in text):
        raise ValueError(f"not a Pauli label: {text!r}")
    base = pauli_from_letters(list(text))
    return PauliOperator(base.n, base.x_mask, base.z_mask, phase)


def pauli_to_string(p: PauliOperator) -> str:
    """Render as a phase prefix from {"", "i", "-", "-i"} plus letters."""
    letters = "".join(letter.name for letter in p.letters())
    return PHASE_LABELS[p.phase] + letters


def weight(p: PauliOperator) -> int:
    """Number of tensor factors that differ from the identity."""
    return (p.x_mask | p.z_mask).bit_count()


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Operator product p*q, with the accumulated power of i."""
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    # Work in X^x Z^z ordering, where each Y contributes one factor of i and
    # commuting Z past X costs a sign per overlapping bit.
    lam_p = p.phase + (p.x_mask & p.z_mask).bit_count()
    lam_q = q.phase + (q.x_mask & q.z_mask).bit_count()
    lam = lam_p + lam_q + 2 * (p.z_mask & q.x_mask).bit_count()
    x = p.x_mask ^ q.x_mask
    z = p.z_mask ^ q.z_mask
    return PauliOperator(p.n, x, z, (lam - (x & z).bit_count()) % 4)


def dagger(p: PauliOperator) -> PauliOperator:
    """Conjugate transpose: masks unchanged, phase negated mod 4."""
    return PauliOperator(p.n, p.x_mask, p.z_mask, (-p.phase) % 4)


def enumerate_paulis(n: int, max_weight: int) -> list[PauliOperator]:
    """All phase-0 operators of weight <= max_weight, each exactly once.

    The order is fixed: ascending weight, then lexicographic by
    (x_mask, z_mask).  This order defines the coordinate system used for
    operator subspaces, so it must never change.
    """
    if not 0 <= max_weight <= n:
        raise ValueError(f"max_weight must be in [0, {n}], got {max_weight}")
    keys = []
    for x in range(1 << n):
        for z in range(1 << n):
            w = (x | z).bit_count()
            if w <= max_weight:
                keys.append((w, x, z))
    keys.sort()
    return [PauliOperator(n, x, z) for _, x, z in keys]


def _index_aligned_masks(p: PauliOperator) -> tuple[int, int]:
    """Masks with bit positions matching amplitude-index bits."""
    rx = rz = 0
    for j in range(p.n):
        rx |= ((p.x_mask >> j) & 1) << (p.n - 1 - j)
        rz |= ((p.z_mask >> j) & 1) << (p.n - 1 - j)
    return rx, rz


def apply_to_amplitudes(p: PauliOperator, amplitudes: np.ndarray) -> np.ndarray:
    """Apply p to an amplitude vector (or a stack of columns) in O(2^n).

    The operator maps |b> to a unit phase times |b XOR x>, so this is a
    permutation of the entries with sign and i bookkeeping; no matrix is
    built.
    """
    dim = 1 << p.n
    if amplitudes.shape[0] != dim:
        raise ValueError(f"amplitude vector has length {amplitudes.shape[0]}, expected {dim}")
    rx, rz = _index_aligned_masks(p)
    lam = (p.phase + (p.x_mask & p.z_mask).bit_count()) % 4
    idx = np.arange(dim)
    signs = 1 - 2 * (np.bitwise_count(idx & rz) & 1).astype(np.int64)
    scaled = (1j**lam) * (signs.reshape((dim,) + (1,) * (amplitudes.ndim - 1)) * amplitudes)
    return scaled[idx ^ rx]


def matrix_element(bra: "Ket", p: PauliOperator, ket: "Ket") -> complex:
    """<bra| p |ket>, computed without materializing the dense matrix."""
    if bra.n != p.n or ket.n != p.n:
        raise ValueError(f"qubit count mismatch: bra {bra.n}, operator {p.n}, ket {ket.n}")
    return complex(np.vdot(bra.amplitudes, apply_to_amplitudes(p, ket.amplitudes)))


def to_matrix(p: PauliOperator) -> np.ndarray:
    """Dense 2^n x 2^n realization.  Intended for small n only."""
    mats = [letter.matrix for letter in p.letters()]
    return (1j**p.phase) * reduce(np.kron, mats)
