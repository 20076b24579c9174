"""Dense statevectors and unitary application.

Indexing convention used everywhere in the package: qubit 0 is the least
significant bit of an amplitude index, while ket text prints qubit 0 first.
So the three-qubit basis in index order reads
``|000>, |100>, |010>, |110>, |001>, |101>, |011>, |111>``.
"""

import numpy as np

from . import kernels
from .errors import (
    CapacityError,
    DimensionError,
    DomainError,
    ShapeError,
    SizeError,
    TargetError,
    UnitarityError,
)

MAX_QUBITS = 24
UNITARY_TOL = 1e-10


class Statevector:
    """``2**num_qubits`` complex amplitudes.

    The amplitude array is owned by the instance and marked read-only; use
    :meth:`copy` or :func:`apply_unitary` to get a new state.
    """

    __slots__ = ("num_qubits", "_amps")

    def __init__(self, amplitudes):
        amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size < 2 or amps.size != 1 << n:
            raise SizeError(f"amplitude count {amps.size} is not 2**n with n >= 1")
        if n > MAX_QUBITS:
            raise CapacityError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit limit")
        amps.flags.writeable = False
        self.num_qubits = n
        self._amps = amps

    @property
    def amplitudes(self):
        return self._amps

    def __len__(self):
        return self._amps.size

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._amps
        return self._amps.astype(dtype)

    def __getitem__(self, index):
        return self._amps[index]

    def __repr__(self):
        return f"Statevector(num_qubits={self.num_qubits})"

    def copy(self):
        return Statevector(self._amps)

    def norm(self):
        return float(np.linalg.norm(self._amps))

    def probabilities(self):
        return np.abs(self._amps) ** 2

    def amplitude(self, bits):
        """Amplitude of the basis state given per qubit (qubit 0 first)."""
        if len(bits) != self.num_qubits:
            raise DimensionError(
                f"label has {len(bits)} bits, state has {self.num_qubits} qubits"
            )
        return complex(self._amps[basis_index(bits)])


def _check_count(num_qubits):
    if num_qubits < 1:
        raise SizeError("a state needs at least one qubit")
    if num_qubits > MAX_QUBITS:
        raise CapacityError(
            f"{num_qubits} qubits exceeds the {MAX_QUBITS}-qubit limit"
        )


def zero_state(num_qubits):
    _check_count(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(amps)


def basis_index(bits):
    """Index of the basis state whose qubit ``i`` holds ``bits[i]``."""
    index = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise DomainError(f"bit {i} is {b!r}, expected 0 or 1")
        index |= int(b) << i
    return index


def index_bits(index, num_qubits):
    """Inverse of :func:`basis_index`."""
    return tuple((index >> i) & 1 for i in range(num_qubits))


def is_unitary(matrix, tol=UNITARY_TOL):
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    return bool(np.allclose(m.conj().T @ m, np.eye(m.shape[0]), rtol=0, atol=tol))


def check_targets(targets, num_qubits):
    targets = [int(t) for t in targets]
    if len(set(targets)) != len(targets):
        raise TargetError(f"duplicate targets {targets}")
    for t in targets:
        if not 0 <= t < num_qubits:
            raise TargetError(f"target {t} outside 0..{num_qubits - 1}")
    return targets


def apply_inplace(amps, matrix, targets):
    """Unchecked fast path used by the executor."""
    kernels.apply_matrix(amps, matrix, targets)


def apply_unitary(state, matrix, targets, *, check=True):
    """Return ``state`` with ``matrix`` embedded on ``targets``.

    ``targets[0]`` is the least significant bit of the matrix's local index.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    k = len(targets)
    if m.shape != (1 << k, 1 << k):
        raise ShapeError(f"{k} targets need a {1 << k}x{1 << k} matrix, got {m.shape}")
    targets = check_targets(targets, state.num_qubits)
    if check and not is_unitary(m):
        raise UnitarityError("matrix is not unitary within tolerance")
    amps = np.array(state.amplitudes, dtype=np.complex128)
    kernels.apply_matrix(amps, m, targets)
    return Statevector(amps)


def global_phase_equiv(a, b, tol=1e-9):
    """True if ``a == c * b`` for some unit-modulus ``c``."""
    va = np.asarray(a, dtype=np.complex128).reshape(-1)
    vb = np.asarray(b, dtype=np.complex128).reshape(-1)
    if va.shape != vb.shape:
        raise DimensionError(f"dimensions differ: {va.size} vs {vb.size}")
    pivot = int(np.argmax(np.abs(vb)))
    if abs(vb[pivot]) <= tol:
        return bool(np.all(np.abs(va) <= tol))
    c = va[pivot] / vb[pivot]
    if abs(abs(c) - 1.0) > tol:
        return False
    return bool(np.allclose(va, c * vb, rtol=0, atol=tol))
