"""Quantum Fourier transform circuits and the dense DFT they are checked against.

Two angle tables are offered. ``"standard"`` uses ``pi / 2**(k - j)`` between
target ``j`` and control ``k``. ``"paper-compat"`` indexes the table by the
control's absolute position, ``pi / 2**k``, which reproduces the historical
three-qubit listing but is not the DFT beyond two qubits.

With qubit 0 as the least significant index bit, the standard circuit
(no final swaps) equals ``dft_matrix`` with the input index bit-reversed:
``U[k, rev(j)] == F[k, j]``, i.e. ``U == F @ P`` for the bit-reversal
permutation ``P``. This holds from two qubits up; for n <= 2 the two modes
build the same circuit.
"""

from dataclasses import dataclass
import math

import numpy as np

from .bitstrings import to_binary
from .circuit import ClassicalRegister, QuantumRegister, new_circuit
from .errors import LengthError, RequestError, SizeError
from .executor import run_statevector
from .multicontrol import x_transformation

MODES = ("standard", "paper-compat")


@dataclass(frozen=True)
class QFTPlan:
    qubits: int
    mode: str
    angles: tuple  # (target j, control k, angle) in application order


def _angle(j, k, mode):
    if mode == "standard":
        return math.pi / 2 ** (k - j)
    return 2 * math.pi / 2 ** (k + 1)


def qft_plan(qubits, mode="standard"):
    if qubits < 1:
        raise SizeError("the QFT needs at least one qubit")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    angles = tuple(
        (j, k, _angle(j, k, mode)) for j in range(qubits) for k in range(j + 1, qubits)
    )
    return QFTPlan(qubits, mode, angles)


def _targets(qreg, qubits):
    q = list(qreg)
    n = len(q) if qubits is None else qubits
    if n < 1:
        raise SizeError("the QFT needs at least one qubit")
    if n > len(q):
        raise LengthError(f"asked for {n} qubits, register has {len(q)}")
    return q[:n], n


def qft(circuit, qreg, qubits=None, mode="standard"):
    """For each j: H on q_j, then CU1(angle) from every later qubit onto q_j."""
    q, n = _targets(qreg, qubits)
    plan = qft_plan(n, mode)
    for j in range(n):
        circuit.h(q[j])
        for _, k, theta in (a for a in plan.angles if a[0] == j):
            circuit.cu1(theta, q[k], q[j])
    return circuit


def qft_dgr(circuit, qreg, qubits=None, mode="standard"):
    """Inverse of :func:`qft`: reversed gate order, negated angles."""
    q, n = _targets(qreg, qubits)
    plan = qft_plan(n, mode)
    for j in reversed(range(n)):
        for _, k, theta in reversed([a for a in plan.angles if a[0] == j]):
            circuit.cu1(-theta, q[k], q[j])
        circuit.h(q[j])
    return circuit


def dft_matrix(size, normalized=True):
    """``F[k, j] = w**(k*j)`` with ``w = exp(2*pi*i/size)``."""
    size = int(size)
    if size < 2 or size & (size - 1):
        raise SizeError(f"size must be a power of two >= 2, got {size}")
    k = np.arange(size)
    # reduce the exponent mod size so large products stay exact
    m = np.outer(k, k) % size
    f = np.exp(2j * np.pi * m / size)
    # quarter turns get exact 1, i, -1, -i
    quarter = (4 * m) % size == 0
    f[quarter] = np.array([1, 1j, -1, -1j])[(4 * m[quarter]) // size]
    return f / math.sqrt(size) if normalized else f


def bit_reverse_permutation(n):
    """``perm[i]`` is ``i`` with its ``n`` index bits reversed."""
    return np.array([int(format(i, f"0{n}b")[::-1], 2) for i in range(1 << n)])


def qft_grover_circuit(marked, mode="standard"):
    """Two-qubit Grover search with the QFT standing in for H on both qubits.

    Returns the circuit and a list of ``(title, instruction count)`` marks
    so callers can show the state after each stage.
    """
    marked = tuple(marked)
    if len(marked) != 2:
        raise LengthError(f"marked needs 2 bits, got {len(marked)}")
    q = QuantumRegister(2, "q")
    anc = QuantumRegister(1, "anc")
    qc = new_circuit("qc", [q, anc])
    stages = []
    qc.id(q[0])
    qc.id(q[1])
    qc.x(anc[0])
    qft(qc, q, 2, mode)
    stages.append(("Initial State (QFT)", len(qc)))
    x_transformation(qc, q, marked)
    qc.h(anc[0])
    qc.ccx(q[0], q[1], anc[0])
    x_transformation(qc, q, marked)
    qc.h(anc[0])
    stages.append(("Flip the Marked State", len(qc)))
    qft(qc, q, 2, mode)
    stages.append(("QFT", len(qc)))
    qc.h(anc[0])
    x_transformation(qc, q, (0, 0))
    qc.ccx(q[0], q[1], anc[0])
    qc.h(anc[0])
    x_transformation(qc, q, (0, 0))
    stages.append(("Flip the |00> state", len(qc)))
    qft_dgr(qc, q, 2, mode)
    stages.append(("QFT_dgr", len(qc)))
    return qc, stages


def qft_grover_demo(marked=None, rng=None, mode="standard"):
    """Final statevector of :func:`qft_grover_circuit` (main and ancilla).

    Without ``marked``, one ``rng.integers(4)`` picks it.
    """
    if marked is None:
        if rng is None:
            raise RequestError("give marked or an rng to draw it")
        marked = to_binary(int(rng.integers(4)), 4)
    qc, _ = qft_grover_circuit(marked, mode)
    return run_statevector(qc)


def qft_demo_circuit(qubits, basis, mode="standard", measure=False):
    """QFT applied to a basis state given per qubit (qubit 0 first)."""
    basis = tuple(basis)
    if len(basis) != qubits:
        raise LengthError(f"basis has {len(basis)} bits, need {qubits}")
    q = QuantumRegister(qubits, "q")
    cregs = ClassicalRegister(qubits, "c") if measure else None
    qc = new_circuit("qc", q, cregs)
    for i, b in enumerate(basis):
        if b:
            qc.x(q[i])
    qft(qc, q, qubits, mode)
    return qc
