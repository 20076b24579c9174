"""Deutsch's two-qubit problem."""

from ..errors import RequestError
from .record import BlackboxRecord
from ._util import bits

LABELS = ("f(0,1) -> (0,1)", "f(0,1) -> (1,0)", "f(0,1) -> 0", "f(0,1) -> 1")


def blackbox_g_deutsch(circuit, qreg, rng, label=None):
    """Append one of the four two-qubit g operators.

    Draws a single ``rng.integers(4)`` unless ``label`` fixes the choice.
    """
    q = bits(qreg, 2)
    if label is None:
        label = LABELS[int(rng.integers(4))]
    elif label not in LABELS:
        raise RequestError(f"unknown label {label!r}")
    r = LABELS.index(label)
    if r == 0:
        circuit.cx(q[0], q[1])
    elif r == 1:
        circuit.x(q[0])
        circuit.cx(q[0], q[1])
        circuit.x(q[0])
    elif r == 2:
        circuit.id(q[0])
        circuit.id(q[1])
    else:
        circuit.x(q[1])
    return BlackboxRecord("deutsch", label=label)


def deutsch(circuit, qreg, rng, label=None):
    """H on both qubits, the blackbox, H on both.

    The caller prepares qubit 1 in ``|1>`` beforehand; measuring qubit 0
    afterwards gives 0 for a constant f and 1 for a balanced one.
    """
    q = bits(qreg, 2)
    circuit.h(q[0])
    circuit.h(q[1])
    record = blackbox_g_deutsch(circuit, qreg, rng, label)
    circuit.h(q[0])
    circuit.h(q[1])
    return record
