"""Grover search for a single marked state."""

from dataclasses import dataclass
import math

import numpy as np

from ..bitstrings import to_binary
from ..circuit import ClassicalRegister, QuantumRegister, new_circuit
from ..errors import LengthError, RequestError, SizeError
from ..multicontrol import n_not, x_transformation
from ._util import bits, single


@dataclass(frozen=True)
class GroverPlan:
    Q: int
    marked: tuple
    iterations: int


def optimal_iterations(Q):
    # round() on a float: half-even, which never matters here
    return round(math.pi / 4 * 2 ** (Q / 2.0))


def grover_oracle(marked, circuit, qreg, phase_anc, cascade_ancs=()):
    """Negate the amplitude of ``|marked>``; ``phase_anc`` must hold ``|1>``."""
    marked = tuple(marked)
    main = bits(qreg)
    if len(marked) != len(main):
        raise LengthError(f"marked has {len(marked)} bits, register has {len(main)}")
    anc = single(phase_anc)
    circuit.h(anc)
    x_transformation(circuit, main, marked)
    if len(main) == 2:
        circuit.ccx(main[0], main[1], anc)
    else:
        n_not(circuit, main, anc, bits(cascade_ancs))
    x_transformation(circuit, main, marked)
    circuit.h(anc)
    return circuit


def grover_diffusion(n, circuit, qreg, phase_anc, cascade_ancs=()):
    """H on all, flip ``|0...0>``, H on all: minus the mean reflection."""
    main = bits(qreg)
    if n != len(main):
        raise LengthError(f"length {n} does not match register size {len(main)}")
    circuit.h(main)
    grover_oracle((0,) * n, circuit, main, phase_anc, cascade_ancs)
    circuit.h(main)
    return circuit


def reflect_about_average(amplitudes):
    x = np.asarray(amplitudes)
    return 2 * x.mean() - x


def grover(Q, marked=None, rng=None, iterations=None):
    """Build the full search circuit (without measurement) and its plan.

    Registers: ``q`` (Q), ``anc`` (1), ``nanc`` (Q-2, only when Q > 2), ``c`` (Q).
    Without ``marked``, one ``rng.integers(2**Q)`` picks it.
    """
    if Q < 2:
        raise SizeError(f"need at least 2 qubits, got {Q}")
    if marked is None:
        if rng is None:
            raise RequestError("give marked or an rng to draw it")
        marked = to_binary(int(rng.integers(1 << Q)), 1 << Q)
    marked = tuple(marked)
    if len(marked) != Q:
        raise LengthError(f"marked has {len(marked)} bits, need {Q}")
    if iterations is None:
        iterations = optimal_iterations(Q)
    q = QuantumRegister(Q, "q")
    anc = QuantumRegister(1, "anc")
    regs = [q, anc]
    nanc = ()
    if Q > 2:
        nanc = QuantumRegister(Q - 2, "nanc")
        regs.append(nanc)
    qc = new_circuit("qc", regs, ClassicalRegister(Q, "c"))
    qc.h(q)
    qc.x(anc[0])
    for _ in range(iterations):
        grover_oracle(marked, qc, q, anc, nanc)
        grover_diffusion(Q, qc, q, anc, nanc)
    return qc, GroverPlan(Q, marked, iterations)
