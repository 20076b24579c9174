"""Statevector simulation, multi-control synthesis and textbook algorithms."""

from .circuit import Bit, Circuit, Instruction, RegisterDecl, new_circuit
from .display import DisplayOptions, format_amplitude, format_counts, format_wavefunction
from .executor import Counts, joint_distribution, run_counts, run_statevector
from .gates import GateSpec, gate_matrix
from .kernels import BACKEND
from .qasm import emit_qasm, parse_qasm
from .state import (
    MAX_QUBITS,
    Statevector,
    apply_unitary,
    basis_index,
    global_phase_equiv,
    is_unitary,
    zero_state,
)

__version__ = "0.1.0"
