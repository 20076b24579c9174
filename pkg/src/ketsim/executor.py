"""Run circuits to a statevector or to sampled counts.

Counts keys print the classical register with bit 0 as the rightmost
character. Sampling uses numpy's Philox counter-based generator: one uniform
draw per shot, mapped through the cumulative distribution of outcomes sorted
by their key value.
"""

from collections.abc import Mapping

import numpy as np

from .circuit import Gate, Measure
from .errors import (
    CapacityError,
    CregError,
    MeasurementInStatevectorError,
    OrderingError,
    RangeError,
)
from .gates import gate_matrix
from .state import MAX_QUBITS, Statevector, apply_inplace, zero_state

DEFAULT_SHOTS = 1024
PROB_FLOOR = 1e-12


class Counts(Mapping):
    """Read-only histogram of measurement keys."""

    def __init__(self, entries, shots=None):
        self._entries = {str(k): int(v) for k, v in entries.items() if v}
        total = sum(self._entries.values())
        if shots is not None and shots != total:
            raise ValueError(f"counts sum to {total}, expected {shots}")
        self.shots = total

    def __getitem__(self, key):
        return self._entries[key]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return dict(self) == dict(other)
        return NotImplemented

    def __repr__(self):
        return f"Counts({self._entries!r})"


def make_rng(seed=None):
    """Philox generator; ``seed=None`` draws from OS entropy."""
    return np.random.Generator(np.random.Philox(seed))


def _evolve(circuit, initial=None, allow_measure=False):
    n = circuit.num_qubits
    if n > MAX_QUBITS:
        raise CapacityError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit limit")
    if initial is None:
        amps = np.array(zero_state(n).amplitudes)
    else:
        amps = np.array(np.asarray(initial), dtype=np.complex128).reshape(-1)
        if amps.size != 1 << n:
            raise CapacityError(f"initial state has {amps.size} amplitudes, need {1 << n}")
    cache = {}
    for inst in circuit.data:
        if isinstance(inst, Measure):
            if not allow_measure:
                raise MeasurementInStatevectorError(
                    "statevector runs need a circuit without measurements"
                )
            continue
        m = cache.get(inst.spec)
        if m is None:
            m = cache[inst.spec] = gate_matrix(inst.spec)
        # first listed qubit is the matrix's most significant local bit
        targets = [circuit.qubit_index(q) for q in reversed(inst.qubits)]
        apply_inplace(amps, m, targets)
    return amps


def run_statevector(circuit, initial=None):
    """Evolve ``|0...0>`` (or ``initial``) through every gate in order."""
    return Statevector(_evolve(circuit, initial))


def circuit_unitary(circuit):
    """Dense unitary of a gate-only circuit, built column by column."""
    dim = 1 << circuit.num_qubits
    cols = []
    for j in range(dim):
        e = np.zeros(dim, dtype=np.complex128)
        e[j] = 1
        cols.append(_evolve(circuit, e))
    return np.stack(cols, axis=1)


def _measurement_map(circuit):
    if len(circuit.cregs) != 1:
        raise CregError(
            f"counts need exactly one classical register, found {len(circuit.cregs)}"
        )
    measured = set()
    mapping = {}
    for inst in circuit.data:
        if isinstance(inst, Measure):
            q = circuit.qubit_index(inst.qubit)
            measured.add(q)
            mapping[circuit.clbit_index(inst.clbit)] = q
        elif isinstance(inst, Gate):
            for qb in inst.qubits:
                if circuit.qubit_index(qb) in measured:
                    raise OrderingError(f"gate {inst} acts on {qb} after it was measured")
    return mapping


def _key_distribution(circuit):
    mapping = _measurement_map(circuit)
    probs = np.abs(_evolve(circuit, allow_measure=True)) ** 2
    index = np.arange(probs.size)
    keys = np.zeros(probs.size, dtype=np.int64)
    for clbit, qubit in mapping.items():
        keys |= ((index >> qubit) & 1) << clbit
    width = circuit.num_clbits
    totals = np.bincount(keys, weights=probs, minlength=1 << width)
    support = np.flatnonzero(totals > PROB_FLOOR)
    return support, totals[support], width


def _key_text(value, width):
    return format(int(value), f"0{width}b")


def joint_distribution(circuit):
    """Exact outcome probabilities keyed like :func:`run_counts` keys."""
    support, probs, width = _key_distribution(circuit)
    probs = probs / probs.sum()
    return {_key_text(k, width): float(p) for k, p in zip(support, probs)}


def run_counts(circuit, shots=DEFAULT_SHOTS, seed=None, *, rng=None):
    """Sample ``shots`` outcomes of the measured qubits.

    Pass either ``seed`` or an existing generator as ``rng``.
    """
    if int(shots) != shots or shots < 1:
        raise RangeError(f"shots must be a positive integer, got {shots}")
    support, probs, width = _key_distribution(circuit)
    if rng is None:
        rng = make_rng(seed)
    cdf = np.cumsum(probs)
    draws = rng.random(int(shots)) * cdf[-1]
    picks = np.minimum(np.searchsorted(cdf, draws, side="right"), support.size - 1)
    hits = np.bincount(picks, minlength=support.size)
    return Counts(
        {_key_text(k, width): int(h) for k, h in zip(support, hits) if h},
        shots=int(shots),
    )
