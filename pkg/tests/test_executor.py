import numpy as np
import pytest

from ketsim import joint_distribution, new_circuit, run_counts, run_statevector
from ketsim.circuit import ClassicalRegister, QuantumRegister
from ketsim.errors import CregError, MeasurementInStatevectorError, OrderingError, RangeError
from ketsim.executor import Counts, circuit_unitary, make_rng
import oracles


def measured(n=2):
    q, c = QuantumRegister(n, "q"), ClassicalRegister(n, "c")
    return new_circuit("qc", q, c), q, c


def test_statevector_matches_dense_run():
    rng = np.random.default_rng(11)
    q = QuantumRegister(4, "q")
    qc = new_circuit("qc", q)
    kinds = ["H", "X", "T", "RY", "CX", "CU1", "CCX", "CSWAP", "SWAP", "CZ"]
    for _ in range(40):
        kind = kinds[rng.integers(len(kinds))]
        k = {"CX": 2, "CU1": 2, "SWAP": 2, "CZ": 2, "CCX": 3, "CSWAP": 3}.get(kind, 1)
        picks = [q[int(i)] for i in rng.permutation(4)[:k]]
        angle = float(rng.uniform(-3, 3)) if kind in ("RY", "CU1") else None
        from ketsim import GateSpec
        qc.gate(GateSpec(kind, angle), *picks)
    assert np.allclose(run_statevector(qc).amplitudes, oracles.dense_run(qc), atol=1e-12)


def test_initial_state():
    q = QuantumRegister(1, "q")
    qc = new_circuit("qc", q)
    qc.x(q[0])
    out = run_statevector(qc, initial=[0, 1])
    assert np.allclose(out.amplitudes, [1, 0])


def test_statevector_rejects_measure():
    qc, q, c = measured()
    qc.measure(q[0], c[0])
    with pytest.raises(MeasurementInStatevectorError):
        run_statevector(qc)


def test_key_reversal():
    qc, q, c = measured()
    qc.id(q[0])
    qc.x(q[1])
    qc.measure(q, c)
    assert dict(run_counts(qc, 1024, seed=0)) == {"10": 1024}


def test_cross_wired_measure():
    qc, q, c = measured(3)
    qc.x(q[0])
    qc.measure(q[0], c[1])
    qc.measure(q[1], c[0])
    qc.measure(q[2], c[2])
    assert joint_distribution(qc) == {"010": 1.0}


def test_unmeasured_clbits_read_zero():
    qc, q, c = measured()
    qc.x(q)
    qc.measure(q[1], c[1])
    assert joint_distribution(qc) == {"10": 1.0}


def test_joint_distribution_matches_oracle():
    qc, q, c = measured(3)
    qc.h(q[0])
    qc.ry(0.7, q[1])
    qc.cx(q[0], q[2])
    probs = np.abs(oracles.dense_run(qc)) ** 2
    qc.measure(q, c)
    dist = joint_distribution(qc)
    for i, p in enumerate(probs):
        key = format(i, "03b")
        assert dist.get(key, 0.0) == pytest.approx(p, abs=1e-12)
    assert sum(dist.values()) == pytest.approx(1.0)


def test_seeded_counts_reproducible():
    qc, q, c = measured()
    qc.h(q)
    qc.measure(q, c)
    a = run_counts(qc, 500, seed=42)
    b = run_counts(qc, 500, rng=make_rng(42))
    assert a == b and a.shots == 500


def test_measure_errors():
    q = QuantumRegister(1, "q")
    qc = new_circuit("qc", q)
    with pytest.raises(CregError):
        run_counts(qc, 10, seed=1)
    qc, q, c = measured()
    qc.measure(q[0], c[0])
    qc.h(q[0])
    with pytest.raises(OrderingError):
        run_counts(qc, 10, seed=1)
    qc, q, c = measured()
    qc.measure(q, c)
    with pytest.raises(RangeError):
        run_counts(qc, 0, seed=1)


def test_counts_mapping():
    c = Counts({"01": 3, "10": 0})
    assert dict(c) == {"01": 3} and c.shots == 3
    with pytest.raises(ValueError):
        Counts({"0": 1}, shots=2)


def test_circuit_unitary():
    q = QuantumRegister(2, "q")
    qc = new_circuit("qc", q)
    qc.h(q[0])
    qc.cx(q[0], q[1])
    assert np.allclose(circuit_unitary(qc), oracles.dense_unitary(oracles.ops_of(qc), 2))


def test_single_qubit_measured():
    qc, q, c = measured()
    qc.h(q)
    qc.measure(q[0], c[0])
    counts = run_counts(qc, 1024, seed=3)
    assert set(counts) == {"00", "01"}
    assert all(abs(v - 512) <= 70 for v in counts.values())


def test_frequencies_within_5_sigma():
    qc, q, c = measured(3)
    qc.h(q[0])
    qc.ry(1.1, q[1])
    qc.cx(q[1], q[2])
    qc.measure(q, c)
    shots = 65536
    counts = run_counts(qc, shots, seed=99)
    for key, p in joint_distribution(qc).items():
        sigma = np.sqrt(shots * p * (1 - p))
        assert abs(counts.get(key, 0) - shots * p) <= 5 * sigma


@pytest.mark.parametrize("subset", [(0,), (1, 3), (0, 2, 3), (3, 1)])
def test_partial_measurement_is_marginal(subset):
    q, c = QuantumRegister(4, "q"), ClassicalRegister(len(subset), "c")
    qc = new_circuit("qc", q, c)
    qc.h(q[0])
    qc.ry(0.4, q[1])
    qc.cx(q[0], q[2])
    qc.rx(1.3, q[3])
    qc.cz(q[1], q[3])
    probs = np.abs(oracles.dense_run(qc)) ** 2
    for i, qb in enumerate(subset):
        qc.measure(q[qb], c[i])
    want = {}
    for idx, p in enumerate(probs):
        key = "".join(str((idx >> qb) & 1) for qb in reversed(subset))
        want[key] = want.get(key, 0.0) + p
    got = joint_distribution(qc)
    for key, p in want.items():
        assert got.get(key, 0.0) == pytest.approx(p, abs=1e-12)
