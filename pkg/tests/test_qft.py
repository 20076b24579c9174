import math

import numpy as np
import pytest

from ketsim import format_wavefunction, new_circuit, run_statevector
from ketsim.circuit import QuantumRegister
from ketsim.errors import LengthError, SizeError
from ketsim.executor import circuit_unitary
from ketsim.qft import (
    bit_reverse_permutation, dft_matrix, qft, qft_demo_circuit, qft_dgr, qft_grover_circuit,
    qft_grover_demo, qft_plan,
)
import oracles


def sign_state():
    q = QuantumRegister(2, "q")
    qc = new_circuit("qc", q)
    qc.x(q[0])
    qc.h(q[0])
    qc.x(q[1])
    qc.h(q[1])
    return qc, q


def qft_unitary(n, mode="standard"):
    q = QuantumRegister(n, "q")
    qc = new_circuit("qc", q)
    qft(qc, q, n, mode)
    return circuit_unitary(qc)


def test_two_qubit_golden():
    qc, q = sign_state()
    assert format_wavefunction(run_statevector(qc)) == "0.5 |00>  -0.5 |10>  -0.5 |01>  0.5 |11>"
    qft(qc, q, 2)
    assert format_wavefunction(run_statevector(qc)) == "0.5-0.5j |10>  0.5+0.5j |11>"


def test_double_qft_is_not_identity():
    qc, q = sign_state()
    qft(qc, q, 2)
    qft(qc, q, 2)
    assert format_wavefunction(run_statevector(qc)) == "0.5 |00>  -0.5j |01>  -0.5+0.5j |11>"


def test_inverse_restores_sign_state():
    qc, q = sign_state()
    qft(qc, q, 2)
    qft_dgr(qc, q, 2)
    assert format_wavefunction(run_statevector(qc)) == "0.5 |00>  -0.5 |10>  -0.5 |01>  0.5 |11>"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_standard_is_dft_with_reversed_input(n):
    u = qft_unitary(n)
    if n == 1:
        assert np.allclose(u, oracles.single_qubit("H"))
        return
    perm = [oracles.bit_reverse(i, n) for i in range(1 << n)]
    assert np.allclose(u[:, perm], oracles.dft(1 << n), atol=1e-10)
    assert np.array_equal(bit_reverse_permutation(n), perm)


def test_two_qubit_circuit_is_not_plain_dft():
    # the reversal matters even at two qubits
    assert not np.allclose(qft_unitary(2), oracles.dft(4))


def test_paper_compat_golden():
    qc = qft_demo_circuit(3, (0, 0, 1), mode="paper-compat")
    assert format_wavefunction(run_statevector(qc)) == (
        "0.35355 |000>  0.25+0.25j |100>  0.25+0.25j |010>  0.35355j |110>  "
        "-0.35355 |001>  -0.25-0.25j |101>  -0.25-0.25j |011>  -0.35355j |111>"
    )


def test_modes_agree_at_two_qubits():
    assert np.allclose(qft_unitary(2), qft_unitary(2, "paper-compat"))
    assert not np.allclose(qft_unitary(3), qft_unitary(3, "paper-compat"))


@pytest.mark.parametrize("mode", ["standard", "paper-compat"])
@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip(mode, n):
    rng = np.random.default_rng(n)
    psi = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    psi /= np.linalg.norm(psi)
    q = QuantumRegister(n, "q")
    qc = new_circuit("qc", q)
    qft(qc, q, n, mode)
    qft_dgr(qc, q, n, mode)
    assert np.allclose(run_statevector(qc, psi).amplitudes, psi, atol=1e-10)


def test_zero_state_goes_uniform():
    q = QuantumRegister(3, "q")
    qc = new_circuit("qc", q)
    qft(qc, q)
    assert np.allclose(run_statevector(qc).amplitudes, 1 / math.sqrt(8))


def test_unnormalized_dft_exact():
    f = dft_matrix(4, normalized=False)
    out = f @ np.array([1, -1, -1, 1])
    assert out.tolist() == [0, 2 - 2j, 0, 2 + 2j]
    assert np.allclose(dft_matrix(8), oracles.dft(8))


def test_plan_angles():
    plan = qft_plan(3)
    assert [(j, k) for j, k, _ in plan.angles] == [(0, 1), (0, 2), (1, 2)]
    assert plan.angles[1][2] == pytest.approx(math.pi / 4)
    compat = qft_plan(3, "paper-compat")
    assert compat.angles[2][2] == pytest.approx(math.pi / 4)


@pytest.mark.parametrize("marked", [(0, 0), (1, 0), (0, 1), (1, 1)])
@pytest.mark.parametrize("mode", ["standard", "paper-compat"])
def test_qft_grover_finds_marked(marked, mode):
    state = qft_grover_demo(marked, mode=mode)
    index = marked[0] + 2 * marked[1] + 4  # ancilla back in |1>
    assert abs(state[index]) ** 2 == pytest.approx(1, abs=1e-10)


def test_qft_grover_draws_marked():
    from ketsim.executor import make_rng
    state = qft_grover_demo(rng=make_rng(4))
    assert max(abs(state.amplitudes)) == pytest.approx(1, abs=1e-10)


def test_qft_grover_stages():
    qc, stages = qft_grover_circuit((1, 0))
    titles = [t for t, _ in stages]
    assert titles[0].startswith("Initial") and titles[-1] == "QFT_dgr"
    assert stages[-1][1] == len(qc)


def test_errors():
    q = QuantumRegister(2, "q")
    qc = new_circuit("qc", q)
    with pytest.raises(SizeError):
        qft(qc, q, 0)
    with pytest.raises(LengthError):
        qft(qc, q, 3)
    with pytest.raises(SizeError):
        dft_matrix(6)
    with pytest.raises(LengthError):
        qft_grover_circuit((1, 0, 1))
