import pytest

from ketsim import GateSpec, new_circuit
from ketsim.circuit import (
    ClassicalRegister, Gate, Measure, QuantumRegister, RegisterDecl, concat, edit, extend,
)
from ketsim.errors import RegistryError, TargetError


def small():
    q, c = QuantumRegister(2, "q"), ClassicalRegister(2, "c")
    return new_circuit("qc", q, c), q, c


@pytest.mark.parametrize("name", ["Q", "1q", "q-1", "", "nU_anc"])
def test_bad_register_names(name):
    with pytest.raises(RegistryError):
        QuantumRegister(1, name)


def test_register_size():
    with pytest.raises(RegistryError):
        QuantumRegister(0)
    q = QuantumRegister(3, "q")
    assert len(q[1:]) == 2 and q[-1].index == 2
    with pytest.raises(TargetError):
        q[3]


def test_qubit_layout_follows_declaration_order():
    a, b = QuantumRegister(2, "a"), QuantumRegister(3, "b")
    qc = new_circuit("qc", [a, b])
    assert qc.num_qubits == 5
    assert qc.qubit_index(b[0]) == 2
    assert qc.qubit_index(a[1]) == 1


def test_duplicate_register():
    qc, q, c = small()
    with pytest.raises(RegistryError):
        qc.add_register(QuantumRegister(4, "q"))


def test_validation():
    qc, q, c = small()
    other = QuantumRegister(2, "z")
    with pytest.raises(RegistryError):
        qc.h(other[0])
    with pytest.raises(TargetError):
        qc.cx(q[0], q[0])
    with pytest.raises(TargetError):
        qc.h(c[0])
    with pytest.raises(TargetError):
        qc.measure(c[0], q[0])
    with pytest.raises(TargetError):
        qc.append(Gate(GateSpec("CX"), (q[0],)))
    assert len(qc) == 0


def test_broadcast_builders():
    qc, q, c = small()
    qc.h(q)
    qc.measure(q, c)
    assert [str(i) for i in qc] == [
        "h q[0];", "h q[1];", "measure q[0] -> c[0];", "measure q[1] -> c[1];",
    ]


def test_edit_actions():
    qc, q, c = small()
    qc.x(q[0])
    edit(qc, "append", Gate(GateSpec("H"), (q[1],)))
    edit(qc, "insert-at", 0, Measure(q[0], c[0]))
    assert str(qc.data[0]).startswith("measure")
    edit(qc, "delete-at", 0)
    assert [str(i) for i in qc] == ["x q[0];", "h q[1];"]
    with pytest.raises(IndexError):
        qc.delete(5)
    with pytest.raises(ValueError):
        qc.edit("rotate", 1)


def test_concat_and_extend():
    a, q, c = small()
    a.h(q[0])
    r = QuantumRegister(1, "r")
    b = new_circuit("b", [q, r])
    b.cx(q[0], r[0])
    joined = a + b
    assert len(joined) == 2 and joined.find_register("r") == r
    assert len(a) == 1
    extend(a, b)
    assert len(a) == 2
    clash = new_circuit("x", QuantumRegister(5, "q"))
    with pytest.raises(RegistryError):
        concat(a, clash)


def test_copy_is_independent():
    qc, q, c = small()
    dup = qc.copy()
    dup.h(q[0])
    assert len(qc) == 0


def test_register_kind_checked():
    with pytest.raises(RegistryError):
        new_circuit("qc", ClassicalRegister(1))
    with pytest.raises(RegistryError):
        RegisterDecl("q", 1, "other")
