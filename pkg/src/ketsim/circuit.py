"""Registers, instructions and the editable circuit container."""

from dataclasses import dataclass
import math
import re

from .errors import RegistryError, TargetError
from .gates import GateSpec

NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
QUANTUM = "quantum"
CLASSICAL = "classical"


@dataclass(frozen=True)
class RegisterDecl:
    name: str
    size: int
    kind: str = QUANTUM

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME_RE.match(self.name):
            raise RegistryError(
                f"register name {self.name!r} must match [a-z][a-z0-9_]*"
            )
        if int(self.size) != self.size or self.size < 1:
            raise RegistryError(f"register {self.name} needs size >= 1")
        if self.kind not in (QUANTUM, CLASSICAL):
            raise RegistryError(f"register kind must be quantum or classical")
        object.__setattr__(self, "size", int(self.size))

    @property
    def is_quantum(self):
        return self.kind == QUANTUM

    def __len__(self):
        return self.size

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [Bit(self, i) for i in range(self.size)[index]]
        if index < 0:
            index += self.size
        if not 0 <= index < self.size:
            raise TargetError(f"{self.name}[{index}] out of range (size {self.size})")
        return Bit(self, index)

    def __iter__(self):
        return (Bit(self, i) for i in range(self.size))

    def __str__(self):
        kw = "qreg" if self.is_quantum else "creg"
        return f"{kw} {self.name}[{self.size}];"


def QuantumRegister(size, name="q"):
    return RegisterDecl(name, size, QUANTUM)


def ClassicalRegister(size, name="c"):
    return RegisterDecl(name, size, CLASSICAL)


@dataclass(frozen=True)
class Bit:
    register: RegisterDecl
    index: int

    def __str__(self):
        return f"{self.register.name}[{self.index}]"


class Instruction:
    """Base for :class:`Gate` and :class:`Measure`."""

    __slots__ = ()

    def bits(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Gate(Instruction):
    spec: GateSpec
    qubits: tuple

    def bits(self):
        return self.qubits

    def __str__(self):
        return f"{self.spec} {','.join(str(q) for q in self.qubits)};"


@dataclass(frozen=True)
class Measure(Instruction):
    qubit: Bit
    clbit: Bit

    def bits(self):
        return (self.qubit, self.clbit)

    def __str__(self):
        return f"measure {self.qubit} -> {self.clbit};"


def _as_list(regs):
    if regs is None:
        return []
    if isinstance(regs, RegisterDecl):
        return [regs]
    return list(regs)


class Circuit:
    def __init__(self, name="qc", qregs=(), cregs=()):
        self.name = name
        self.qregs = []
        self.cregs = []
        self.data = []
        for reg in _as_list(qregs):
            if not reg.is_quantum:
                raise RegistryError(f"{reg.name} is classical, listed as quantum")
            self.add_register(reg)
        for reg in _as_list(cregs):
            if reg.is_quantum:
                raise RegistryError(f"{reg.name} is quantum, listed as classical")
            self.add_register(reg)

    # registers

    def registers(self):
        return self.qregs + self.cregs

    def find_register(self, name):
        for reg in self.registers():
            if reg.name == name:
                return reg
        return None

    def add_register(self, *decls):
        for decl in decls:
            if self.find_register(decl.name) is not None:
                raise RegistryError(f"register {decl.name!r} already declared")
            (self.qregs if decl.is_quantum else self.cregs).append(decl)
        return self

    @property
    def num_qubits(self):
        return sum(r.size for r in self.qregs)

    @property
    def num_clbits(self):
        return sum(r.size for r in self.cregs)

    def _offset(self, bit, regs):
        offset = 0
        for reg in regs:
            if reg == bit.register:
                return offset + bit.index
            offset += reg.size
        raise RegistryError(f"{bit} does not belong to circuit {self.name!r}")

    def qubit_index(self, bit):
        """Global qubit number: registers laid out in declaration order."""
        return self._offset(bit, self.qregs)

    def clbit_index(self, bit):
        return self._offset(bit, self.cregs)

    def all_qubits(self):
        return [b for reg in self.qregs for b in reg]

    # instruction validation and editing

    def _check_bit(self, bit, quantum):
        if not isinstance(bit, Bit):
            raise TargetError(f"expected a register bit, got {bit!r}")
        if self.find_register(bit.register.name) != bit.register:
            raise RegistryError(f"{bit} refers to an undeclared register")
        if bit.register.is_quantum != quantum:
            want = "qubit" if quantum else "classical bit"
            raise TargetError(f"{bit} is not a {want}")

    def validate(self, inst):
        if isinstance(inst, Gate):
            if len(inst.qubits) != inst.spec.arity:
                raise TargetError(
                    f"{inst.spec.mnemonic} takes {inst.spec.arity} qubits, "
                    f"got {len(inst.qubits)}"
                )
            for q in inst.qubits:
                self._check_bit(q, True)
            if len(set(inst.qubits)) != len(inst.qubits):
                raise TargetError(f"repeated qubit in {inst}")
        elif isinstance(inst, Measure):
            self._check_bit(inst.qubit, True)
            self._check_bit(inst.clbit, False)
        else:
            raise TypeError(f"not an instruction: {inst!r}")
        return inst

    def append(self, inst):
        self.data.append(self.validate(inst))
        return self

    def insert(self, index, inst):
        if not -len(self.data) <= index <= len(self.data):
            raise IndexError(f"insert position {index} out of range")
        self.data.insert(index, self.validate(inst))
        return self

    def delete(self, index):
        if not -len(self.data) <= index < len(self.data):
            raise IndexError(f"delete position {index} out of range")
        return self.data.pop(index)

    def edit(self, action, *payload):
        """Plain sequence edit: ``("delete-at", i)``, ``("insert-at", i, inst)``
        or ``("append", inst)``."""
        action = action.replace("_", "-")
        if action == "delete-at":
            self.delete(*payload)
        elif action == "insert-at":
            self.insert(*payload)
        elif action == "append":
            self.append(*payload)
        else:
            raise ValueError(f"unknown edit action {action!r}")
        return self

    def __len__(self):
        return len(self.data)

    def __iter__(self):
        return iter(self.data)

    # combination

    def copy(self, name=None):
        out = Circuit(self.name if name is None else name)
        out.qregs = list(self.qregs)
        out.cregs = list(self.cregs)
        out.data = list(self.data)
        return out

    def extend(self, other):
        for reg in other.registers():
            mine = self.find_register(reg.name)
            if mine is None:
                self.add_register(reg)
            elif mine != reg:
                raise RegistryError(
                    f"register {reg.name!r} declared with different size or kind"
                )
        self.data.extend(other.data)
        return self

    def __add__(self, other):
        return concat(self, other)

    def __iadd__(self, other):
        return self.extend(other)

    # builders

    def gate(self, spec, *qubits):
        return self.append(Gate(spec, tuple(qubits)))

    def _one(self, kind, target, angle=None):
        spec = GateSpec(kind, angle)
        targets = list(target) if isinstance(target, (RegisterDecl, list, tuple)) else [target]
        for q in targets:
            self.gate(spec, q)
        return self

    def id(self, q):
        return self._one("I", q)

    iden = id

    def x(self, q):
        return self._one("X", q)

    def y(self, q):
        return self._one("Y", q)

    def z(self, q):
        return self._one("Z", q)

    def h(self, q):
        return self._one("H", q)

    def s(self, q):
        return self._one("S", q)

    def t(self, q):
        return self._one("T", q)

    def u1(self, theta, q):
        return self._one("U1", q, theta)

    def rx(self, theta, q):
        return self._one("RX", q, theta)

    def ry(self, theta, q):
        return self._one("RY", q, theta)

    def rz(self, theta, q):
        return self._one("RZ", q, theta)

    def cx(self, control, target):
        return self.gate(GateSpec("CX"), control, target)

    def cz(self, control, target):
        return self.gate(GateSpec("CZ"), control, target)

    def cu1(self, theta, control, target):
        return self.gate(GateSpec("CU1", theta), control, target)

    def swap(self, a, b):
        return self.gate(GateSpec("SWAP"), a, b)

    def cswap(self, control, a, b):
        return self.gate(GateSpec("CSWAP"), control, a, b)

    def ccx(self, c1, c2, target):
        return self.gate(GateSpec("CCX"), c1, c2, target)

    def measure(self, qubit, clbit):
        if isinstance(qubit, RegisterDecl) or isinstance(clbit, RegisterDecl):
            qs, cs = list(qubit), list(clbit)
            if len(qs) != len(cs):
                raise TargetError("measure needs registers of equal size")
            for q, c in zip(qs, cs):
                self.append(Measure(q, c))
            return self
        return self.append(Measure(qubit, clbit))

    def qasm(self):
        from .qasm import emit_qasm

        return emit_qasm(self)

    def __repr__(self):
        return (
            f"Circuit({self.name!r}, qubits={self.num_qubits}, "
            f"clbits={self.num_clbits}, instructions={len(self.data)})"
        )


def new_circuit(name="qc", qregs=(), cregs=()):
    return Circuit(name, qregs, cregs)


def add_register(circuit, decl):
    return circuit.add_register(decl)


def edit(circuit, action, *payload):
    return circuit.edit(action, *payload)


def concat(a, b):
    return a.copy().extend(b)


def extend(a, b):
    return a.extend(b)


def angle_text(theta):
    """Shortest decimal that round-trips to the stored double."""
    if math.isfinite(theta):
        return repr(float(theta))
    raise ValueError(f"non-finite angle {theta}")
