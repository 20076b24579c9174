from ..circuit import Bit, RegisterDecl, QUANTUM
from ..errors import RegistryError


def single(q):
    """Accept a qubit or a one-qubit register."""
    return q[0] if isinstance(q, RegisterDecl) else q


def bits(reg, count=None):
    out = list(reg) if not isinstance(reg, Bit) else [reg]
    return out if count is None else out[:count]


def scratch_register(circuit, name, size):
    """Declare (or reuse) an internal ancilla register; ``None`` if size is 0."""
    if size < 1:
        return None
    decl = RegisterDecl(name, size, QUANTUM)
    have = circuit.find_register(name)
    if have is None:
        circuit.add_register(decl)
    elif have != decl:
        raise RegistryError(f"register {name!r} already declared with another size")
    return decl
