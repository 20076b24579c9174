"""Multi-controlled operations built from Toffoli cascades.

The controls are condensed pairwise onto clean ancillas until a single line
carries their AND. After the payload, the cascade is undone in reverse so
every ancilla returns to ``|0>``.
"""

from dataclasses import dataclass

from .circuit import Bit
from .errors import AliasingError, CapacityError, LengthError, RequestError

OP_KINDS = ("X", "Z", "PHASE", "SWAP")


@dataclass(frozen=True)
class ControlledOpRequest:
    """One payload gate for :func:`n_control_u`.

    ``targets`` holds one qubit, or two for SWAP; ``angle`` is for PHASE only.
    """

    kind: str
    targets: tuple
    angle: float | None = None

    def __post_init__(self):
        kind = str(self.kind).upper()
        object.__setattr__(self, "kind", kind)
        if kind not in OP_KINDS:
            raise RequestError(f"unknown controlled operation {self.kind!r}")
        targets = self.targets
        if isinstance(targets, Bit):
            targets = (targets,)
        object.__setattr__(self, "targets", tuple(targets))
        want = 2 if kind == "SWAP" else 1
        if len(self.targets) != want:
            raise RequestError(f"{kind} needs {want} target(s)")
        if (self.angle is None) == (kind == "PHASE"):
            raise RequestError("an angle is required for PHASE and only for PHASE")


def x_on(target):
    return ControlledOpRequest("X", (target,))


def z_on(target):
    return ControlledOpRequest("Z", (target,))


def phase_on(target, angle):
    return ControlledOpRequest("PHASE", (target,), angle)


def swap_on(a, b):
    return ControlledOpRequest("SWAP", (a, b))


def _bits(qubits):
    return list(qubits) if not isinstance(qubits, Bit) else [qubits]


def x_transformation(circuit, qubits, pattern):
    """X on every qubit whose pattern bit is 0 (maps the pattern to all ones)."""
    qubits = _bits(qubits)
    pattern = tuple(pattern)
    if len(qubits) != len(pattern):
        raise LengthError(f"{len(pattern)} pattern bits for {len(qubits)} qubits")
    for q, b in zip(qubits, pattern):
        if b == 0:
            circuit.x(q)
    return circuit


def _disjoint(*groups):
    seen = set()
    for group in groups:
        for q in group:
            if q in seen:
                raise AliasingError(f"qubit {q} used in more than one role")
            seen.add(q)


def cascade(controls, ancillas):
    """Toffoli triples that AND ``controls`` onto one line.

    Returns ``(steps, line)``. Uses ``len(controls) - 1`` ancillas, taken in
    order; with a single control there are no steps and ``line`` is it.
    """
    controls = list(controls)
    n = len(controls)
    if n == 0:
        raise RequestError("at least one control is required")
    if len(ancillas) < n - 1:
        raise CapacityError(f"{n} controls need {n - 1} ancillas, got {len(ancillas)}")
    fresh = iter(ancillas)
    steps, active = [], []
    for i in range(0, n - 1, 2):
        out = next(fresh)
        steps.append((controls[i], controls[i + 1], out))
        active.append(out)
    if n % 2 and n > 1:
        out = next(fresh)
        steps.append((controls[-1], active.pop(0), out))
        active.append(out)
    while len(active) > 1:
        out = next(fresh)
        steps.append((active.pop(0), active.pop(0), out))
        active.append(out)
    return steps, (active[0] if active else controls[0])


def n_not(circuit, controls, target, ancillas=()):
    """Flip ``target`` iff every control is 1; needs ``max(n-2, 0)`` clean ancillas."""
    controls, ancillas = _bits(controls), _bits(ancillas)
    n = len(controls)
    if n == 0:
        raise RequestError("at least one control is required")
    _disjoint(controls, [target], ancillas)
    if n == 1:
        return circuit.cx(controls[0], target)
    if len(ancillas) < n - 2:
        raise CapacityError(f"{n} controls need {n - 2} ancillas, got {len(ancillas)}")
    # the last cascade step lands on the real target, saving one ancilla
    steps, _ = cascade(controls, ancillas[: n - 2] + [target])
    for step in steps:
        circuit.ccx(*step)
    for step in reversed(steps[:-1]):
        circuit.ccx(*step)
    return circuit


def n_control_u(circuit, controls, ancillas, ops):
    """Apply each op controlled on all of ``controls``; needs ``n-1`` clean ancillas."""
    controls, ancillas = _bits(controls), _bits(ancillas)
    ops = list(ops)
    if not ops:
        raise RequestError("n_control_u needs at least one operation")
    for op in ops:
        if not isinstance(op, ControlledOpRequest):
            raise RequestError(f"not a controlled-operation request: {op!r}")
    n = len(controls)
    if len(ancillas) < n - 1:
        raise CapacityError(f"{n} controls need {n - 1} ancillas, got {len(ancillas)}")
    ancillas = ancillas[: max(n - 1, 0)]
    op_targets = {q for op in ops for q in op.targets}
    _disjoint(controls, ancillas, op_targets)
    steps, line = cascade(controls, ancillas)
    for step in steps:
        circuit.ccx(*step)
    for op in ops:
        if op.kind == "X":
            circuit.cx(line, op.targets[0])
        elif op.kind == "Z":
            circuit.cz(line, op.targets[0])
        elif op.kind == "PHASE":
            circuit.cu1(op.angle, line, op.targets[0])
        else:
            circuit.cswap(line, *op.targets)
    for step in reversed(steps):
        circuit.ccx(*step)
    return circuit


__all__ = [
    "ControlledOpRequest",
    "cascade",
    "n_control_u",
    "n_not",
    "phase_on",
    "swap_on",
    "x_on",
    "x_transformation",
    "z_on",
]
