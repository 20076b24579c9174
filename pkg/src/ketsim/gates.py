"""Gate catalog.

Multi-qubit matrices use control-first local ordering: the first qubit a
gate is given on is the most significant bit of the matrix index, so CX in
basis ``|00>, |01>, |10>, |11>`` (control written first) is the familiar
``[[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]]``.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .errors import ParameterError
from .state import is_unitary

ARITY = {
    "I": 1, "X": 1, "Y": 1, "Z": 1, "H": 1, "S": 1, "T": 1,
    "U1": 1, "RX": 1, "RY": 1, "RZ": 1,
    "CX": 2, "CZ": 2, "CU1": 2, "SWAP": 2,
    "CSWAP": 3, "CCX": 3,
}
PARAMETRIC = frozenset({"U1", "RX", "RY", "RZ", "CU1"})

MNEMONIC = {kind: kind.lower() for kind in ARITY}
MNEMONIC["I"] = "id"
KIND_OF = {m: k for k, m in MNEMONIC.items()}
KIND_OF["iden"] = "I"

_R2 = 1 / math.sqrt(2)
_FIXED = {
    "I": [[1, 0], [0, 1]],
    "X": [[0, 1], [1, 0]],
    "Y": [[0, -1j], [1j, 0]],
    "Z": [[1, 0], [0, -1]],
    "H": [[_R2, _R2], [_R2, -_R2]],
    "S": [[1, 0], [0, 1j]],
    "T": [[1, 0], [0, cmath.exp(1j * math.pi / 4)]],
    "CX": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    "CZ": np.diag([1, 1, 1, -1]),
    "SWAP": [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
}


def _permutation(dim, mapping):
    m = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        m[mapping.get(col, col), col] = 1
    return m


_FIXED["CSWAP"] = _permutation(8, {0b101: 0b110, 0b110: 0b101})
_FIXED["CCX"] = _permutation(8, {0b110: 0b111, 0b111: 0b110})


@dataclass(frozen=True)
class GateSpec:
    kind: str
    angle: float | None = None

    def __post_init__(self):
        kind = str(self.kind).upper()
        if kind not in ARITY:
            raise ParameterError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind in PARAMETRIC:
            if self.angle is None:
                raise ParameterError(f"{kind} needs an angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ParameterError(f"{kind} takes no angle")

    @property
    def arity(self):
        return ARITY[self.kind]

    @property
    def mnemonic(self):
        return MNEMONIC[self.kind]

    def inverse(self):
        if self.kind in PARAMETRIC:
            return GateSpec(self.kind, -self.angle)
        if self.kind == "S":
            return GateSpec("U1", -math.pi / 2)
        if self.kind == "T":
            return GateSpec("U1", -math.pi / 4)
        return self

    def __str__(self):
        if self.angle is None:
            return self.mnemonic
        return f"{self.mnemonic}({self.angle!r})"


def gate_matrix(spec):
    """Dense unitary for ``spec`` (control-first local ordering)."""
    kind, theta = spec.kind, spec.angle
    if kind in _FIXED:
        return np.array(_FIXED[kind], dtype=np.complex128)
    if kind == "U1":
        return np.diag([1, cmath.exp(1j * theta)]).astype(np.complex128)
    if kind == "CU1":
        return np.diag([1, 1, 1, cmath.exp(1j * theta)]).astype(np.complex128)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    if kind == "RX":
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if kind == "RY":
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    # RZ
    return np.diag([cmath.exp(-0.5j * theta), cmath.exp(0.5j * theta)]).astype(
        np.complex128
    )


__all__ = ["ARITY", "PARAMETRIC", "GateSpec", "gate_matrix", "is_unitary"]
