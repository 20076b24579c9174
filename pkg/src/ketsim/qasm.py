"""OpenQASM 2.0 subset: emitter and parser.

Supported statements: the header, ``qreg``/``creg`` declarations, the gate
mnemonics of :mod:`ketsim.gates` and ``measure``. Gate angles may be written
as expressions over numbers and ``pi``. Whole-register arguments broadcast
the way OpenQASM defines it.
"""

import math
import re

from .circuit import CLASSICAL, QUANTUM, Circuit, Gate, Measure, RegisterDecl, angle_text
from .errors import KetsimError, QasmParseError
from .gates import ARITY, KIND_OF, PARAMETRIC, GateSpec

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def emit_qasm(circuit):
    lines = [HEADER]
    for reg in circuit.qregs:
        lines.append(f"qreg {reg.name}[{reg.size}];\n")
    for reg in circuit.cregs:
        lines.append(f"creg {reg.name}[{reg.size}];\n")
    for inst in circuit.data:
        if isinstance(inst, Measure):
            lines.append(f"measure {inst.qubit} -> {inst.clbit};\n")
            continue
        head = inst.spec.mnemonic
        if inst.spec.angle is not None:
            head += f"({angle_text(inst.spec.angle)})"
        lines.append(f"{head} {','.join(str(q) for q in inst.qubits)};\n")
    return "".join(lines)


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>//[^\n]*)
  | (?P<nl>\n)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<arrow>->)
  | (?P<sym>[\[\](),;+\-*/^])
    """,
    re.VERBOSE,
)


class _Tokens:
    def __init__(self, text):
        self.items = []
        line, pos = 1, 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise QasmParseError(f"unexpected character {text[pos]!r}", line)
            kind = m.lastgroup
            if kind == "nl":
                line += 1
            elif kind not in ("ws", "comment"):
                self.items.append((kind, m.group(), line))
            pos = m.end()
        self.end_line = line
        self.i = 0

    def peek(self):
        if self.i < len(self.items):
            return self.items[self.i]
        return ("eof", "", self.end_line)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value, what=None):
        kind, text, line = self.next()
        if text != value:
            found = text or "end of input"
            raise QasmParseError(f"expected {what or repr(value)}, found {found!r}", line)
        return line

    def ident(self):
        kind, text, line = self.next()
        if kind != "ident":
            raise QasmParseError(f"expected a name, found {text or 'end of input'!r}", line)
        return text, line

    def integer(self):
        kind, text, line = self.next()
        if kind != "number" or not text.isdigit():
            raise QasmParseError(f"expected an integer, found {text!r}", line)
        return int(text)


class _AngleParser:
    """Recursive descent over + - * / ^, unary minus, numbers and pi."""

    def __init__(self, toks):
        self.toks = toks

    def expr(self):
        value = self.term()
        while self.toks.peek()[1] in ("+", "-"):
            op = self.toks.next()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.toks.peek()[1] in ("*", "/"):
            op, line = self.toks.next()[1:]
            rhs = self.unary()
            if op == "*":
                value *= rhs
            elif rhs == 0:
                raise QasmParseError("division by zero in angle", line)
            else:
                value /= rhs
        return value

    def unary(self):
        if self.toks.peek()[1] in ("-", "+"):
            sign = -1.0 if self.toks.next()[1] == "-" else 1.0
            return sign * self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.toks.peek()[1] == "^":
            self.toks.next()
            return base ** self.unary()
        return base

    def atom(self):
        kind, text, line = self.toks.next()
        if kind == "number":
            return float(text)
        if kind == "ident" and text == "pi":
            return math.pi
        if text == "(":
            value = self.expr()
            self.toks.expect(")")
            return value
        raise QasmParseError(f"malformed angle near {text or 'end of input'!r}", line)


def _argument(toks, circuit, quantum):
    name, line = toks.ident()
    reg = circuit.find_register(name)
    if reg is None:
        raise QasmParseError(f"undeclared register {name!r}", line)
    if reg.is_quantum != quantum:
        want = "quantum" if quantum else "classical"
        raise QasmParseError(f"register {name!r} is not {want}", line)
    if toks.peek()[1] != "[":
        return list(reg)
    toks.next()
    index = toks.integer()
    toks.expect("]")
    if index >= reg.size:
        raise QasmParseError(f"{name}[{index}] out of range (size {reg.size})", line)
    return [reg[index]]


def _broadcast(args, line):
    widths = {len(a) for a in args if len(a) > 1}
    if len(widths) > 1:
        raise QasmParseError("register arguments have different sizes", line)
    width = widths.pop() if widths else 1
    return [tuple(a[k] if len(a) > 1 else a[0] for a in args) for k in range(width)]


def _declaration(toks, circuit, kind):
    name, line = toks.ident()
    toks.expect("[")
    size = toks.integer()
    toks.expect("]")
    toks.expect(";")
    try:
        circuit.add_register(RegisterDecl(name, size, kind))
    except KetsimError as exc:
        raise QasmParseError(str(exc), line) from None


def _statement(toks, circuit):
    kind, word, line = toks.next()
    if kind != "ident":
        raise QasmParseError(f"unexpected {word!r}", line)
    if word == "OPENQASM":
        kind, version, line = toks.next()
        if kind != "number" or not version.startswith("2"):
            raise QasmParseError(f"unsupported version {version!r}", line)
        toks.expect(";")
        return
    if word == "include":
        kind, _, line = toks.next()
        if kind != "string":
            raise QasmParseError("include needs a quoted file name", line)
        toks.expect(";")
        return
    if word == "qreg":
        return _declaration(toks, circuit, QUANTUM)
    if word == "creg":
        return _declaration(toks, circuit, CLASSICAL)
    if word == "measure":
        qubits = _argument(toks, circuit, True)
        toks.expect("->", "'->'")
        clbits = _argument(toks, circuit, False)
        toks.expect(";")
        if len(qubits) != len(clbits):
            raise QasmParseError("measure needs registers of equal size", line)
        for q, c in zip(qubits, clbits):
            circuit.append(Measure(q, c))
        return
    gate_kind = KIND_OF.get(word)
    if gate_kind is None:
        raise QasmParseError(f"unknown gate {word!r}", line)
    angle = None
    if toks.peek()[1] == "(":
        toks.next()
        angle = _AngleParser(toks).expr()
        toks.expect(")")
    if (angle is None) == (gate_kind in PARAMETRIC):
        need = "needs an angle" if angle is None else "takes no angle"
        raise QasmParseError(f"{word} {need}", line)
    args = [_argument(toks, circuit, True)]
    while toks.peek()[1] == ",":
        toks.next()
        args.append(_argument(toks, circuit, True))
    toks.expect(";")
    if len(args) != ARITY[gate_kind]:
        raise QasmParseError(
            f"{word} takes {ARITY[gate_kind]} qubit arguments, got {len(args)}", line
        )
    spec = GateSpec(gate_kind, angle)
    for qubits in _broadcast(args, line):
        try:
            circuit.append(Gate(spec, qubits))
        except KetsimError as exc:
            raise QasmParseError(str(exc), line) from None


def parse_qasm(text, name="qc"):
    """Parse qasm text into a :class:`Circuit`; errors carry a line number."""
    toks = _Tokens(text)
    circuit = Circuit(name)
    while toks.peek()[0] != "eof":
        _statement(toks, circuit)
    return circuit
