"""Command-line front end: ``ketsim run | demo | emit``.

Exit codes: 0 success, 2 qasm parse error, 3 semantic or usage error.
"""

import argparse
import sys

from . import algorithms as alg
from .bitstrings import bits_text, parse_bits, to_binary
from .circuit import ClassicalRegister, QuantumRegister, new_circuit
from .display import DisplayOptions, format_counts, format_wavefunction
from .errors import KetsimError, QasmParseError, SimonNonConvergence
from .executor import DEFAULT_SHOTS, make_rng, run_counts, run_statevector
from .qasm import emit_qasm, parse_qasm
from .qft import qft, qft_dgr, qft_grover_circuit

EXIT_PARSE = 2
EXIT_SEMANTIC = 3
DEMOS = ("deutsch", "dj", "bv", "simon", "grover", "qft", "coin")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SEMANTIC, f"{self.prog}: error: {message}\n")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _display_args(p):
    p.add_argument("--precision", type=_positive, default=5,
                   help="decimal places for amplitudes (default: 5)")
    p.add_argument("--column", action="store_true",
                   help="print one term per line")


def _sampling_args(p):
    p.add_argument("--shots", type=_positive, default=DEFAULT_SHOTS,
                   help=f"measurement shots (default: {DEFAULT_SHOTS})")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: fresh OS entropy)")


def build_parser():
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = _Parser(prog="ketsim", description=__doc__.splitlines()[0],
                     formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="simulate a .qasm file", formatter_class=fmt)
    run.add_argument("file")
    run.add_argument("--statevector", action="store_true",
                     help="print the final wavefunction instead of counts")
    _sampling_args(run)
    _display_args(run)

    demo = sub.add_parser("demo", help="run an algorithm walkthrough", formatter_class=fmt)
    demo.add_argument("name", choices=DEMOS)
    demo.add_argument("--qubits", type=_positive, default=None,
                      help="main register size (default depends on the demo)")
    demo.add_argument("--marked", default=None,
                      help="bit string, qubit 0 first (grover target, qft input)")
    demo.add_argument("--reveal", action="store_true",
                      help="also print the hidden structure")
    demo.add_argument("--paper-compat", action="store_true",
                      help="qft: use the absolute-position angle table")
    demo.add_argument("--balance-odds", action="store_true",
                      help="dj: constant and balanced equally likely")
    demo.add_argument("--search", action="store_true",
                      help="qft: run the two-qubit QFT-based Grover search")
    demo.add_argument("--flips", type=_positive, default=100,
                      help="coin: number of flips")
    _sampling_args(demo)
    _display_args(demo)

    emit = sub.add_parser("emit", help="print the canonical qasm of a file", formatter_class=fmt)
    emit.add_argument("file")
    return parser


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_run(args, out):
    circuit = parse_qasm(_read(args.file))
    opts = DisplayOptions(precision=args.precision, column=args.column)
    if args.statevector:
        print(format_wavefunction(run_statevector(circuit), opts), file=out)
    else:
        counts = run_counts(circuit, args.shots, args.seed)
        print(format_counts(counts, args.column), file=out)


def cmd_emit(args, out):
    out.write(emit_qasm(parse_qasm(_read(args.file))))


class _Trace:
    """Prints titled wavefunctions of the main register only."""

    def __init__(self, args, out):
        self.args = args
        self.out = out

    def opts(self, circuit, shown):
        systems = [r.size for r in circuit.qregs]
        if len(systems) == 1:
            return DisplayOptions(self.args.precision, self.args.column)
        show = [r.name in shown for r in circuit.qregs]
        return DisplayOptions(self.args.precision, self.args.column, systems, show)

    def state(self, title, circuit, shown=("q",)):
        self.line(f"___ {title} ___")
        state = run_statevector(circuit)
        self.line(format_wavefunction(state, self.opts(circuit, shown)))
        self.line("")
        return state

    def line(self, text):
        print(text, file=self.out)


def _qubits(args, default, minimum=2):
    n = args.qubits if args.qubits is not None else default
    if n < minimum:
        raise UsageError(f"this demo needs at least {minimum} qubits")
    return n


def _pattern(args, n, rng):
    if args.marked is None:
        return to_binary(int(rng.integers(1 << n)), 1 << n)
    bits = parse_bits(args.marked)
    if len(bits) != n:
        raise UsageError(f"--marked has {len(bits)} bits but --qubits is {n}")
    return bits


def _measure_main(circuit, q, n):
    qc = circuit.copy()
    c = ClassicalRegister(n, "c")
    if qc.find_register("c") is None:
        qc.add_register(c)
    for i in range(n):
        qc.measure(q[i], c[i])
    return qc


def demo_deutsch(args, rng, tr):
    q = QuantumRegister(2, "q")
    qc = new_circuit("qc", q)
    qc.x(q[1])
    tr.state("Initial State", qc)
    qc.h(q[0])
    qc.h(q[1])
    tr.state("After H^2", qc)
    record = alg.blackbox_g_deutsch(qc, q, rng)
    tr.state("After g", qc)
    qc.h(q[0])
    qc.h(q[1])
    tr.state("After H^2", qc)
    if args.reveal:
        tr.line(f"sneak peek: {record.label}")
    c = ClassicalRegister(1, "c")
    qc.add_register(c)
    qc.measure(q[0], c[0])
    bit = next(iter(run_counts(qc, 1, rng=rng)))
    verdict = "constant" if bit == "0" else "balanced"
    tr.line(f"Measured state |{bit}> therefore f is {verdict}!")


def _phase_oracle_demo(args, rng, tr, kind):
    n = _qubits(args, 3)
    q, anc = QuantumRegister(n, "q"), QuantumRegister(1, "anc")
    qc = new_circuit("qc", [q, anc])
    qc.x(anc[0])
    qc.h(q)
    tr.state("Before g", qc)
    # the ancilla sits in |-> only while g acts, so the trace shows it as |1>
    qc.h(anc[0])
    if kind == "dj":
        record = alg.blackbox_g_dj(n, qc, q, anc, rng, balance_odds=args.balance_odds)
    else:
        hidden = alg.blackbox_g_bv(n, qc, q, anc, rng)
    qc.h(anc[0])
    tr.state("After g", qc)
    qc.h(q)
    tr.state(f"After H^{n}", qc)
    counts = run_counts(_measure_main(qc, q, n), args.shots, rng=rng)
    tr.line(format_counts(counts, args.column))
    top = max(counts, key=counts.get)[::-1]
    if kind == "dj":
        if args.reveal:
            tr.line(f"sneak peek: f is {record.label}")
            if record.label == "balanced":
                states = sorted(bits_text(s) for s in record.one_states)
                tr.line("states mapped to 1: " + ", ".join(f"|{s}>" for s in states))
        zero = "0" * n
        verdict = "constant" if set(counts) == {zero} else "balanced"
        tr.line(f"conclusion: f is {verdict}")
    else:
        if args.reveal:
            tr.line(f"sneak peek: hidden string a = {list(hidden)}")
        tr.line(f"measured a = {[int(b) for b in top]}")


def demo_simon(args, rng, tr):
    n = _qubits(args, 2)
    q, o, c = QuantumRegister(n, "q"), QuantumRegister(n, "o"), ClassicalRegister(n, "c")
    qc = new_circuit("qc", [q, o], c)
    qc.h(q)
    record = alg.blackbox_g_simon(n, qc, q, o, rng)
    tr.state("After g", qc, shown=("q", "o"))
    qc.h(q)
    tr.state(f"After H^{n}", qc, shown=("q", "o"))
    for i in range(n):
        qc.measure(q[i], c[i])
    if args.reveal:
        tr.line(f"sneak peek: s = {list(record.s)}")
        table = "  ".join(
            f"f({bits_text(to_binary(x, 1 << n))}) -> {bits_text(to_binary(y, 1 << n))}"
            for x, y in sorted(record.f_table.items())
        )
        tr.line(table)
    try:
        candidates, results, runs = alg.simons_classical(n, qc, rng)
    except SimonNonConvergence as exc:
        tr.line(f"no unique candidate after {exc.runs} runs: "
                f"{[list(s) for s in exc.candidates]}")
        return
    tr.line("measured: " + "  ".join(f"|{r}>" for r in results))
    tr.line(f"quantum runs: {runs}")
    if candidates:
        tr.line(f"candidate: {[list(s) for s in candidates]}")
    else:
        tr.line(f"candidate: {[0] * n} (every nonzero s ruled out)")


def demo_grover(args, rng, tr):
    n = _qubits(args, 3)
    marked = _pattern(args, n, rng)
    qc, plan = alg.grover(n, marked)
    tr.line(f"marked state: |{bits_text(marked)}>  iterations: {plan.iterations}")
    tr.line("")
    tr.state("Final State", qc)
    counts = run_counts(_measure_main(qc, qc.find_register("q"), n), args.shots, rng=rng)
    tr.line(format_counts(counts, args.column))


def demo_qft(args, rng, tr):
    mode = "paper-compat" if args.paper_compat else "standard"
    if args.search:
        _qubits(args, 2)
        if args.qubits not in (None, 2):
            raise UsageError("--search works on exactly 2 qubits")
        marked = _pattern(args, 2, rng)
        qc, stages = qft_grover_circuit(marked, mode)
        tr.line(f"marked state: |{bits_text(marked)}>")
        tr.line("")
        for title, count in stages:
            prefix = qc.copy()
            prefix.data = prefix.data[:count]
            tr.state(title, prefix)
        return
    n = _qubits(args, 3, minimum=1)
    if args.marked is None:
        basis = (0,) * (n - 1) + (1,)
    else:
        basis = _pattern(args, n, rng)
    q = QuantumRegister(n, "q")
    qc = new_circuit("qc", q)
    for i, b in enumerate(basis):
        if b:
            qc.x(q[i])
    tr.state("Initial State", qc)
    qft(qc, q, n, mode)
    tr.state("QFT", qc)
    qft_dgr(qc, q, n, mode)
    tr.state("Inverse QFT", qc)


def demo_coin(args, rng, tr):
    heads, tails = alg.coin_flip(args.flips, rng)
    tr.line(f"Final Score -- Alice: {heads} Bob: {tails}")


def cmd_demo(args, out):
    rng = make_rng(args.seed)
    tr = _Trace(args, out)
    name = args.name
    if name == "deutsch":
        demo_deutsch(args, rng, tr)
    elif name in ("dj", "bv"):
        _phase_oracle_demo(args, rng, tr, name)
    elif name == "simon":
        demo_simon(args, rng, tr)
    elif name == "grover":
        demo_grover(args, rng, tr)
    elif name == "qft":
        demo_qft(args, rng, tr)
    else:
        demo_coin(args, rng, tr)


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "demo": cmd_demo, "emit": cmd_emit}[args.command]
    try:
        handler(args, out)
    except QasmParseError as exc:
        print(f"ketsim: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (KetsimError, UsageError) as exc:
        print(f"ketsim: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
