"""Simon's problem: blackbox, quantum circuit and the classical driver."""

import numpy as np

from ..bitstrings import dot_mod2, oplus, to_binary
from ..errors import LengthError, SimonNonConvergence, SizeError
from ..executor import joint_distribution
from ..multicontrol import n_control_u, x_on, x_transformation
from .record import BlackboxRecord
from ._util import bits, scratch_register

CONTROL_REGISTER = "nu_anc"


def simon_table(Q, s, rng):
    """Two-to-one table with ``f(x) == f(x ^ s)`` (a permutation when s == 0).

    Consumes one ``rng.permutation(2**Q)``; each ``{x, x^s}`` pair takes the
    next unused output in ascending order of its smaller member.
    """
    size = 1 << Q
    shift = int("".join(map(str, s)), 2)
    outputs = iter(int(v) for v in rng.permutation(size))
    table = {}
    for x in range(size):
        if x not in table:
            out = next(outputs)
            table[x] = out
            table[x ^ shift] = out
    return table


def check_simon_table(Q, s, table):
    size = 1 << Q
    if sorted(table) != list(range(size)):
        raise LengthError(f"f_table must define all {size} inputs")
    for x in range(size):
        partner = int("".join(map(str, oplus(to_binary(x, size), s))), 2)
        if table[x] != table[partner]:
            raise SizeError(f"f({x}) != f({partner}) for s = {s}")
    preimages = {}
    for x, y in table.items():
        preimages.setdefault(y, set()).add(x)
    want = 1 if not any(s) else 2
    if any(len(v) != want for v in preimages.values()):
        raise SizeError("f_table is not two-to-one for this s")


def blackbox_g_simon(Q, circuit, qreg, out_reg, rng, *, s=None, f_table=None):
    """Append ``|x>|0> -> |x>|f(x)>`` and return the hidden ``s`` and table.

    Draw order: ``rng.integers(2**Q)`` for s (skipped if given), then the
    permutation used by :func:`simon_table` (skipped if ``f_table`` given).
    """
    if Q < 2:
        raise SizeError(f"need at least 2 qubits, got {Q}")
    size = 1 << Q
    main, out = bits(qreg, Q), bits(out_reg, Q)
    if len(main) != Q or len(out) != Q:
        raise LengthError(f"both registers need {Q} qubits")
    scratch = list(scratch_register(circuit, CONTROL_REGISTER, Q - 1))
    s = to_binary(int(rng.integers(size)), size) if s is None else tuple(s)
    if len(s) != Q:
        raise LengthError(f"s has {len(s)} bits, need {Q}")
    if f_table is None:
        f_table = simon_table(Q, s, rng)
    else:
        f_table = {int(k): int(v) for k, v in f_table.items()}
        check_simon_table(Q, s, f_table)
    for x in range(size):
        value = to_binary(f_table[x], size)
        ops = [x_on(out[j]) for j in range(Q) if value[j]]
        if not ops:
            continue
        pattern = to_binary(x, size)
        x_transformation(circuit, main, pattern)
        n_control_u(circuit, main, scratch, ops)
        x_transformation(circuit, main, pattern)
    return BlackboxRecord("simon", s=s, f_table=f_table)


def simons_quantum(Q, circuit, qreg, creg, out_reg, rng, **kwargs):
    """H on the main register, blackbox, H again, then measure it into ``creg``."""
    main = bits(qreg, Q)
    circuit.h(main)
    record = blackbox_g_simon(Q, circuit, qreg, out_reg, rng, **kwargs)
    circuit.h(main)
    for q, c in zip(main, bits(creg, Q)):
        circuit.measure(q, c)
    return record


def simons_solver(equations, N):
    """Every nonzero ``s'`` orthogonal (mod 2) to all equations, ascending."""
    eqs = [tuple(e) for e in equations]
    for e in eqs:
        if len(e) != N:
            raise LengthError(f"equation {e} has {len(e)} bits, need {N}")
    size = 1 << N
    out = []
    for v in range(1, size):
        cand = to_binary(v, size)
        if all(dot_mod2(cand, e) == 0 for e in eqs):
            out.append(cand)
    return out


def simons_classical(Q, circuit, rng, max_runs=None):
    """Sample one shot at a time until at most one candidate survives.

    Each new key is reversed into qubit order and added as an equation.
    Returns ``(candidates, results, runs)`` where ``results`` are the
    distinct outcomes, qubit 0 first, in the order first seen. An empty candidate list means
    the equations ruled out every nonzero s, i.e. s is all zeros.

    Raises :class:`SimonNonConvergence` after ``max_runs`` (default
    ``64 * 2**Q``) samples with several candidates still open.
    """
    if max_runs is None:
        max_runs = 64 * (1 << Q)
    dist = joint_distribution(circuit)
    keys = sorted(dist)
    cdf = np.cumsum([dist[k] for k in keys])
    equations, results = [], []
    candidates = simons_solver([], Q)
    runs = 0
    while runs < max_runs:
        runs += 1
        pick = min(int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right")), len(keys) - 1)
        key = keys[pick][::-1][:Q]
        if key in results:
            continue
        results.append(key)
        equations.append(tuple(int(c) for c in key))
        candidates = simons_solver(equations, Q)
        if len(candidates) <= 1:
            return candidates, results, runs
    raise SimonNonConvergence(candidates, results, runs)
