"""Independent reference computations for the test suite.

Nothing here imports ketsim's gate tables or kernels. Gates are defined by
their action on basis states, and whole circuits are built as dense
matrices one column at a time.
"""

import cmath
import itertools
import math

import numpy as np

R2 = 1 / math.sqrt(2)


def single_qubit(kind, angle=None):
    """2x2 matrix in the |0>, |1> basis."""
    if kind == "I":
        return np.eye(2)
    if kind == "X":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if kind == "Y":
        return np.array([[0, -1j], [1j, 0]])
    if kind == "Z":
        return np.diag([1, -1]).astype(complex)
    if kind == "H":
        return np.array([[R2, R2], [R2, -R2]], dtype=complex)
    if kind == "S":
        return np.diag([1, 1j])
    if kind == "T":
        return np.diag([1, cmath.exp(1j * math.pi / 4)])
    if kind == "U1":
        return np.diag([1, cmath.exp(1j * angle)])
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    if kind == "RX":
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind == "RY":
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == "RZ":
        return np.diag([cmath.exp(-0.5j * angle), cmath.exp(0.5j * angle)])
    raise KeyError(kind)


def bit(index, q):
    return (index >> q) & 1


def embed_1q(u, target, n):
    """Dense 2^n matrix of ``u`` acting on qubit ``target`` (qubit 0 = LSB)."""
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        b = bit(col, target)
        for out in (0, 1):
            row = col ^ ((b ^ out) << target)
            m[row, col] += u[out, b]
    return m


def controlled(u, controls, target, n):
    """``u`` on ``target`` when every control is 1, identity otherwise."""
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        if all(bit(col, c) for c in controls):
            b = bit(col, target)
            for out in (0, 1):
                m[col ^ ((b ^ out) << target), col] += u[out, b]
        else:
            m[col, col] = 1
    return m


def swap_matrix(a, b, n, controls=()):
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        row = col
        if all(bit(col, c) for c in controls) and bit(col, a) != bit(col, b):
            row = col ^ (1 << a) ^ (1 << b)
        m[row, col] = 1
    return m


def mcx_matrix(controls, target, n):
    return controlled(single_qubit("X"), controls, target, n)


def op_matrix(kind, qubits, angle, n):
    """Dense matrix of one gate given by kind and absolute qubit indices."""
    if len(qubits) == 1:
        return embed_1q(single_qubit(kind, angle), qubits[0], n)
    if kind == "CX":
        return controlled(single_qubit("X"), qubits[:1], qubits[1], n)
    if kind == "CZ":
        return controlled(single_qubit("Z"), qubits[:1], qubits[1], n)
    if kind == "CU1":
        return controlled(single_qubit("U1", angle), qubits[:1], qubits[1], n)
    if kind == "CCX":
        return controlled(single_qubit("X"), qubits[:2], qubits[2], n)
    if kind == "SWAP":
        return swap_matrix(qubits[0], qubits[1], n)
    if kind == "CSWAP":
        return swap_matrix(qubits[1], qubits[2], n, controls=qubits[:1])
    raise KeyError(kind)


def ops_of(circuit):
    """(kind, absolute qubits, angle) for each gate; measurements are skipped."""
    out = []
    for inst in circuit.data:
        spec = getattr(inst, "spec", None)
        if spec is None:
            continue
        out.append((spec.kind, [circuit.qubit_index(q) for q in inst.qubits], spec.angle))
    return out


def dense_unitary(ops, n):
    u = np.eye(1 << n, dtype=complex)
    for kind, qubits, angle in ops:
        u = op_matrix(kind, qubits, angle, n) @ u
    return u


def dense_run(circuit, initial=None):
    n = circuit.num_qubits
    state = np.zeros(1 << n, dtype=complex)
    if initial is None:
        state[0] = 1
    else:
        state[:] = initial
    for kind, qubits, angle in ops_of(circuit):
        state = op_matrix(kind, qubits, angle, n) @ state
    return state


def kron_embed(u, targets, n):
    """Embed ``u`` (targets[0] = local LSB) with an explicit permutation of kron factors."""
    k = len(targets)
    rest = [q for q in range(n) if q not in targets]
    # build in the order (rest..., targets reversed) from MSB to LSB, then permute
    full = np.kron(np.eye(1 << len(rest)), u)
    order = list(reversed(rest)) + list(reversed(targets))  # MSB first
    dim = 1 << n
    perm = np.zeros(dim, dtype=int)
    for idx in range(dim):
        local = 0
        for pos, q in enumerate(order):
            local |= bit(idx, q) << (n - 1 - pos)
        perm[idx] = local
    assert k == len(set(targets))
    return full[np.ix_(perm, perm)]


def gf2_rank(rows):
    rows = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    while rows:
        pivot = max(rows)
        if pivot == 0:
            break
        rows.remove(pivot)
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
        rank += 1
    return rank


def orthogonal_nonzero(equations, n):
    out = []
    for cand in itertools.product((0, 1), repeat=n):
        if any(cand) and all(sum(a * b for a, b in zip(cand, e)) % 2 == 0 for e in equations):
            out.append(list(cand))
    return out


def grover_amplitudes(Q, iterations):
    """(marked, other) real amplitudes after each iteration, sign convention free."""
    N = 1 << Q
    a = b = 1 / math.sqrt(N)
    out = []
    for _ in range(iterations):
        a = -a
        mean = (a + (N - 1) * b) / N
        a, b = 2 * mean - a, 2 * mean - b
        out.append((a, b))
    return out


def hadamard_sign(x, y):
    return -1 if bin(x & y).count("1") % 2 else 1


def walsh_matrix(n):
    dim = 1 << n
    return np.array(
        [[hadamard_sign(r, c) for c in range(dim)] for r in range(dim)]
    ) / math.sqrt(dim)


def dft(size):
    return np.array(
        [[cmath.exp(2j * math.pi * r * c / size) for c in range(size)] for r in range(size)]
    ) / math.sqrt(size)


def bit_reverse(i, n):
    return int(format(i, f"0{n}b")[::-1], 2)


def ket(index, n):
    return "".join(str(bit(index, q)) for q in range(n))
