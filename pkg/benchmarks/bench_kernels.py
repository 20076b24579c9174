"""Time the compiled and numpy amplitude kernels on the same inputs.

    python benchmarks/bench_kernels.py [--qubits 10 14 18] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from ketsim import kernels

GATES = {
    "1q": [0],
    "1q-high": None,  # filled per size: the top qubit
    "2q": [0, 3],
    "3q": [1, 4, 2],
}


def random_unitary(k, rng):
    z = rng.normal(size=(1 << k, 1 << k)) + 1j * rng.normal(size=(1 << k, 1 << k))
    q, _ = np.linalg.qr(z)
    return q


def bench(n, name, targets, backends, repeat, rng):
    u = random_unitary(len(targets), rng)
    psi = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    psi /= np.linalg.norm(psi)
    row = {}
    for backend in backends:
        amps = psi.copy()
        kernels.apply_matrix(amps, u, targets, backend=backend)  # warm up
        number = max(1, 2 ** 20 // (1 << n))
        t = min(timeit.repeat(
            lambda: kernels.apply_matrix(amps, u, targets, backend=backend),
            number=number, repeat=repeat,
        )) / number
        row[backend] = t
    return row


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--qubits", type=int, nargs="+", default=[10, 14, 18, 20])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    backends = sorted(kernels.available_backends())
    rng = np.random.default_rng(args.seed)
    print(f"active backend: {kernels.BACKEND}; comparing {', '.join(backends)}")
    head = f"{'qubits':>6} {'gate':>8}" + "".join(f"{b + ' us':>14}" for b in backends)
    if len(backends) > 1:
        head += f"{'speedup':>10}"
    print(head)
    for n in args.qubits:
        for name, targets in GATES.items():
            targets = [n - 1] if targets is None else targets
            if max(targets) >= n:
                continue
            row = bench(n, name, targets, backends, args.repeat, rng)
            line = f"{n:>6} {name:>8}" + "".join(f"{row[b] * 1e6:>14.1f}" for b in backends)
            if len(backends) > 1:
                line += f"{row['python'] / row['cython']:>9.2f}x"
            print(line)


if __name__ == "__main__":
    main()
