from ..circuit import ClassicalRegister, QuantumRegister, new_circuit
from ..errors import RangeError
from ..executor import run_counts


def coin_flip(flips, rng):
    """Flip a fair quantum coin ``flips`` times; returns ``(heads, tails)``.

    Heads is outcome 0. All flips are one ``run_counts`` call on ``rng``.
    """
    if int(flips) != flips or flips < 1:
        raise RangeError(f"flips must be a positive integer, got {flips}")
    q, c = QuantumRegister(1, "q"), ClassicalRegister(1, "c")
    qc = new_circuit("coin", q, c)
    qc.h(q[0])
    qc.measure(q[0], c[0])
    counts = run_counts(qc, int(flips), rng=rng)
    heads = counts.get("0", 0)
    return heads, int(flips) - heads
