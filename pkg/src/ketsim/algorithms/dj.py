"""Deutsch-Jozsa and Bernstein-Vazirani phase oracles.

Both blackboxes flip the sign of selected inputs by hitting an ancilla held
in ``|->`` with an n-controlled NOT, bracketed by X transformations.
"""

from ..bitstrings import dot_mod2, to_binary
from ..errors import LengthError, SizeError
from ..multicontrol import n_not, x_transformation
from .record import BlackboxRecord
from ._util import bits, scratch_register, single

CASCADE_REGISTER = "nn_anc"


def _phase_flip(circuit, controls, target, scratch, pattern):
    x_transformation(circuit, controls, pattern)
    n_not(circuit, controls, target, scratch)
    x_transformation(circuit, controls, pattern)


def _setup(Q, circuit, qreg):
    if Q < 2:
        raise SizeError(f"need at least 2 qubits, got {Q}")
    controls = bits(qreg, Q)
    if len(controls) != Q:
        raise LengthError(f"register holds {len(controls)} qubits, need {Q}")
    scratch = scratch_register(circuit, CASCADE_REGISTER, Q - 2)
    return controls, (list(scratch) if scratch else [])


def blackbox_g_dj(Q, circuit, qreg, ancilla, rng, *, balance_odds=False, one_states=None):
    """Append a random constant or balanced phase oracle.

    Draw order: ``r = rng.integers(2**Q)``; r == 0 is constant 0, r == 1 is
    constant 1, anything else is balanced and is followed by
    ``rng.choice(2**Q, 2**(Q-1), replace=False)`` for the flipped inputs.
    With ``balance_odds`` the first draw is ``rng.integers(4)`` instead:
    0 and 1 as above, 2 and 3 balanced.

    ``one_states`` (a collection of bit tuples) skips the draws.
    """
    controls, scratch = _setup(Q, circuit, qreg)
    target = single(ancilla)
    size = 1 << Q
    if one_states is not None:
        chosen = [tuple(s) for s in one_states]
        if any(len(s) != Q for s in chosen):
            raise LengthError(f"every state needs {Q} bits")
        if len(set(chosen)) not in (0, size // 2, size):
            raise SizeError("one_states must be empty, half, or all of the inputs")
        r = {0: 0, size: 1}.get(len(set(chosen)), 2)
    else:
        r = int(rng.integers(4 if balance_odds else size))
        chosen = None
    if r == 0:
        for q in controls:
            circuit.id(q)
        return BlackboxRecord("dj", label="constant")
    if r == 1:
        # f == 1 everywhere: every branch picks up the same -1
        circuit.x(target)
        states = frozenset(to_binary(x, size) for x in range(size))
        return BlackboxRecord("dj", label="constant", one_states=states)
    if chosen is None:
        chosen = [to_binary(int(x), size) for x in rng.choice(size, size // 2, replace=False)]
    for pattern in chosen:
        _phase_flip(circuit, controls, target, scratch, pattern)
    return BlackboxRecord("dj", label="balanced", one_states=frozenset(chosen))


def deutsch_jozsa(Q, circuit, qreg, ancilla, rng, **kwargs):
    """H on main and ancilla, blackbox, H again.

    The caller flips the ancilla to ``|1>`` first. Afterwards the amplitude
    of ``|0...0>`` has magnitude 1 for constant f and 0 for balanced f.
    """
    controls = bits(qreg, Q)
    target = single(ancilla)
    circuit.h(controls)
    circuit.h(target)
    record = blackbox_g_dj(Q, circuit, qreg, ancilla, rng, **kwargs)
    circuit.h(controls)
    circuit.h(target)
    return record


def blackbox_g_bv(Q, circuit, qreg, ancilla, rng, *, a=None):
    """Append the oracle for ``f(x) = a.x mod 2`` and return ``a``.

    Draws ``rng.integers(2**Q)`` for ``a`` unless it is given.
    """
    controls, scratch = _setup(Q, circuit, qreg)
    target = single(ancilla)
    size = 1 << Q
    if a is None:
        a = to_binary(int(rng.integers(size)), size)
    a = tuple(a)
    if len(a) != Q:
        raise LengthError(f"a has {len(a)} bits, need {Q}")
    for x in range(size):
        pattern = to_binary(x, size)
        if dot_mod2(pattern, a):
            _phase_flip(circuit, controls, target, scratch, pattern)
    return a


def bernstein_vazirani(Q, circuit, qreg, ancilla, rng, **kwargs):
    """H, oracle, H; the main register ends in ``|a>`` up to sign."""
    controls = bits(qreg, Q)
    target = single(ancilla)
    circuit.h(controls)
    circuit.h(target)
    a = blackbox_g_bv(Q, circuit, qreg, ancilla, rng, **kwargs)
    circuit.h(controls)
    circuit.h(target)
    return a
