"""Ket-notation rendering of statevectors and counts."""

from dataclasses import dataclass
import numbers

import numpy as np

from .errors import DisplayOptionsError
from .state import Statevector

SEPARATOR = "  "


@dataclass(frozen=True)
class DisplayOptions:
    precision: int = 5
    column: bool = False
    systems: tuple | None = None
    show_systems: tuple | None = None

    def __post_init__(self):
        if int(self.precision) != self.precision or self.precision < 1:
            raise DisplayOptionsError("precision must be a positive integer")
        if self.systems is not None:
            systems = tuple(self.systems)
            for s in systems:
                if (
                    isinstance(s, (bool, np.bool_))
                    or not isinstance(s, numbers.Integral)
                    or s < 1
                ):
                    raise DisplayOptionsError("systems must be an array of all integers")
            object.__setattr__(self, "systems", tuple(int(s) for s in systems))
        if self.show_systems is not None:
            shows = tuple(self.show_systems)
            if self.systems is None:
                raise DisplayOptionsError("show_systems requires systems")
            if len(shows) != len(self.systems):
                raise DisplayOptionsError(
                    "systems and show_systems need to be arrays of equal length"
                )
            if not all(isinstance(v, (bool, np.bool_)) for v in shows):
                raise DisplayOptionsError("show_systems must be an array of Truth Values")
            object.__setattr__(self, "show_systems", tuple(bool(v) for v in shows))


def _decimal(x, precision):
    text = f"{x:.{precision}f}".rstrip("0")
    return text + "0" if text.endswith(".") else text


def format_amplitude(z, precision=5):
    """Amplitude text, or ``""`` when both parts round to zero."""
    re = round(float(np.real(z)), precision) + 0.0
    im = round(float(np.imag(z)), precision) + 0.0
    if re == 0 and im == 0:
        return ""
    if im == 0:
        return _decimal(re, precision)
    if re == 0:
        return _decimal(im, precision) + "j"
    sign = "+" if im > 0 else "-"
    return f"{_decimal(re, precision)}{sign}{_decimal(abs(im), precision)}j"


def ket_text(index, num_qubits, systems=None, show_systems=None):
    """Ket body for ``index``: qubit 0 first, groups split by ``>|``."""
    bits = "".join(str((index >> q) & 1) for q in range(num_qubits))
    if systems is None:
        return bits
    shows = show_systems or (True,) * len(systems)
    groups, start = [], 0
    for size, show in zip(systems, shows):
        if show:
            groups.append(bits[start:start + size])
        start += size
    return ">|".join(groups)


def wavefunction_terms(state, opts=None):
    """(amplitude text, ket text) pairs in ascending index order."""
    opts = opts or DisplayOptions()
    amps = np.asarray(state.amplitudes if isinstance(state, Statevector) else state)
    n = amps.size.bit_length() - 1
    if opts.systems is not None and sum(opts.systems) != n:
        raise DisplayOptionsError(
            f"systems must sum to the number of qubits ({n}), got {sum(opts.systems)}"
        )
    terms = []
    for i, z in enumerate(amps):
        text = format_amplitude(z, opts.precision)
        if text:
            terms.append((text, ket_text(i, n, opts.systems, opts.show_systems)))
    return terms


def format_wavefunction(state, opts=None, **kwargs):
    """Render a state, e.g. ``0.70711 |0>  0.70711 |1>``.

    Options come from ``opts`` or keyword arguments (``precision``,
    ``column``, ``systems``, ``show_systems``).
    """
    if opts is None:
        opts = DisplayOptions(**kwargs)
    elif kwargs:
        raise TypeError("pass either opts or keyword options, not both")
    parts = [f"{amp} |{ket}>" for amp, ket in wavefunction_terms(state, opts)]
    return ("\n" if opts.column else SEPARATOR).join(parts)


def format_counts(counts, column=False):
    """Render counts as ``<count>|<ket>>`` with the key reversed into qubit order."""
    entries = [(int(v), k[::-1]) for k, v in counts.items()]
    entries.sort(key=lambda e: (-e[0], e[1]))
    parts = [f"{v}|{ket}>" for v, ket in entries]
    return ("\n" if column else SEPARATOR).join(parts)
