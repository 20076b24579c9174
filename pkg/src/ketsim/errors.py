"""Exception hierarchy.

Everything raised on purpose by the package derives from :class:`KetsimError`.
Most classes also derive from ``ValueError`` so callers that only care about
"bad input" can catch the builtin.
"""


class KetsimError(Exception):
    """Base class for all package errors."""


class SizeError(KetsimError, ValueError):
    """A size or qubit count is outside the supported range."""


class CapacityError(KetsimError, ValueError):
    """Not enough room: too many qubits, or too few ancillas."""


class DomainError(KetsimError, ValueError):
    """A bit entry is not 0 or 1."""


class UnitarityError(KetsimError, ValueError):
    pass


class TargetError(KetsimError, ValueError):
    """Duplicate or out-of-range target qubits."""


class AliasingError(KetsimError, ValueError):
    """Qubit sets that must be disjoint overlap."""


class DimensionError(KetsimError, ValueError):
    pass


class ShapeError(KetsimError, ValueError):
    pass


class ParameterError(KetsimError, ValueError):
    """Gate angle missing for a parametric gate, or given for a fixed one."""


class RegistryError(KetsimError, ValueError):
    """Register name clash, bad register name, or unresolved reference."""


class LengthError(KetsimError, ValueError):
    """Bit sequences or patterns of mismatched length."""


class RangeError(KetsimError, ValueError):
    pass


class RequestError(KetsimError, ValueError):
    """Malformed controlled-operation request."""


class DisplayOptionsError(KetsimError, ValueError):
    pass


class CircuitSemanticsError(KetsimError, ValueError):
    """A circuit is well formed but cannot be executed the way requested."""


class MeasurementInStatevectorError(CircuitSemanticsError):
    pass


class CregError(CircuitSemanticsError):
    """Counts need exactly one classical register."""


class OrderingError(CircuitSemanticsError):
    """A gate acts on a qubit after that qubit was measured."""


class QasmParseError(KetsimError, ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


class SimonNonConvergence(KetsimError, RuntimeError):
    """The sampling loop hit ``max_runs`` with several candidates left.

    Carries the partial state so a caller can fall back to the classical
    ``f(0...0) == f(s')`` check.
    """

    def __init__(self, candidates, results, runs):
        super().__init__(
            f"no unique candidate after {runs} runs ({len(candidates)} left)"
        )
        self.candidates = candidates
        self.results = results
        self.runs = runs
