"""Backend selection for the amplitude kernels.

The compiled module ``ketsim._ckernels`` is used when it was built and
imports cleanly. Otherwise, or when ``KETSIM_PURE_PYTHON`` is set to a
non-empty value other than ``0``, the numpy implementation is used.
``BACKEND`` names the active choice.
"""

import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _want_pure():
    return os.environ.get("KETSIM_PURE_PYTHON", "") not in ("", "0")


if _ckernels is not None and not _want_pure():
    _impl = _ckernels
    BACKEND = "cython"
else:
    _impl = _pykernels
    BACKEND = "python"


def available_backends():
    names = {"python": _pykernels}
    if _ckernels is not None:
        names["cython"] = _ckernels
    return names


def apply_matrix(amps, matrix, targets, backend=None):
    """Apply ``matrix`` to ``amps`` in place on ``targets`` (LSB first).

    ``amps`` must be a contiguous complex128 vector; no validation is done.
    """
    impl = _impl if backend is None else available_backends()[backend]
    m = np.ascontiguousarray(matrix, dtype=np.complex128)
    if len(targets) == 1:
        impl.apply_1q(amps, m, int(targets[0]))
    else:
        impl.apply_kq(amps, m, np.ascontiguousarray(targets, dtype=np.intp))
