"""Pure numpy versions of the amplitude kernels in ``_ckernels.pyx``.

Same signatures, same in-place contract. The amplitude vector is viewed as an
n-axis tensor; C order puts qubit ``q`` on axis ``n - 1 - q``.
"""

import numpy as np


def apply_1q(amps, m, target):
    psi = amps.reshape((-1, 2, 1 << target))
    a0 = psi[:, 0, :].copy()
    a1 = psi[:, 1, :].copy()
    psi[:, 0, :] = m[0, 0] * a0 + m[0, 1] * a1
    psi[:, 1, :] = m[1, 0] * a0 + m[1, 1] * a1


def apply_kq(amps, m, targets):
    n = amps.size.bit_length() - 1
    k = len(targets)
    psi = amps.reshape((2,) * n)
    # matrix axes come out most-significant local bit first
    axes = [n - 1 - t for t in reversed(targets)]
    tensor = m.reshape((2,) * (2 * k))
    out = np.tensordot(tensor, psi, axes=(list(range(k, 2 * k)), axes))
    out = np.moveaxis(out, list(range(k)), axes)
    amps[:] = out.reshape(-1)
