"""Bit sequences, most significant bit first.

Bit ``i`` of a sequence drives qubit ``i``, so the ket of
``to_binary(n, 2**Q)`` reads as the usual binary text of ``n``.
"""

from .errors import DomainError, LengthError, RangeError


def _check(bits):
    out = tuple(int(b) for b in bits)
    for b in out:
        if b not in (0, 1):
            raise DomainError(f"bit value {b} is not 0 or 1")
    return out


def _pair(a, b):
    a, b = _check(a), _check(b)
    if len(a) != len(b):
        raise LengthError(f"lengths differ: {len(a)} vs {len(b)}")
    return a, b


def oplus(a, b):
    a, b = _pair(a, b)
    return tuple(x ^ y for x, y in zip(a, b))


def dot_mod2(a, b):
    a, b = _pair(a, b)
    return sum(x & y for x, y in zip(a, b)) % 2


def to_binary(n, total):
    """``n`` as ``log2(total)`` bits, MSB first."""
    total = int(total)
    width = total.bit_length() - 1
    if total < 2 or total != 1 << width:
        raise RangeError(f"total {total} is not a power of two >= 2")
    if not 0 <= n < total:
        raise RangeError(f"{n} outside [0, {total})")
    return tuple((int(n) >> (width - 1 - i)) & 1 for i in range(width))


def from_binary(bits):
    value = 0
    for b in _check(bits):
        value = (value << 1) | b
    return value


def parse_bits(text):
    """``"0110"`` -> ``(0, 1, 1, 0)``."""
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise DomainError(f"{text!r} is not a string of 0s and 1s")
    return tuple(int(c) for c in text)


def bits_text(bits):
    return "".join(str(b) for b in bits)
