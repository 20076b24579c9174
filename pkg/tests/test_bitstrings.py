import pytest
from hypothesis import given, strategies as st

from ketsim.bitstrings import bits_text, dot_mod2, from_binary, oplus, parse_bits, to_binary
from ketsim.errors import DomainError, LengthError, RangeError


def test_examples():
    assert oplus([1, 0, 1], [1, 1, 0]) == (0, 1, 1)
    assert dot_mod2([1, 1, 0], [1, 1, 1]) == 0
    assert dot_mod2([1, 0, 0], [1, 1, 1]) == 1
    assert to_binary(6, 8) == (1, 1, 0)
    assert from_binary([1, 1, 0]) == 6
    assert parse_bits("0110") == (0, 1, 1, 0)
    assert bits_text((0, 1)) == "01"


@given(st.integers(1, 10).flatmap(lambda w: st.tuples(st.just(w), st.integers(0, 2**w - 1))))
def test_round_trip(case):
    w, n = case
    assert from_binary(to_binary(n, 2**w)) == n


def test_errors():
    with pytest.raises(LengthError):
        oplus([1], [1, 0])
    with pytest.raises(DomainError):
        dot_mod2([2], [1])
    with pytest.raises(RangeError):
        to_binary(8, 8)
    with pytest.raises(RangeError):
        to_binary(1, 6)
    with pytest.raises(DomainError):
        parse_bits("012")
