"""Helpers for sets encoded as Python ints (bit ``i`` <=> element ``i``)."""

from typing import Iterable, Iterator


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_indices(indices: Iterable[int]) -> int:
    x = 0
    for i in indices:
        x |= 1 << i
    return x


def full(n: int) -> int:
    return (1 << n) - 1


def popcount(x: int) -> int:
    return bin(x).count("1")
