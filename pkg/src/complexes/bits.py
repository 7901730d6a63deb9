"""Bitmask helpers: a vertex set over 0..62 is one Python int."""

from functools import lru_cache
from typing import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"Negative vertex {v}")
        mask |= 1 << v
    return mask


@lru_cache(maxsize=1 << 16)
def bits_of(mask: int) -> tuple[int, ...]:
    """Vertices of a mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        out.append(v)
        mask ^= low
    return tuple(out)


def rotate_mask(mask: int, r: int, n: int) -> int:
    """Image of a vertex set under v -> v + r (mod n)."""
    r %= n
    if r == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << r) | (mask >> (n - r))) & full


def min_rotation(mask: int, n: int) -> int:
    """Smallest integer encoding in the rotation orbit of a vertex set."""
    return min(rotate_mask(mask, r, n) for r in range(n))
