"""
VertexSet helpers.

A vertex set is a plain ``int`` whose bit ``i`` is set when vertex ``i`` is a
member. Python integers are arbitrary precision, so rows wider than one
machine word need no special handling.
"""
from typing import Iterable, Iterator, List

VertexSet = int


def bit(v: int) -> VertexSet:
    return 1 << v


def full_set(n: int) -> VertexSet:
    """All vertices 0..n-1."""
    return (1 << n) - 1


def from_vertices(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_vertices(mask: VertexSet) -> Iterator[int]:
    """Yield member vertices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> List[int]:
    return list(iter_vertices(mask))


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def lowest(mask: VertexSet) -> int:
    """Lowest member; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1
