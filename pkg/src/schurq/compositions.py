"""Integer compositions: the index objects of the Q-functions.

A composition is a plain tuple of integers; parts may be negative, zero
or repeated.  Part positions in the public helpers are 1-based, matching
the usual subscript conventions.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]


def as_composition(parts: Iterable[int]) -> Composition:
    return tuple(int(p) for p in parts)


def weight(lam: Sequence[int]) -> int:
    """Sum of the parts."""
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for p in lam if p != 0)


def is_strict(lam: Sequence[int]) -> bool:
    """All nonzero parts pairwise distinct."""
    nonzero = [p for p in lam if p != 0]
    return len(nonzero) == len(set(nonzero))


def is_partition(lam: Sequence[int]) -> bool:
    """Weakly decreasing with nonnegative parts."""
    return all(p >= 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def is_strict_partition(lam: Sequence[int]) -> bool:
    return is_partition(lam) and is_strict(lam)


def prepend(p: int, lam: Sequence[int]) -> Composition:
    return (p,) + tuple(lam)


def append_zero(lam: Sequence[int]) -> Composition:
    return tuple(lam) + (0,)


def strip_trailing_zeros(lam: Sequence[int]) -> Composition:
    lam = tuple(lam)
    end = len(lam)
    while end > 0 and lam[end - 1] == 0:
        end -= 1
    return lam[:end]


def remove_at(lam: Sequence[int], i: int) -> Composition:
    """Drop the part at 1-based position i."""
    if not 1 <= i <= len(lam):
        raise IndexError(f"position {i} out of range for {len(lam)} parts")
    return tuple(lam[: i - 1]) + tuple(lam[i:])


def remove_at2(lam: Sequence[int], i: int, j: int) -> Composition:
    """Drop the parts at two distinct 1-based positions."""
    if i == j:
        raise IndexError("positions must be distinct")
    hi, lo = max(i, j), min(i, j)
    return remove_at(remove_at(lam, hi), lo)


def swap_adjacent(lam: Sequence[int], i: int) -> Composition:
    """Exchange parts i and i+1 (1-based)."""
    if not 1 <= i < len(lam):
        raise IndexError(f"swap position {i} out of range")
    out = list(lam)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def ind(lam: Sequence[int], p: int) -> int:
    """1-based position of the value p in a strict composition, else 0."""
    if not is_strict(lam):
        raise ValueError(f"ind requires a strict composition, got {tuple(lam)}")
    for i, part in enumerate(lam, start=1):
        if part == p:
            return i
    return 0


def staircase(n: int) -> Composition:
    """(n-1, n-2, ..., 2, 1)."""
    if n < 1:
        raise ValueError("staircase index must be >= 1")
    return tuple(range(n - 1, 0, -1))


def iter_partitions(max_len: int, max_part: int) -> Iterator[Composition]:
    """All partitions with at most max_len parts, each <= max_part,
    without trailing zeros (the empty partition comes first)."""
    def rec(slots: int, cap: int) -> Iterator[Composition]:
        yield ()
        if slots == 0:
            return
        for first in range(min(cap, max_part), 0, -1):
            for rest in rec(slots - 1, first):
                yield (first,) + rest

    yield from rec(max_len, max_part)


def iter_strict_partitions(max_len: int, max_part: int) -> Iterator[Composition]:
    """All strict partitions with at most max_len parts, each <= max_part."""
    values = range(max_part, 0, -1)
    for size in range(0, max_len + 1):
        for combo in combinations(values, size):
            yield combo


def parse_composition(text: str) -> Composition:
    """Parse the bracket syntax, e.g. ``[5,3,-2]`` or ``[]``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"composition must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(piece.strip()) for piece in body.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid composition {text!r}") from exc


def format_composition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
