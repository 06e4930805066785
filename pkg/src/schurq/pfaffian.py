"""Exact Pfaffian and determinant kernels for skew-symmetric matrices.

Matrices are skew-symmetric by construction: only the strict upper
triangle is stored, the diagonal is zero and the lower triangle is the
negated mirror, so the skew invariant cannot be violated.  The Pfaffian
uses the Laplace-type expansion along the first surviving row with
memoization on the set of surviving indices; exact over any commutative
ring of entries (here GammaPoly).
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .gamma import GammaPoly

_ZERO = GammaPoly.zero()
_ONE = GammaPoly.one()


class SkewMatrix:
    """Even-size skew-symmetric matrix over GammaPoly."""

    __slots__ = ("_size", "_upper")

    def __init__(self, size: int, upper: Mapping[tuple[int, int], GammaPoly]):
        if size < 0 or size % 2 != 0:
            raise ValueError(f"skew matrix size must be even and >= 0, got {size}")
        self._size = size
        data: dict[tuple[int, int], GammaPoly] = {}
        for (i, j), value in upper.items():
            if not (0 <= i < j < size):
                raise ValueError(f"upper-triangle index out of range: ({i}, {j})")
            if value:
                data[(i, j)] = value
        self._upper = data

    @property
    def size(self) -> int:
        return self._size

    def upper(self, i: int, j: int) -> GammaPoly:
        """Unsigned entry of the pair {i, j}, i.e. M[min][max]."""
        if i > j:
            i, j = j, i
        return self._upper.get((i, j), _ZERO)

    def entry(self, i: int, j: int) -> GammaPoly:
        """Signed entry M[i][j]."""
        if i == j:
            return _ZERO
        if i < j:
            return self._upper.get((i, j), _ZERO)
        return -self._upper.get((j, i), _ZERO)

    @classmethod
    def from_entry_fn(
        cls, size: int, fn: Callable[[int, int], GammaPoly]
    ) -> "SkewMatrix":
        """Build from a function giving the upper-triangle entry (i < j)."""
        return cls(size, {(i, j): fn(i, j) for i in range(size) for j in range(i + 1, size)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[GammaPoly]]) -> "SkewMatrix":
        """Build from a full square array, checking skew-symmetry exactly."""
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            if rows[i][i]:
                raise ValueError(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, n):
                if rows[j][i] != -rows[i][j]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        return cls(n, {(i, j): rows[i][j] for i in range(n) for j in range(i + 1, n)})

    def to_rows(self) -> list[list[GammaPoly]]:
        return [[self.entry(i, j) for j in range(self._size)] for i in range(self._size)]

    def swap(self, i: int, j: int) -> "SkewMatrix":
        """Simultaneously exchange rows i,j and columns i,j (0-based)."""
        perm = list(range(self._size))
        perm[i], perm[j] = perm[j], perm[i]
        return SkewMatrix.from_entry_fn(self._size, lambda a, b: self.entry(perm[a], perm[b]))


def pfaffian(matrix: SkewMatrix) -> GammaPoly:
    """Pf(M) by Laplace expansion along the first surviving row.

    The empty matrix has Pfaffian 1.  Memoized on the tuple of surviving
    indices; the cache lives only for this call.
    """
    memo: dict[tuple[int, ...], GammaPoly] = {}

    def rec(indices: tuple[int, ...]) -> GammaPoly:
        if not indices:
            return _ONE
        cached = memo.get(indices)
        if cached is not None:
            return cached
        first = indices[0]
        rest = indices[1:]
        acc = _ZERO
        for t, j in enumerate(rest):
            entry = matrix.upper(first, j)
            if not entry:
                continue
            sub = rec(rest[:t] + rest[t + 1 :])
            if sub:
                term = entry * sub
                acc = acc + term if t % 2 == 0 else acc - term
        memo[indices] = acc
        return acc

    return rec(tuple(range(matrix.size)))


def pfaffian_along(matrix: SkewMatrix, row: int) -> GammaPoly:
    """One Laplace step along the given row (1-based), then the default
    expansion.  Must agree with pfaffian() for every row choice."""
    n = matrix.size
    if not 1 <= row <= n:
        raise IndexError(f"row {row} out of range for size {n}")
    i = row - 1
    acc = _ZERO
    for j in range(n):
        if j == i:
            continue
        entry = matrix.upper(i, j)
        if not entry:
            continue
        keep = [k for k in range(n) if k != i and k != j]
        sub = _pfaffian_of_subset(matrix, keep)
        term = entry * sub
        # (-1)^(i-1) * (-1)^j with 1-based i, j.
        if (row - 1 + j + 1) % 2 == 0:
            acc = acc + term
        else:
            acc = acc - term
    return acc


def _pfaffian_of_subset(matrix: SkewMatrix, indices: list[int]) -> GammaPoly:
    sub = SkewMatrix(
        len(indices),
        {
            (a, b): matrix.upper(indices[a], indices[b])
            for a in range(len(indices))
            for b in range(a + 1, len(indices))
        },
    )
    return pfaffian(sub)


def determinant(matrix: SkewMatrix) -> GammaPoly:
    """Exact determinant by row expansion with memoization on the column set.

    Intended for cross-checking (Pf M)^2 = det M at small sizes.
    """
    n = matrix.size
    memo: dict[tuple[int, ...], GammaPoly] = {}

    def rec(cols: tuple[int, ...]) -> GammaPoly:
        if not cols:
            return _ONE
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        acc = _ZERO
        for t, c in enumerate(cols):
            entry = matrix.entry(row, c)
            if not entry:
                continue
            sub = rec(cols[:t] + cols[t + 1 :])
            if sub:
                term = entry * sub
                acc = acc + term if t % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return rec(tuple(range(n)))
