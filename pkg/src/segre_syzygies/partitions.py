"""Young diagrams as tuples of weakly decreasing positive row lengths.

A partition is a ``tuple[int, ...]`` such as ``(5, 4, 4, 2)``; the empty
diagram is ``()``.  Boxes live at coordinates ``(x, y)`` with ``x`` counting
columns (to the right) and ``y`` counting rows (downwards), both 0-based, so
``(x, y)`` belongs to ``lam`` iff ``y < len(lam)`` and ``x < lam[y]``.
All functions are pure and every value is immutable, so everything here is
safe to share between threads or processes.

Partitions serialize as plain JSON arrays of row lengths (``[]`` for the
empty diagram).
"""

from __future__ import annotations

from functools import cache
from itertools import count
from math import comb
from typing import Iterator

Partition = tuple[int, ...]
Box = tuple[int, int]


def check_partition(rows: tuple[int, ...]) -> Partition:
    """Validate weakly decreasing positive rows, returning them unchanged."""
    for i, row in enumerate(rows):
        if row < 1:
            raise ValueError(f"partition rows must be positive, got {rows}")
        if i + 1 < len(rows) and rows[i + 1] > row:
            raise ValueError(f"partition rows must weakly decrease, got {rows}")
    return tuple(rows)


def weight(lam: Partition) -> int:
    """Number of boxes of the diagram."""
    return sum(lam)


def height(lam: Partition) -> int:
    return len(lam)


def width(lam: Partition) -> int:
    return lam[0] if lam else 0


def contains(lam: Partition, x: int, y: int) -> bool:
    """Box membership test for non-negative coordinates."""
    return 0 <= y < len(lam) and 0 <= x < lam[y]


def boxes(lam: Partition) -> frozenset[Box]:
    return frozenset((x, y) for y, row in enumerate(lam) for x in range(row))


def conjugate(lam: Partition) -> Partition:
    """Transpose the diagram, turning column heights into rows."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for row in lam:
        for x in range(row):
            cols[x] += 1
    return tuple(cols)


def intersect(lam: Partition, mu: Partition) -> Partition:
    """Boxwise intersection (rowwise minimum)."""
    return tuple(min(a, b) for a, b in zip(lam, mu))


def union(lam: Partition, mu: Partition) -> Partition:
    """Boxwise union (rowwise maximum); always a partition."""
    if len(lam) < len(mu):
        lam, mu = mu, lam
    return tuple(max(a, b) for a, b in zip(lam, mu + (0,) * (len(lam) - len(mu))))


def diagonal_length(lam: Partition) -> int:
    """Number of boxes (k, k) on the main diagonal."""
    k = 0
    while contains(lam, k, k):
        k += 1
    return k


def shifted_diagonal_length(lam: Partition, a: int, b: int) -> int:
    """Length of the diagonal of ``lam`` starting at the probe box (a, b).

    Counts k >= 0 such that (a + k, b + k) lies in the diagram extended by
    every box with a negative coordinate.  Membership along the diagonal is
    prefix-closed, so this also equals one plus the largest qualifying k.
    ``shifted_diagonal_length(lam, 0, 0) == diagonal_length(lam)``.
    """
    for k in count():
        x, y = a + k, b + k
        if x >= 0 and y >= 0 and not contains(lam, x, y):
            return k
    raise AssertionError("unreachable")


def extend_columns(lam: Partition, k: int) -> Partition:
    """Add one box at the bottom of each of the first ``k`` columns.

    Columns beyond the current width become new height-1 columns, so the
    result is always a valid partition of weight ``weight(lam) + k``.
    """
    if k < 0:
        raise ValueError("column count must be non-negative")
    if k == 0:
        return lam
    cols = list(conjugate(lam)) + [0] * max(0, k - width(lam))
    for j in range(k):
        cols[j] += 1
    return conjugate(tuple(cols))


@cache
def schur_dimension(lam: Partition, d: int) -> int:
    """Dimension of the degree-``wt(lam)`` Schur module of a d-dimensional space.

    Uses the hook content formula: the product over boxes of (d + col - row)
    divided by the product of hook lengths.  Returns 0 when the diagram is
    taller than ``d``.
    """
    if len(lam) > d:
        return 0
    conj = conjugate(lam)
    num = 1
    den = 1
    for y, row in enumerate(lam):
        for x in range(row):
            num *= d + x - y
            den *= (row - x) + (conj[x] - y) - 1
    assert num % den == 0
    return num // den


def enumerate_partitions(w: int, max_height: int, max_width: int) -> list[Partition]:
    """All partitions of ``w`` inside a ``max_height x max_width`` box.

    Ordered lexicographically descending on the row sequences, e.g.
    ``enumerate_partitions(2, 2, 3) == [(2,), (1, 1)]``.
    """
    out: list[Partition] = []

    def descend(remaining: int, max_part: int, rows_left: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        if rows_left == 0:
            return
        for part in range(min(remaining, max_part), 0, -1):
            descend(remaining - part, part, rows_left - 1, prefix + (part,))

    if w >= 0:
        descend(w, max_width, max_height, ())
    return out


def dominant(vec: tuple[int, ...]) -> bool:
    """Whether an integer vector is a padded partition (weakly decreasing, >= 0)."""
    return all(a >= b for a, b in zip(vec, vec[1:])) and (not vec or vec[-1] >= 0)


def strip_partition(vec: tuple[int, ...]) -> Partition:
    """Drop trailing zeros of a padded weight vector."""
    n = len(vec)
    while n and vec[n - 1] == 0:
        n -= 1
    return tuple(vec[:n])


def pad(lam: Partition, length: int) -> tuple[int, ...]:
    """Pad with zeros up to ``length`` (the diagram must fit)."""
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} rows")
    return lam + (0,) * (length - len(lam))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient that is 0 for negative or oversized ``k`` or negative ``n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def sym_dimension(degree: int, d: int) -> int:
    """Dimension of the symmetric power ``Sym^degree`` of a d-dimensional space."""
    if degree < 0:
        return 0
    return comb(degree + d - 1, d - 1)


def iter_weight_vectors(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` into exactly ``length`` non-negative parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in iter_weight_vectors(total - first, length - 1):
            yield (first,) + rest
