"""Symmetric-function backend for GL(U) x GL(V) representations.

Weights of the product of two general linear groups are pairs of integer
vectors; irreducibles are pairs of partitions ``(lam, mu)`` with at most
``m`` resp. ``n`` rows.  A :class:`Character` records finitely many weight
pairs with multiplicities.  Decomposition into irreducibles proceeds by
greedy peeling of the lexicographically leading weight, which is provably
the highest weight of some constituent for any genuine character.

An irreducible decomposition is represented as a plain mapping
``{(lam, mu): multiplicity}`` and serializes as
``[{"lambda": [...], "mu": [...], "mult": k}, ...]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import permutations

from .partitions import (
    Partition,
    conjugate,
    dominant,
    enumerate_partitions,
    pad,
    schur_dimension,
    strip_partition,
    weight,
)

WeightPair = tuple[Partition, Partition]
IrrDecomposition = dict[WeightPair, int]


class NotACharacterError(ValueError):
    """Greedy peeling hit a negative multiplicity or a non-dominant leading weight."""


@cache
def kostka(lam: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and the given content.

    The content may be any composition; Kostka numbers are invariant under
    permuting it.  Computed by peeling the boxes filled with the largest
    letter, which form a horizontal strip.
    """
    if sum(content) != weight(lam):
        raise ValueError(f"content {content} does not sum to wt{lam}")
    content = tuple(sorted(content, reverse=True))
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not lam else 0
    if len(lam) > len(content):
        return 0
    last = content[-1]
    total = 0
    for inner in _horizontal_strip_removals(lam, last):
        total += kostka(inner, content[:-1])
    return total


def _horizontal_strip_removals(lam: Partition, k: int) -> list[Partition]:
    """Partitions ``mu <= lam`` with ``lam/mu`` a horizontal strip of size k."""
    out: list[Partition] = []

    def descend(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == len(lam):
            if remaining == 0:
                out.append(strip_partition(prefix))
            return
        lo = max(lam[i] - remaining, lam[i + 1] if i + 1 < len(lam) else 0)
        hi = min(lam[i], prefix[-1]) if prefix else lam[i]
        for val in range(hi, lo - 1, -1):
            descend(i + 1, remaining - (lam[i] - val), prefix + (val,))

    descend(0, k, ())
    return out


def pieri_row(lam: Partition, k: int, max_height: int) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding a horizontal strip of size k.

    A horizontal strip adds at most one box per column; results taller than
    ``max_height`` are dropped.  Deterministic (lexicographically descending)
    order.
    """
    if len(lam) > max_height:
        return []
    out: list[Partition] = []
    rows = lam + ((0,) if len(lam) < max_height else ())

    def descend(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == len(rows):
            if remaining == 0:
                out.append(strip_partition(prefix))
            return
        hi = rows[i] + remaining
        if i > 0:
            hi = min(hi, rows[i - 1])  # at most one new box per column
        for val in range(hi, rows[i] - 1, -1):
            descend(i + 1, remaining - (val - rows[i]), prefix + (val,))

    descend(0, k, ())
    return out


def cauchy_wedge(w: int, m: int, n: int) -> IrrDecomposition:
    """Decomposition of the w-th exterior power of a tensor product of spaces
    of dimensions m and n: one copy of ``(nu, conjugate(nu))`` for every
    partition ``nu`` of ``w`` fitting in the ``m x n`` box.
    """
    if not 0 <= w <= m * n:
        raise ValueError(f"need 0 <= w <= {m * n}, got {w}")
    return {(nu, conjugate(nu)): 1 for nu in enumerate_partitions(w, m, n)}


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of ``nu`` in ``lam * mu``.

    Counts skew semistandard tableaux of shape ``nu/lam`` and content ``mu``
    whose reverse reading word (right to left, top to bottom) is a lattice
    word.  Returns 0 unless weights add up and ``lam`` fits inside ``nu``.
    """
    if weight(nu) != weight(lam) + weight(mu):
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if not mu:
        return 1
    inner = pad(lam, len(nu))
    # Boxes of nu/lam in reverse reading order, with the box directly above.
    cells: list[tuple[int, int]] = []
    for y, row in enumerate(nu):
        for x in range(row - 1, inner[y] - 1, -1):
            cells.append((x, y))

    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)  # counts[v] = letters v placed so far
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        x, y = cells[idx]
        right = filling.get((x + 1, y))
        above = filling.get((x, y - 1)) if y > 0 and x >= inner[y - 1] else None
        lo = 1 if above is None else above + 1
        hi = len(mu) if right is None else right
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice condition
            counts[v] += 1
            filling[(x, y)] = v
            place(idx + 1)
            counts[v] -= 1
        filling.pop((x, y), None)

    place(0)
    return total


@dataclass
class Character:
    """Finite weight-pair multiplicity table for GL(m) x GL(n).

    ``entries`` maps ``(wU, wV)`` (integer vectors of lengths m and n) to a
    positive multiplicity; absent keys mean zero.
    """

    m: int
    n: int
    entries: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = field(default_factory=dict)

    def add(self, wU: tuple[int, ...], wV: tuple[int, ...], mult: int) -> None:
        if mult == 0:
            return
        key = (wU, wV)
        new = self.entries.get(key, 0) + mult
        if new:
            self.entries[key] = new
        else:
            self.entries.pop(key, None)

    def mass(self) -> int:
        """Total dimension (sum of all multiplicities)."""
        return sum(self.entries.values())

    def is_symmetric(self) -> bool:
        """Check invariance under permuting coordinates inside wU and inside wV."""
        for (wU, wV), mult in self.entries.items():
            key = (tuple(sorted(wU, reverse=True)), tuple(sorted(wV, reverse=True)))
            if self.entries.get(key, 0) != mult:
                return False
        return True

    def copy(self) -> "Character":
        return Character(self.m, self.n, dict(self.entries))


@cache
def _distinct_permutations(vec: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(set(permutations(vec))))


@cache
def _weight_table(lam: Partition, length: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All weights of the Schur module of ``lam`` in ``length`` variables."""
    out: list[tuple[tuple[int, ...], int]] = []
    for content in _dominant_contents(weight(lam), length):
        k = kostka(lam, content)
        if k:
            for perm in _distinct_permutations(content):
                out.append((perm, k))
    return tuple(out)


@cache
def _dominant_contents(total: int, length: int) -> tuple[tuple[int, ...], ...]:
    return tuple(pad(p, length) for p in enumerate_partitions(total, length, total))


def schur_pair_character(pair: WeightPair, m: int, n: int) -> Character:
    """Character of the irreducible with highest weight pair ``(lam, mu)``."""
    lam, mu = pair
    if len(lam) > m or len(mu) > n:
        raise ValueError(f"{pair} does not fit in GL({m}) x GL({n})")
    char = Character(m, n)
    for wU, ku in _weight_table(lam, m):
        for wV, kv in _weight_table(mu, n):
            char.add(wU, wV, ku * kv)
    return char


def decompose(char: Character) -> IrrDecomposition:
    """Decompose a character into irreducibles by greedy leading-term peeling.

    Repeatedly takes the lexicographically maximal weight pair, asserts it is
    dominant, and subtracts that many copies of the corresponding irreducible
    character.  Raises :class:`NotACharacterError` if a leading weight is not
    dominant or a subtraction goes negative; on success the returned sum of
    irreducibles reproduces the input exactly.
    """
    remaining = dict(char.entries)
    result: IrrDecomposition = {}
    while remaining:
        wU, wV = max(remaining)
        mult = remaining[(wU, wV)]
        if mult < 0 or not (dominant(wU) and dominant(wV)):
            raise NotACharacterError(f"leading term {(wU, wV)}: {mult}")
        lam, mu = strip_partition(wU), strip_partition(wV)
        result[(lam, mu)] = mult
        for pU, ku in _weight_table(lam, char.m):
            for pV, kv in _weight_table(mu, char.n):
                key = (pU, pV)
                new = remaining.get(key, 0) - mult * ku * kv
                if new:
                    remaining[key] = new
                else:
                    remaining.pop(key, None)
    for mult in remaining.values():
        if mult:
            raise NotACharacterError("nonzero remainder after peeling")
    return result


def decomposition_dimension(dec: IrrDecomposition, m: int, n: int) -> int:
    return sum(
        mult * schur_dimension(lam, m) * schur_dimension(mu, n)
        for (lam, mu), mult in dec.items()
    )


def decomposition_to_json(dec: IrrDecomposition) -> list[dict]:
    return [
        {"lambda": list(lam), "mu": list(mu), "mult": dec[(lam, mu)]}
        for lam, mu in sorted(dec)
    ]


def decomposition_from_json(data: list[dict]) -> IrrDecomposition:
    return {
        (tuple(item["lambda"]), tuple(item["mu"])): item["mult"] for item in data
    }
