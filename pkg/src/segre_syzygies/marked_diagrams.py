"""Young diagrams with letter marks and the combinatorics of their strips.

A marked diagram is a core partition together with two strips of extra
boxes: the L-strip touches each column at most once, the R-strip touches
each row at most once, and a box lying in both strips carries the double
mark.  Marked diagrams index the irreducible constituents of
``Wedge^w(U* ox V*) ox Sym^l(U*) ox Sym^r(V*)``, each with multiplicity one:
the core gives the exterior-power part, the strips the two symmetric
powers.

JSON form: ``{"core": [...], "L": [[x, y], ...], "R": [[x, y], ...]}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import WeightPair, pieri_row
from .partitions import (
    Box,
    Partition,
    boxes,
    conjugate,
    contains,
    enumerate_partitions,
    intersect,
)


def _shape_of_boxes(box_set: frozenset[Box]) -> Partition | None:
    """The partition with exactly these boxes, or None if not left-justified."""
    if not box_set:
        return ()
    rows: dict[int, int] = {}
    for _, y in box_set:
        rows[y] = rows.get(y, 0) + 1
    if set(rows) != set(range(len(rows))):
        return None
    shape = tuple(rows[y] for y in range(len(rows)))
    if any(shape[i + 1] > shape[i] for i in range(len(shape) - 1)):
        return None
    if boxes(shape) != box_set:
        return None
    return shape


@dataclass(frozen=True)
class MarkedDiagram:
    """Core partition plus an L-strip and an R-strip of marked boxes."""

    core: Partition
    l_strip: frozenset[Box]
    r_strip: frozenset[Box]

    def validate(self) -> "MarkedDiagram":
        core_boxes = boxes(self.core)
        if core_boxes & (self.l_strip | self.r_strip):
            raise ValueError("strips may not overlap the core")
        l_cols = [x for x, _ in self.l_strip]
        if len(l_cols) != len(set(l_cols)):
            raise ValueError("more than one L mark in a column")
        r_rows = [y for _, y in self.r_strip]
        if len(r_rows) != len(set(r_rows)):
            raise ValueError("more than one R mark in a row")
        for union in (
            core_boxes | self.l_strip,
            core_boxes | self.r_strip,
            core_boxes | self.l_strip | self.r_strip,
        ):
            if _shape_of_boxes(frozenset(union)) is None:
                raise ValueError("marked boxes do not glue to a Young diagram")
        return self

    def u_shape(self) -> Partition:
        """Highest weight on the U side: core together with the L-strip."""
        shape = _shape_of_boxes(frozenset(boxes(self.core) | self.l_strip))
        assert shape is not None
        return shape

    def v_shape(self) -> Partition:
        """Highest weight on the V side: conjugate of core plus R-strip."""
        shape = _shape_of_boxes(frozenset(boxes(self.core) | self.r_strip))
        assert shape is not None
        return conjugate(shape)

    def weight_pair(self) -> WeightPair:
        return (self.u_shape(), self.v_shape())

    def to_json(self) -> dict:
        return {
            "core": list(self.core),
            "L": [list(b) for b in sorted(self.l_strip)],
            "R": [list(b) for b in sorted(self.r_strip)],
        }

    @staticmethod
    def from_json(data: dict) -> "MarkedDiagram":
        return MarkedDiagram(
            tuple(data["core"]),
            frozenset((x, y) for x, y in data["L"]),
            frozenset((x, y) for x, y in data["R"]),
        ).validate()


def lr_markable_boxes(lam: Partition, mu: Partition) -> frozenset[Box]:
    """Boxes of ``lam ∩ conjugate(mu)`` with no lam-box below and no
    conjugate(mu)-box to the right.

    These are exactly the positions where a double mark can sit in a marked
    diagram with weight pair ``(lam, mu)``; their number is the dimension of
    the combinatorial cube attached to that weight.
    """
    mu_c = conjugate(mu)
    nu = intersect(lam, mu_c)
    return frozenset(
        (x, y)
        for y, row in enumerate(nu)
        for x in range(row)
        if not contains(lam, x, y + 1) and not contains(mu_c, x + 1, y)
    )


def strip_decomposition(
    pair: WeightPair,
) -> tuple[Partition, frozenset[Box], frozenset[Box], bool]:
    """Split a weight pair into core, L-strip, R-strip and a validity flag.

    The core is the boxwise intersection of ``lam`` with ``conjugate(mu)``;
    the L-strip is what ``lam`` adds, the R-strip what ``conjugate(mu)``
    adds.  The pair is valid (i.e. occurs in some marked diagram) iff the
    L-strip has at most one box per column and the R-strip at most one box
    per row.
    """
    lam, mu = pair
    mu_c = conjugate(mu)
    nu = intersect(lam, mu_c)
    l_strip = frozenset(boxes(lam) - boxes(nu))
    r_strip = frozenset(boxes(mu_c) - boxes(nu))
    l_cols = [x for x, _ in l_strip]
    r_rows = [y for _, y in r_strip]
    valid = len(l_cols) == len(set(l_cols)) and len(r_rows) == len(set(r_rows))
    return nu, l_strip, r_strip, valid


def enumerate_marked_diagrams(
    m: int, n: int, w: int, l: int, r: int
) -> list[MarkedDiagram]:
    """All marked diagrams with ``w`` unmarked boxes, ``l`` L marks and ``r``
    R marks, such that core+L fits in height ``m`` and core+R in width ``n``.

    Iterates cores, then horizontal-strip extensions for the L side and
    vertical-strip extensions for the R side; the strips may intersect, and
    every combination is a distinct valid diagram.  Deterministic order.
    """
    out: list[MarkedDiagram] = []
    for nu in enumerate_partitions(w, m, n):
        nu_boxes = boxes(nu)
        nu_c = conjugate(nu)
        for lam in pieri_row(nu, l, max_height=m):
            l_strip = frozenset(boxes(lam) - nu_boxes)
            for kappa in pieri_row(nu_c, r, max_height=n):
                r_strip = frozenset(boxes(conjugate(kappa)) - nu_boxes)
                out.append(MarkedDiagram(nu, l_strip, r_strip))
    return out


def marked_diagrams_with_pair(
    diagrams: list[MarkedDiagram], pair: WeightPair
) -> list[MarkedDiagram]:
    """Filter an enumeration down to the diagrams with a given weight pair."""
    return [d for d in diagrams if d.weight_pair() == pair]
