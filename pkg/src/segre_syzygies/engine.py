"""Closed-form syzygy tables for Segre embeddings and their twisted modules.

The homogeneous coordinate ring of the Segre embedding of P(U) x P(V), and
more generally the graded module of twisted sections of O(a, b), has a
minimal free resolution whose graded pieces are representations of
GL(U) x GL(V).  Every isotypic component of the computing Koszul complex is
a combinatorial cube truncated from below by the grading; its cohomology is
therefore explicit:

* an untruncated cube of positive dimension contributes nothing;
* a cube of dimension zero contributes one copy of its weight;
* a cube truncated at level ``k`` contributes ``binomial(N-1, k-1)`` copies
  in the lowest surviving corner.

:func:`classify_weight` performs this case analysis for a single weight
pair; :func:`segre_syzygies` and :func:`sheaf_syzygies` aggregate it into a
:class:`BettiTable`.  Entries are indexed by ``(p, t)`` with ``p`` the
homological degree and ``t`` the internal degree; the resolution reads
``F_p = (+)_t R_{p,t} ox S(-t)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import WeightPair, lr_coefficient
from .marked_diagrams import lr_markable_boxes, strip_decomposition
from .partitions import (
    Partition,
    binomial,
    conjugate,
    diagonal_length,
    enumerate_partitions,
    extend_columns,
    height,
    schur_dimension,
    shifted_diagonal_length,
    sym_dimension,
    weight,
)


class RangeError(ValueError):
    """Twist outside the admissible range a >= -m, b >= -n."""


@dataclass(frozen=True)
class ComponentFate:
    """Outcome of classifying one isotypic component of the Koszul complex.

    ``kind`` is one of ``absent``, ``acyclic``, ``zero_cube`` or ``clipped``.
    ``cube_dim`` is the number of double-markable boxes, ``clip`` the
    truncation level; homological position ``p`` and cohomological shift
    ``q`` are set for the two contributing kinds (``q`` is always 0 for
    clipped cubes).
    """

    kind: str
    p: int = 0
    q: int = 0
    multiplicity: int = 0
    cube_dim: int = 0
    clip: int = 0


ABSENT = ComponentFate("absent")


def classify_weight(pair: WeightPair, a: int, b: int, m: int, n: int) -> ComponentFate:
    """Classify the isotypic component of ``pair`` in the Koszul complex of
    the module of twisted sections of O(a, b) on P(U) x P(V).

    The component is spanned by marked diagrams sharing this weight pair;
    they form a combinatorial cube whose directions are the double-markable
    boxes, truncated by the requirement that the grading stay non-negative.
    """
    lam, mu = pair
    if height(lam) > m or height(mu) > n:
        return ABSENT
    core, l_strip, r_strip, valid = strip_decomposition(pair)
    if not valid:
        return ABSENT
    l, r = len(l_strip), len(r_strip)
    if l - a != r - b:
        return ABSENT
    q0 = l - a
    cube_dim = len(lr_markable_boxes(lam, mu))
    if cube_dim == 0:
        if q0 >= 0:
            return ComponentFate("zero_cube", p=weight(core), q=q0, multiplicity=1)
        return ABSENT
    k = -q0
    if k <= 0:
        return ComponentFate("acyclic", cube_dim=cube_dim)
    if k <= cube_dim:
        return ComponentFate(
            "clipped",
            p=weight(core) - k,
            q=0,
            multiplicity=binomial(cube_dim - 1, k - 1),
            cube_dim=cube_dim,
            clip=k,
        )
    return ABSENT


@dataclass(frozen=True)
class SyzygyComponent:
    """One irreducible constituent of a syzygy space.

    ``core`` is the partition of unmarked boxes behind the component (the
    diagonal-extension construction recovers ``lam`` and ``mu`` from it for
    Segre tables); ``dim`` already includes the multiplicity.
    """

    lam: Partition
    mu: Partition
    mult: int
    dim: int
    p: int
    t: int
    core: Partition

    def sort_key(self):
        return (self.t, self.p, self.lam, self.mu)


@dataclass
class BettiTable:
    """Graded Betti numbers with their equivariant decompositions.

    ``entries`` maps ``(p, t)`` to the tuple of components there; ``betti``
    maps ``(p, t)`` to the total dimension.
    """

    m: int
    n: int
    a: int
    b: int
    max_t: int
    entries: dict[tuple[int, int], tuple[SyzygyComponent, ...]] = field(default_factory=dict)

    @property
    def betti(self) -> dict[tuple[int, int], int]:
        return {key: sum(c.dim for c in comps) for key, comps in self.entries.items()}

    def dimension(self, p: int, t: int) -> int:
        return sum(c.dim for c in self.entries.get((p, t), ()))

    def components(self, p: int, t: int) -> tuple[SyzygyComponent, ...]:
        return self.entries.get((p, t), ())

    def component_multiset(self, p: int, t: int) -> dict[WeightPair, int]:
        out: dict[WeightPair, int] = {}
        for c in self.entries.get((p, t), ()):
            out[(c.lam, c.mu)] = out.get((c.lam, c.mu), 0) + c.mult
        return out

    def max_p(self) -> int:
        return max((p for p, _ in self.entries), default=0)

    def sorted_entries(self) -> list[tuple[tuple[int, int], tuple[SyzygyComponent, ...]]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))


def _add_component(
    table: dict[tuple[int, int], list[SyzygyComponent]],
    pair: WeightPair,
    mult: int,
    p: int,
    t: int,
    core: Partition,
    m: int,
    n: int,
) -> None:
    lam, mu = pair
    dim = mult * schur_dimension(lam, m) * schur_dimension(mu, n)
    if dim == 0:
        return
    table.setdefault((p, t), []).append(
        SyzygyComponent(lam, mu, mult, dim, p, t, core)
    )


def _finish(table, m, n, a, b, max_t) -> BettiTable:
    entries = {
        key: tuple(sorted(comps, key=SyzygyComponent.sort_key))
        for key, comps in table.items()
    }
    return BettiTable(m, n, a, b, max_t, entries)


def segre_syzygies(m: int, n: int) -> BettiTable:
    """Equivariant Betti table of the Segre embedding itself.

    For every partition ``nu`` inside the (m-1) x (n-1) box, extending the
    first ``s`` columns of ``nu`` and of its conjugate (``s`` the diagonal
    length) yields one component in homological degree ``wt(nu)`` and
    internal degree ``wt(nu) + s``.  The result is cross-checked against the
    weight-by-weight classifier.
    """
    if m < 1 or n < 1:
        raise RangeError(f"need m, n >= 1, got ({m}, {n})")
    table: dict[tuple[int, int], list[SyzygyComponent]] = {}
    for w in range(0, (m - 1) * (n - 1) + 1):
        for nu in enumerate_partitions(w, m - 1, n - 1):
            s = diagonal_length(nu)
            pair = (extend_columns(nu, s), extend_columns(conjugate(nu), s))
            _add_component(table, pair, 1, w, w + s, nu, m, n)
    max_t = max((t for _, t in table), default=0)
    closed = _finish(table, m, n, 0, 0, max_t)
    enumerated = sheaf_syzygies(m, n, 0, 0, max_t)
    assert closed.entries == enumerated.entries, "closed form disagrees with classifier"
    return closed


def sheaf_syzygies(m: int, n: int, a: int, b: int, max_t: int) -> BettiTable:
    """Betti table of the graded module of twisted sections of O(a, b),
    restricted to internal degrees up to ``max_t``.

    Every contributing weight pair at internal degree ``t`` has U-side
    weight ``t + a`` and V-side weight ``t + b``, so enumerating those pairs
    per degree and classifying each one is complete.
    """
    if m < 1 or n < 1:
        raise RangeError(f"need m, n >= 1, got ({m}, {n})")
    if a < -m or b < -n:
        raise RangeError(f"twist ({a}, {b}) outside a >= {-m}, b >= {-n}")
    if max_t < 0:
        raise ValueError("max_t must be non-negative")
    table: dict[tuple[int, int], list[SyzygyComponent]] = {}
    for t in range(max_t + 1):
        wu, wv = t + a, t + b
        if wu < 0 or wv < 0:
            continue
        for lam in enumerate_partitions(wu, m, wu):
            for mu in enumerate_partitions(wv, n, wv):
                fate = classify_weight((lam, mu), a, b, m, n)
                if fate.kind in ("zero_cube", "clipped"):
                    core, _, _, _ = strip_decomposition((lam, mu))
                    assert fate.p + fate.q == t
                    _add_component(
                        table, (lam, mu), fate.multiplicity, fate.p, t, core, m, n
                    )
    return _finish(table, m, n, a, b, max_t)


def default_max_t(m: int, n: int, a: int, b: int) -> int:
    """Internal degree beyond which no entry can exist (conservative bound)."""
    return m * n + max(0, -a, -b, min(n - a, m - b))


def module_hilbert_dimension(m: int, n: int, a: int, b: int, j: int) -> int:
    """Dimension of the degree-j piece of the module of twisted sections."""
    return sym_dimension(a + j, m) * sym_dimension(b + j, n)


def hilbert_identity_holds(table: BettiTable, order: int | None = None) -> bool:
    """Check the alternating-sum identity between Betti numbers and the
    Hilbert series of the module, as truncated power series.

    sum_{p,t} (-1)^p betti(p,t) x^t  ==  (1-x)^{mn} * sum_j dim(module_j) x^j
    """
    if order is None:
        order = table.max_t
    m, n, a, b = table.m, table.n, table.a, table.b
    lhs = [0] * (order + 1)
    for (p, t), dim in table.betti.items():
        if t <= order:
            lhs[t] += (-1) ** p * dim
    rhs = [0] * (order + 1)
    for t in range(order + 1):
        total = 0
        for j in range(t + 1):
            total += (
                (-1) ** (t - j)
                * binomial(m * n, t - j)
                * module_hilbert_dimension(m, n, a, b, j)
            )
        rhs[t] = total
    return lhs == rhs


def strand_euler_characteristic(m: int, n: int, a: int, b: int, t: int) -> int:
    """Alternating sum of Koszul term dimensions in internal degree ``t``."""
    total = 0
    for p in range(0, min(m * n, t - max(0, -a, -b)) + 1):
        total += (
            (-1) ** p
            * binomial(m * n, p)
            * module_hilbert_dimension(m, n, a, b, t - p)
        )
    return total


def product_nonzero(
    c1: SyzygyComponent, c2: SyzygyComponent, c3: SyzygyComponent
) -> bool:
    """Whether the product of two Segre syzygy components can hit a third.

    The criterion: diagonal lengths of the cores add up, core weights add
    up, and the Littlewood-Richardson coefficient of the cores is positive.
    The LR condition is necessary for the projected wedge product to be
    non-zero; equivalence is asserted by the source material without proof
    and is validated here against its worked example only.
    """
    s1, s2, s3 = (diagonal_length(c.core) for c in (c1, c2, c3))
    if s1 + s2 != s3:
        return False
    if weight(c1.core) + weight(c2.core) != weight(c3.core):
        return False
    return lr_coefficient(c1.core, c2.core, c3.core) >= 1


@dataclass(frozen=True)
class GradedProduct:
    """A non-zero multiplication map between graded pieces of the syzygy
    algebra, with the core-partition triples that realize it."""

    source1: tuple[int, int]  # (p, t)
    source2: tuple[int, int]
    target: tuple[int, int]
    core_triples: tuple[tuple[Partition, Partition, Partition], ...]


def multiplication_table(m: int, n: int) -> list[GradedProduct]:
    """All non-zero products between positive-degree graded pieces of the
    Segre syzygy algebra, in deterministic order.

    Factors are unordered (the pair is normalized so the first graded piece
    is not larger than the second); products with the unit piece at (0, 0)
    are omitted.
    """
    table = segre_syzygies(m, n)
    comps = [c for comps in table.entries.values() for c in comps if c.p > 0]
    comps.sort(key=SyzygyComponent.sort_key)
    maps: dict[tuple, list] = {}
    for i, c1 in enumerate(comps):
        for c2 in comps[i:]:
            for c3 in comps:
                if product_nonzero(c1, c2, c3):
                    key = ((c1.p, c1.t), (c2.p, c2.t), (c3.p, c3.t))
                    maps.setdefault(key, []).append((c1.core, c2.core, c3.core))
    return [
        GradedProduct(key[0], key[1], key[2], tuple(sorted(set(triples))))
        for key, triples in sorted(maps.items())
    ]
