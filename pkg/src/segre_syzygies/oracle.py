"""Brute-force Koszul-complex oracle over explicit monomial bases.

For fixed dimensions (m, n), twist (a, b) and internal degree t, the strand
of the Koszul complex has, in homological position p, the monomial basis

    (wedge of a p-subset S of the m x n grid) ox x^alpha ox y^beta

with exponent vectors summing to a+t-p and b+t-p.  The differential removes
one grid cell from S with an alternating sign and bumps the matching
exponents, so it preserves the torus weight

    wU_i = alpha_i + #(cells of S in row i),
    wV_j = beta_j  + #(cells of S in column j).

Ranks are therefore computed block by block.  Inside a weight block the
exponents are determined by S (weight minus margins of S), so a block basis
is just a set of grid subsets with margin caps, and the whole strand block
is the signed subset-boundary complex.  By default only blocks with
dominant (weakly decreasing) weights are eliminated; multiplicities at the
other weights follow by symmetry of the cohomology character under
permuting coordinates, which also yields the character for free.

Ranks are taken modulo two fixed primes near 2^31 and must agree; an exact
integer fraction-free elimination backs them up (automatically on
disagreement, everywhere with ``exact=True``).

Results are cached on disk under ``$SEGRE_CACHE_DIR`` (default
``./.segre-cache``) as ``oracle/m{m}n{n}a{a}b{b}/t{t}.json``; recomputed
strands are byte-compared against existing cache files, so the cache is a
determinism audit as much as a record.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache
from hashlib import sha256
from itertools import combinations
from pathlib import Path

import numpy as np

from .characters import (
    Character,
    IrrDecomposition,
    _distinct_permutations,
    decompose,
    decomposition_to_json,
)
from .engine import BettiTable, sheaf_syzygies
from .partitions import binomial, enumerate_partitions, pad, sym_dimension

DEFAULT_PRIMES = (2147483647, 2147483629)
DEFAULT_BUDGET = 5_000_000
CACHE_FORMAT_VERSION = 1

BasisElement = tuple[tuple[tuple[int, int], ...], tuple[int, ...], tuple[int, ...]]


class BudgetExceededError(RuntimeError):
    """Predicted strand basis size above the configured budget."""


class RankDisagreementError(RuntimeError):
    """Modular ranks disagree and the exact rank matches neither."""


class CacheMismatchError(RuntimeError):
    """A recomputed strand result differs from the cached bytes."""


def differential(element: BasisElement) -> list[tuple[int, BasisElement]]:
    """Formal differential of one basis element, as (sign, element) terms.

    Removes each cell (i, j) of the sorted wedge support in turn, with sign
    (-1)^position, and increments the i-th row exponent and j-th column
    exponent.  Applying it twice cancels pairwise.
    """
    support, alpha, beta = element
    out: list[tuple[int, BasisElement]] = []
    for idx, (i, j) in enumerate(support):
        rest = support[:idx] + support[idx + 1 :]
        alpha2 = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1 :]
        beta2 = beta[:j] + (beta[j] + 1,) + beta[j + 1 :]
        out.append(((-1) ** idx, (rest, alpha2, beta2)))
    return out


def element_weight(element: BasisElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Torus weight (wU, wV) of a basis element."""
    support, alpha, beta = element
    wU = list(alpha)
    wV = list(beta)
    for i, j in support:
        wU[i] += 1
        wV[j] += 1
    return tuple(wU), tuple(wV)


@cache
def _grid_tables(m: int, n: int):
    """Subsets of the m x n grid grouped by size, with margins and boundaries.

    Returns (subsets, row_margins, col_margins, boundary) where, for size p,
    ``subsets[p]`` lists the sorted cell tuples, the margin arrays give row
    and column counts, and ``boundary[p][i]`` lists (index of child subset
    of size p-1, sign) pairs consistent with :func:`differential`.
    """
    cells = [(i, j) for i in range(m) for j in range(n)]
    subsets: list[list[tuple[tuple[int, int], ...]]] = []
    index: list[dict[tuple[tuple[int, int], ...], int]] = []
    row_m: list[np.ndarray] = []
    col_m: list[np.ndarray] = []
    for p in range(m * n + 1):
        level = list(combinations(cells, p))
        subsets.append(level)
        index.append({s: i for i, s in enumerate(level)})
        rm = np.zeros((len(level), m), dtype=np.int8)
        cm = np.zeros((len(level), n), dtype=np.int8)
        for i, s in enumerate(level):
            for (r, c) in s:
                rm[i, r] += 1
                cm[i, c] += 1
        row_m.append(rm)
        col_m.append(cm)
    boundary: list[list[list[tuple[int, int]]]] = [[]]
    for p in range(1, m * n + 1):
        level = []
        for s in subsets[p]:
            terms = []
            for idx in range(p):
                child = s[:idx] + s[idx + 1 :]
                terms.append((index[p - 1][child], (-1) ** idx))
            level.append(terms)
        boundary.append(level)
    return subsets, row_m, col_m, boundary


@dataclass
class Strand:
    """One internal-degree slice of the Koszul complex.

    ``positions`` are the homological degrees with a non-zero term;
    ``blocks`` lists (wU, wV, orbit size) for the weight blocks to be
    eliminated.  With ``dominant_only`` the orbit size counts the distinct
    coordinate permutations the block stands for; otherwise it is 1.
    """

    m: int
    n: int
    a: int
    b: int
    t: int
    dominant_only: bool
    positions: tuple[int, ...]
    blocks: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]
    term_dims: dict[int, int]

    def block_bases(self, wU: tuple[int, ...], wV: tuple[int, ...]) -> dict[int, list[int]]:
        """Indices (into the size-p grid subset lists) of the block basis."""
        return _block_bases(self.m, self.n, self.positions, wU, wV)

    def block_elements(self, wU, wV) -> dict[int, list[BasisElement]]:
        """Explicit (support, alpha, beta) bases of one weight block."""
        subsets, row_m, col_m, _ = _grid_tables(self.m, self.n)
        out: dict[int, list[BasisElement]] = {}
        for p, idxs in self.block_bases(wU, wV).items():
            elems = []
            for i in idxs:
                alpha = tuple(int(w - r) for w, r in zip(wU, row_m[p][i]))
                beta = tuple(int(w - c) for w, c in zip(wV, col_m[p][i]))
                elems.append((subsets[p][i], alpha, beta))
            out[p] = elems
        return out


def _block_bases(m, n, positions, wU, wV) -> dict[int, list[int]]:
    _, row_m, col_m, _ = _grid_tables(m, n)
    wU_arr = np.asarray(wU, dtype=np.int8)
    wV_arr = np.asarray(wV, dtype=np.int8)
    out: dict[int, list[int]] = {}
    for p in positions:
        mask = np.all(row_m[p] <= wU_arr, axis=1) & np.all(col_m[p] <= wV_arr, axis=1)
        out[p] = np.nonzero(mask)[0].tolist()
    return out


def build_strand(
    m: int,
    n: int,
    a: int,
    b: int,
    t: int,
    dominant_only: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> Strand:
    """Assemble the internal-degree-t strand for the twisted module (a, b)."""
    if t < 0:
        raise ValueError("internal degree must be non-negative")
    if m * n > 16:
        raise BudgetExceededError(f"grid {m}x{n} exceeds the supported 16 cells")
    p_hi = min(m * n, t - max(0, -a, -b))
    positions = tuple(range(0, p_hi + 1)) if p_hi >= 0 else ()
    term_dims = {
        p: binomial(m * n, p)
        * sym_dimension(a + t - p, m)
        * sym_dimension(b + t - p, n)
        for p in positions
    }
    total = sum(term_dims.values())
    if total > budget:
        raise BudgetExceededError(
            f"strand (m={m}, n={n}, a={a}, b={b}, t={t}) has {total} basis elements, "
            f"budget is {budget}"
        )
    blocks: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
    if positions and t + a >= 0 and t + b >= 0:
        if dominant_only:
            us = [pad(lam, m) for lam in enumerate_partitions(t + a, m, t + a)]
            vs = [pad(mu, n) for mu in enumerate_partitions(t + b, n, t + b)]
            for wU in us:
                for wV in vs:
                    orbit = len(_distinct_permutations(wU)) * len(
                        _distinct_permutations(wV)
                    )
                    blocks.append((wU, wV, orbit))
        else:
            from .partitions import iter_weight_vectors

            for wU in iter_weight_vectors(t + a, m):
                for wV in iter_weight_vectors(t + b, n):
                    blocks.append((wU, wV, 1))
    return Strand(m, n, a, b, t, dominant_only, positions, tuple(blocks), term_dims)


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Gaussian elimination rank over GF(p); entries may be any int64."""
    if matrix.size == 0:
        return 0
    A = np.mod(matrix.astype(np.int64, copy=True), p)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = np.nonzero(A[r + 1 :, c])[0]
        if below.size:
            idx = below + r + 1
            A[idx, c:] = (A[idx, c:] - np.outer(A[idx, c], A[r, c:])) % p
        r += 1
    return r


def _rank_exact(matrix: np.ndarray) -> int:
    """Fraction-free (Bareiss) elimination rank over the integers."""
    rows = [[int(x) for x in row] for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    rank = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][c]
        for i in range(rank + 1, n_rows):
            fi = rows[i][c]
            ri = rows[i]
            pr = rows[rank]
            for j in range(c + 1, n_cols):
                ri[j] = (lead * ri[j] - fi * pr[j]) // prev
            ri[c] = 0
        prev = lead
        rank += 1
        if rank == n_rows:
            break
    return rank


def block_rank(
    matrix: np.ndarray,
    primes: tuple[int, int] = DEFAULT_PRIMES,
    exact: bool = False,
) -> int:
    """Rank of an integer block matrix, exact over the rationals.

    Default path: rank over GF(p) for the two primes, which must agree; on
    disagreement the exact integer elimination arbitrates (and must confirm
    one of the two, since a bad prime can only lower the rank).
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.size == 0:
        return 0
    if exact:
        return _rank_exact(matrix)
    r1 = _rank_mod_p(matrix, primes[0])
    r2 = _rank_mod_p(matrix, primes[1])
    if r1 == r2:
        return r1
    r_exact = _rank_exact(matrix)
    if r_exact not in (r1, r2):
        raise RankDisagreementError(
            f"modular ranks {r1}/{r2} disagree and exact rank is {r_exact}"
        )
    return r_exact


def _block_matrices(m, n, positions, bases) -> dict[int, np.ndarray]:
    """Differential matrices basis_p -> basis_{p-1} inside one block."""
    _, _, _, boundary = _grid_tables(m, n)
    mats: dict[int, np.ndarray] = {}
    for p in positions:
        if p == positions[0]:
            continue
        rows = bases[p - 1]
        cols = bases[p]
        loc = {g: i for i, g in enumerate(rows)}
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c_local, g in enumerate(cols):
            for child, sign in boundary[p][g]:
                # margins only shrink when a cell is removed, so the child
                # always belongs to the same block
                M[loc[child], c_local] = sign
        mats[p] = M
    return mats


def _block_cohomology(
    m, n, positions, wU, wV, primes, exact, check_dd
) -> dict[int, int]:
    """Cohomology dimensions of one weight block, keyed by position."""
    bases = _block_bases(m, n, positions, wU, wV)
    mats = _block_matrices(m, n, positions, bases)
    ranks = {p: block_rank(M, primes, exact) for p, M in mats.items()}
    if check_dd:
        for p in positions:
            if p in mats and (p + 1) in mats:
                prod = mats[p] @ mats[p + 1]
                if prod.size and np.any(prod):
                    raise AssertionError(
                        f"d o d != 0 in block {(wU, wV)} at position {p + 1}"
                    )
    dims: dict[int, int] = {}
    for p in positions:
        h = len(bases[p]) - ranks.get(p, 0) - ranks.get(p + 1, 0)
        if h < 0:
            raise RankDisagreementError(
                f"negative cohomology dimension in block {(wU, wV)} at p={p}"
            )
        if h:
            dims[p] = h
    return dims


def _block_job(args):
    m, n, positions, wU, wV, primes, exact, check_dd = args
    return wU, wV, _block_cohomology(m, n, positions, wU, wV, primes, exact, check_dd)


@dataclass
class CohomologyReport:
    """Per-position cohomology of one strand, with optional characters."""

    m: int
    n: int
    a: int
    b: int
    t: int
    dims: dict[int, int] = field(default_factory=dict)
    decompositions: dict[int, IrrDecomposition] = field(default_factory=dict)
    characters: dict[int, Character] | None = None
    primes: tuple[int, int] | None = DEFAULT_PRIMES

    def character_digest(self) -> str:
        payload = [
            [p, decomposition_to_json(self.decompositions[p])]
            for p in sorted(self.decompositions)
        ]
        return sha256(json.dumps(payload, separators=(",", ":")).encode()).hexdigest()

    def cache_payload(self) -> bytes:
        doc = {
            "dims": {str(p): d for p, d in sorted(self.dims.items())},
            "character_digest": self.character_digest(),
            "primes": list(self.primes) if self.primes else [],
            "version": CACHE_FORMAT_VERSION,
        }
        return (json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n").encode()


def strand_cohomology(
    strand: Strand,
    with_character: bool = True,
    exact: bool = False,
    jobs: int = 1,
    primes: tuple[int, int] = DEFAULT_PRIMES,
    check_dd: bool = True,
) -> CohomologyReport:
    """Compute the cohomology of a strand blockwise.

    Per-block dimensions are multiplied by the orbit size of the block
    weight; with ``with_character`` the per-weight dimensions are assembled
    into characters (one per position) and decomposed into irreducibles.
    Raises on rank disagreement or a failed character decomposition, both of
    which would signal a construction bug.
    """
    job_args = [
        (strand.m, strand.n, strand.positions, wU, wV, primes, exact, check_dd)
        for wU, wV, _ in strand.blocks
    ]
    if jobs > 1 and len(job_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_job, job_args, chunksize=4))
    else:
        results = [_block_job(args) for args in job_args]

    orbit = {(wU, wV): mult for wU, wV, mult in strand.blocks}
    dims: dict[int, int] = {}
    chars: dict[int, Character] = {}
    for wU, wV, block_dims in results:
        mult = orbit[(wU, wV)]
        for p, h in block_dims.items():
            dims[p] = dims.get(p, 0) + mult * h
            if with_character:
                char = chars.setdefault(p, Character(strand.m, strand.n))
                if strand.dominant_only:
                    for pU in _distinct_permutations(wU):
                        for pV in _distinct_permutations(wV):
                            char.add(pU, pV, h)
                else:
                    char.add(wU, wV, h)

    report = CohomologyReport(
        strand.m,
        strand.n,
        strand.a,
        strand.b,
        strand.t,
        dims=dims,
        primes=None if exact else primes,
    )
    if with_character:
        report.characters = chars
        for p, char in chars.items():
            assert char.mass() == dims[p]
            report.decompositions[p] = decompose(char)
    return report


# ---------------------------------------------------------------------------
# Disk cache


def cache_root() -> Path:
    return Path(os.environ.get("SEGRE_CACHE_DIR", ".segre-cache"))


def _cache_file(m, n, a, b, t) -> Path:
    return cache_root() / "oracle" / f"m{m}n{n}a{a}b{b}" / f"t{t}.json"


def _atomic_write(path: Path, payload: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def record_strand_result(report: CohomologyReport) -> None:
    """Write a strand result to the cache, byte-comparing against any
    existing entry (a mismatch means nondeterminism or corruption)."""
    path = _cache_file(report.m, report.n, report.a, report.b, report.t)
    payload = report.cache_payload()
    if path.exists():
        existing = path.read_bytes()
        if existing != payload:
            raise CacheMismatchError(f"cached strand result at {path} differs")
        return
    _atomic_write(path, payload)


def cache_stats() -> dict:
    root = cache_root() / "oracle"
    files = sorted(root.rglob("t*.json")) if root.exists() else []
    return {
        "root": str(cache_root()),
        "entries": len(files),
        "bytes": sum(f.stat().st_size for f in files),
    }


def cache_clear() -> int:
    """Remove all cached oracle entries, returning how many were deleted."""
    root = cache_root() / "oracle"
    if not root.exists():
        return 0
    removed = 0
    for f in sorted(root.rglob("t*.json")):
        f.unlink()
        removed += 1
    for d in sorted((p for p in root.rglob("*") if p.is_dir()), reverse=True):
        if not any(d.iterdir()):
            d.rmdir()
    return removed


# ---------------------------------------------------------------------------
# Verification against the closed form


@dataclass(frozen=True)
class MatchRow:
    p: int
    t: int
    oracle_dim: int
    table_dim: int
    dims_match: bool
    components_match: bool | None  # None when characters were not compared


@dataclass
class ComparisonReport:
    """Outcome of comparing oracle cohomology with the closed-form table."""

    m: int
    n: int
    a: int
    b: int
    t_max: int
    rows: list[MatchRow] = field(default_factory=list)
    strand_status: dict[int, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def mismatches(self) -> list[MatchRow]:
        return [
            r
            for r in self.rows
            if not r.dims_match or r.components_match is False
        ]

    @property
    def matched(self) -> bool:
        return not self.mismatches


def verify(
    m: int,
    n: int,
    a: int,
    b: int,
    t_max: int,
    with_characters: bool = True,
    exact: bool = False,
    jobs: int | None = None,
    no_cache: bool = False,
    budget: int = DEFAULT_BUDGET,
    table: BettiTable | None = None,
) -> ComparisonReport:
    """Compare the oracle against the closed-form table strand by strand.

    Every (p, t) with t <= t_max is checked for equal dimensions and (when
    ``with_characters``) equal component multisets.  Mismatches are data in
    the report, not exceptions.  Unless ``no_cache`` is set, each strand
    result is recorded in the disk cache and byte-compared against any
    earlier run.
    """
    if table is None:
        table = sheaf_syzygies(m, n, a, b, t_max)
    report = ComparisonReport(m, n, a, b, t_max)
    if a == -m or b == -n:
        report.warnings.append(
            f"twist ({a}, {b}) sits on the boundary of the admissible range: "
            "the table computes Tor of the graded module of twisted sections, "
            "which may differ from sheaf cohomology there"
        )
    jobs = jobs or os.cpu_count() or 1
    for t in range(t_max + 1):
        strand = build_strand(m, n, a, b, t, budget=budget)
        table_ps = {p for (p, tt) in table.entries if tt == t}
        if not strand.positions and not table_ps:
            report.strand_status[t] = "empty"
            continue
        cohomology = strand_cohomology(
            strand, with_character=with_characters, exact=exact, jobs=jobs
        )
        if not no_cache:
            record_strand_result(cohomology)
        strand_ok = True
        for p in sorted(set(strand.positions) | table_ps | set(cohomology.dims)):
            odim = cohomology.dims.get(p, 0)
            tdim = table.dimension(p, t)
            comp_match: bool | None = None
            if with_characters and (odim or tdim):
                comp_match = (
                    cohomology.decompositions.get(p, {})
                    == table.component_multiset(p, t)
                )
            dims_match = odim == tdim
            if odim or tdim or not dims_match:
                report.rows.append(
                    MatchRow(p, t, odim, tdim, dims_match, comp_match)
                )
            if not dims_match or comp_match is False:
                strand_ok = False
        report.strand_status[t] = "MATCH" if strand_ok else "MISMATCH"
    return report
