"""Equivariant syzygies of Segre embeddings.

Closed-form Betti tables (with their GL(U) x GL(V) decompositions) for the
Segre embedding of P(U) x P(V) and for the graded modules of twisted
sections of O(a, b), together with an exact brute-force Koszul-complex
oracle that recomputes every number from monomial bases and modular ranks.
"""

from .characters import (
    Character,
    NotACharacterError,
    cauchy_wedge,
    decompose,
    kostka,
    lr_coefficient,
    pieri_row,
    schur_pair_character,
)
from .engine import (
    BettiTable,
    ComponentFate,
    GradedProduct,
    RangeError,
    SyzygyComponent,
    classify_weight,
    default_max_t,
    hilbert_identity_holds,
    multiplication_table,
    product_nonzero,
    segre_syzygies,
    sheaf_syzygies,
    strand_euler_characteristic,
)
from .errata import load_errata
from .marked_diagrams import (
    MarkedDiagram,
    enumerate_marked_diagrams,
    lr_markable_boxes,
    strip_decomposition,
)
from .oracle import (
    BudgetExceededError,
    CacheMismatchError,
    CohomologyReport,
    ComparisonReport,
    RankDisagreementError,
    Strand,
    block_rank,
    build_strand,
    differential,
    strand_cohomology,
    verify,
)
from .partitions import (
    conjugate,
    diagonal_length,
    enumerate_partitions,
    extend_columns,
    schur_dimension,
    shifted_diagonal_length,
)
from .render import parse_json, render, render_json, render_latex, render_text, resolution_chain

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BudgetExceededError",
    "CacheMismatchError",
    "Character",
    "CohomologyReport",
    "ComparisonReport",
    "ComponentFate",
    "GradedProduct",
    "MarkedDiagram",
    "NotACharacterError",
    "RangeError",
    "RankDisagreementError",
    "Strand",
    "SyzygyComponent",
    "block_rank",
    "build_strand",
    "cauchy_wedge",
    "classify_weight",
    "conjugate",
    "decompose",
    "default_max_t",
    "diagonal_length",
    "differential",
    "enumerate_marked_diagrams",
    "enumerate_partitions",
    "extend_columns",
    "hilbert_identity_holds",
    "kostka",
    "load_errata",
    "lr_coefficient",
    "lr_markable_boxes",
    "multiplication_table",
    "parse_json",
    "pieri_row",
    "product_nonzero",
    "render",
    "render_json",
    "render_latex",
    "render_text",
    "resolution_chain",
    "schur_dimension",
    "schur_pair_character",
    "segre_syzygies",
    "sheaf_syzygies",
    "shifted_diagonal_length",
    "strand_cohomology",
    "strand_euler_characteristic",
    "strip_decomposition",
    "verify",
]
