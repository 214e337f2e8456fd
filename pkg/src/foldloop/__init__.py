"""Closed braids, boundary linking numbers and the odd-loop law for folded bands."""

from .band import (
    DoubledDiagram,
    FlatBand,
    TheoremVerdict,
    boundary_linking_number,
    boundary_linking_number_fast,
    check_theorem,
    double,
    is_valid_fold,
    required_twists,
)
from .braid import (
    BraidWord,
    Generator,
    ParityVerdict,
    Permutation,
    apply_braid_relation,
    check_statement2,
    component_count,
    cyclic_shift,
    exponent_sum,
    permutation_of,
    permutation_parity,
)
from .folds import FoldReport, SearchSummary, enumerate_words, make_fold, nest, search_folds
from .linkdiag import (
    ComponentLabeling,
    Crossing,
    OrientationAssignment,
    crossings,
    linking_number,
    self_writhe,
    strand_components,
)
from .render import render_diagram
from .wordtext import format_word, parse_word

__version__ = "0.1.0"
