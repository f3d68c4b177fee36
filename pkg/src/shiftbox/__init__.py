"""Coset enumeration, shifting boxes and primitive elements for finitely presented groups."""

from .boxes import (
    clean_extract,
    extend_left_right,
    find_extraction,
    generating_left_transversal,
    left_clean,
    left_extract,
    left_right_clean,
    lr_generating_transversal_rank3,
    right_clean,
)
from .chessboard import decompose, diagonal_transversal
from .coset_enum import (
    CosetTable,
    EnumLimits,
    canonical_left_transversal,
    is_member,
    left_coset_id,
    right_coset_id,
    todd_coxeter,
    trace,
)
from .errors import GroupError, LimitExceeded, ParseError, PreconditionError
from .nielsen import GeneratingTuple, apply_move, replay
from .presentation import Presentation, SubgroupSpec, load_presentation, parse_presentation
from .primitives import (
    build_candidate_list,
    is_exceptional,
    normal_coset_primitives,
    primitive_in_each_coset,
    quotient_rank_bound_check,
    scan_subgroup,
)
from .transversal import Kind, Transversal
from .words import Alphabet, Word

__all__ = [
    "Alphabet",
    "apply_move",
    "build_candidate_list",
    "canonical_left_transversal",
    "clean_extract",
    "CosetTable",
    "decompose",
    "diagonal_transversal",
    "EnumLimits",
    "extend_left_right",
    "find_extraction",
    "generating_left_transversal",
    "GeneratingTuple",
    "GroupError",
    "is_exceptional",
    "is_member",
    "Kind",
    "left_clean",
    "left_coset_id",
    "left_extract",
    "left_right_clean",
    "LimitExceeded",
    "load_presentation",
    "lr_generating_transversal_rank3",
    "normal_coset_primitives",
    "parse_presentation",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "primitive_in_each_coset",
    "quotient_rank_bound_check",
    "replay",
    "right_clean",
    "right_coset_id",
    "scan_subgroup",
    "SubgroupSpec",
    "todd_coxeter",
    "trace",
    "Transversal",
    "Word",
]
