"""Perfect-play databases for small-board Abalone variants.

The package builds win/loss/draw databases over the full state space of
an Abalone variant by retrograde analysis, classifies constellations
into outcome classes up to board symmetry, and exposes the oracle as a
library, a command line tool and an HTTP play service.
"""

from .geometry import Board, BoardShape, Cell, Symmetry, build_board, symmetry_group
from .rules import (
    Color,
    Constellation,
    GameConfig,
    Move,
    MoveKind,
    apply_move,
    is_terminal,
    legal_moves,
    parse_constellation,
)
from .canonical import (
    Pattern,
    burnside_count,
    canonicalize,
    enumerate_classes,
    class_representatives,
    is_isomorphic,
    is_self_negative,
    match_pattern,
    negate,
    options_up_to_isomorphism,
    parse_pattern,
    transform,
)
from .solver import (
    FixpointReport,
    GameValue,
    OutcomeClass,
    Result,
    SolvedDatabase,
    solve,
)
from .store import load, save, state_index, state_space, unrank_state
from .fixtures import CONJECTURE_SHAPES, STANDARD_GAMES, FixtureSet, load_fixtures

__version__ = "0.1.0"

__all__ = [
    "Board",
    "BoardShape",
    "Cell",
    "Color",
    "Constellation",
    "CONJECTURE_SHAPES",
    "FixpointReport",
    "FixtureSet",
    "GameConfig",
    "GameValue",
    "Move",
    "MoveKind",
    "OutcomeClass",
    "Pattern",
    "Result",
    "STANDARD_GAMES",
    "SolvedDatabase",
    "Symmetry",
    "apply_move",
    "build_board",
    "burnside_count",
    "canonicalize",
    "class_representatives",
    "enumerate_classes",
    "is_isomorphic",
    "is_self_negative",
    "is_terminal",
    "legal_moves",
    "load",
    "load_fixtures",
    "match_pattern",
    "negate",
    "options_up_to_isomorphism",
    "parse_constellation",
    "parse_pattern",
    "save",
    "solve",
    "state_index",
    "state_space",
    "symmetry_group",
    "transform",
    "unrank_state",
]
