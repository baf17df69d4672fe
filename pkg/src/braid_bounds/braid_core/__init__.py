from braid_bounds.braid_core.braid_word import (
    BraidError,
    BraidLetter,
    BraidParseError,
    BraidWord,
    GeneratorRangeError,
    StrandMismatchError,
    canonical_rotation,
    component_count,
    compose,
    conjugate,
    cyclic_reduce,
    delta,
    exponent_sum,
    free_reduce,
    inverse,
    is_cyclic_rotation,
    least_rotation,
    parse_braid_word,
    permutation,
    power,
    rotate,
)
from braid_bounds.braid_core.free_group import FreeGroupWord, artin_action, braid_eq
from braid_bounds.braid_core.moves import (
    MarkovMoveError,
    ab_tile_word,
    band_generator,
    exchange_move,
    markov_destabilize,
    markov_stabilize,
)

__all__ = [
    "BraidError",
    "BraidLetter",
    "BraidParseError",
    "BraidWord",
    "FreeGroupWord",
    "GeneratorRangeError",
    "MarkovMoveError",
    "StrandMismatchError",
    "ab_tile_word",
    "artin_action",
    "band_generator",
    "braid_eq",
    "canonical_rotation",
    "component_count",
    "compose",
    "conjugate",
    "cyclic_reduce",
    "delta",
    "exchange_move",
    "exponent_sum",
    "free_reduce",
    "inverse",
    "is_cyclic_rotation",
    "least_rotation",
    "markov_destabilize",
    "markov_stabilize",
    "parse_braid_word",
    "permutation",
    "power",
    "rotate",
]
