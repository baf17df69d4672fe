from braid_bounds.invariants.bracket import (
    jones_normalized,
    kauffman_bracket,
    loop_value,
    state_sum_bracket,
)
from braid_bounds.invariants.burau import (
    InvariantError,
    MultiComponentError,
    alexander,
    alexander_genus_lb,
    burau_reduced,
    determinant,
)
from braid_bounds.invariants.fingerprint import Fingerprint, fingerprint
from braid_bounds.invariants.homfly import (
    alexander_from_homfly,
    homfly,
    jones_from_homfly,
    mfw_lower_bound,
)
from braid_bounds.invariants.laurent import LaurentPolynomial

__all__ = [
    "Fingerprint",
    "InvariantError",
    "LaurentPolynomial",
    "MultiComponentError",
    "alexander",
    "alexander_from_homfly",
    "alexander_genus_lb",
    "burau_reduced",
    "determinant",
    "fingerprint",
    "homfly",
    "jones_from_homfly",
    "jones_normalized",
    "kauffman_bracket",
    "loop_value",
    "mfw_lower_bound",
    "state_sum_bracket",
]
