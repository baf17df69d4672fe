"""
Invariant fingerprints: a sound way to tell closures apart, not to identify them.
Equal fingerprints never prove two closures are the same knot.
"""

import json
from dataclasses import dataclass
from typing import Optional

from braid_bounds.braid_core import BraidWord, component_count
from braid_bounds.invariants.bracket import jones_normalized
from braid_bounds.invariants.burau import alexander
from braid_bounds.invariants.laurent import LaurentPolynomial


@dataclass(frozen=True)
class Fingerprint:
    jones: LaurentPolynomial
    alexander: Optional[LaurentPolynomial]
    components: int

    def to_json(self) -> dict:
        return {
            "jones": self.jones.to_json(),
            "alexander": self.alexander.to_json() if self.alexander is not None else None,
            "components": self.components,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Fingerprint":
        alex = payload.get("alexander")
        return cls(
            jones=LaurentPolynomial.from_json(payload["jones"]),
            alexander=LaurentPolynomial.from_json(alex) if alex is not None else None,
            components=int(payload["components"]),
        )

    def sort_key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def fingerprint(w: BraidWord) -> Fingerprint:
    components = component_count(w)
    return Fingerprint(
        jones=jones_normalized(w),
        alexander=alexander(w) if components == 1 else None,
        components=components,
    )
