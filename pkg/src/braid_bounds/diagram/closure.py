"""
Closed-braid diagrams kept in braid-grid form: one (position, sign) crossing per
letter. All Seifert circles of such a diagram are the n braid strands.
"""

from dataclasses import dataclass

from braid_bounds.braid_core import (
    BraidWord,
    free_reduce,
    permutation,
)
from braid_bounds.braid_core.braid_word import permutation_cycles


@dataclass(frozen=True)
class ClosedBraidDiagram:
    strands: int
    crossings: tuple[tuple[int, int], ...]
    component_count: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1

    @property
    def word(self) -> BraidWord:
        return BraidWord(self.strands, tuple(i * sign for i, sign in self.crossings))

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "crossings": [[i, sign] for i, sign in self.crossings],
            "components": self.component_count,
        }


@dataclass(frozen=True)
class SeifertData:
    circles: int
    crossings: int

    @property
    def chi(self) -> int:
        return self.circles - self.crossings


def closure(w: BraidWord) -> ClosedBraidDiagram:
    crossings = tuple((abs(letter), 1 if letter > 0 else -1) for letter in w.letters)
    components = len(permutation_cycles(permutation(w)))
    return ClosedBraidDiagram(w.strands, crossings, components)


def seifert(d: ClosedBraidDiagram) -> SeifertData:
    return SeifertData(circles=d.strands, crossings=d.crossing_count)


def bennequin_chi(w: BraidWord) -> int:
    """Euler characteristic of the Seifert-algorithm surface of the reduced closure."""
    return w.strands - len(free_reduce(w))


def strand_valences(w: BraidWord) -> tuple[int, ...]:
    """Crossings incident to each strand position: occurrences of sigma_{i-1} and sigma_i."""
    valences = [0] * w.strands
    for letter in w.letters:
        i = abs(letter)
        valences[i - 1] += 1
        valences[i] += 1
    return tuple(valences)
